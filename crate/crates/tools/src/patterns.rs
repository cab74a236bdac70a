//! Names for the small graphs used on the command line.

use srg_core::graph::graph6::graph6_decode;
use srg_core::graph::{canonical_key, CanonicalKey, SmallGraph, MAX_ORDER};

/// Parses `K1`, `K2`, `E3` (edgeless), `C5`, `P4` (path on four vertices),
/// `K3,3`, `petersen`, `K1,4+e`, or a graph6 string.
pub fn parse_pattern(text: &str) -> Result<SmallGraph, String> {
    let t = text.trim();
    let lower = t.to_ascii_lowercase();
    if lower == "petersen" {
        return Ok(SmallGraph::petersen());
    }
    if lower == "k1,4+e" {
        let mut g = SmallGraph::complete_bipartite(1, 4);
        g.add_edge(1, 2);
        return Ok(g);
    }
    if let Some(g) = parse_family(t) {
        return g;
    }
    graph6_decode(t.as_bytes()).map_err(|e| format!("unknown pattern {t:?}: {e}"))
}

fn parse_family(t: &str) -> Option<Result<SmallGraph, String>> {
    let (head, rest) = t.split_at(t.char_indices().nth(1)?.0);
    let order = |s: &str| -> Result<usize, String> {
        let n: usize = s.parse().map_err(|_| format!("bad size in {t:?}"))?;
        if n == 0 || n > MAX_ORDER {
            return Err(format!("size {n} outside 1..={MAX_ORDER}"));
        }
        Ok(n)
    };
    if !rest.chars().next()?.is_ascii_digit() {
        return None;
    }
    Some(match head {
        "K" => match rest.split_once(',') {
            Some((a, b)) => order(a).and_then(|a| {
                let b = order(b)?;
                if a + b > MAX_ORDER {
                    return Err(format!("{t} has more than {MAX_ORDER} vertices"));
                }
                Ok(SmallGraph::complete_bipartite(a, b))
            }),
            None => order(rest).map(SmallGraph::complete),
        },
        "E" => order(rest).map(SmallGraph::empty),
        "C" => order(rest).and_then(|n| if n < 3 { Err(format!("{t} is not a cycle")) } else { Ok(SmallGraph::cycle(n)) }),
        "P" => order(rest).map(SmallGraph::path),
        _ => return None,
    })
}

/// A short name for the graphs that have one.
pub fn pattern_name(key: &CanonicalKey) -> Option<String> {
    let named: [(&str, SmallGraph); 12] = [
        ("petersen", SmallGraph::petersen()),
        ("K3,3", SmallGraph::complete_bipartite(3, 3)),
        ("K3,4", SmallGraph::complete_bipartite(3, 4)),
        ("K2,3", SmallGraph::complete_bipartite(2, 3)),
        ("K1,3", SmallGraph::complete_bipartite(1, 3)),
        ("K1,4", SmallGraph::complete_bipartite(1, 4)),
        ("K1,4+e", parse_pattern("K1,4+e").expect("fixed name")),
        ("C4", SmallGraph::cycle(4)),
        ("C5", SmallGraph::cycle(5)),
        ("P4", SmallGraph::path(4)),
        ("K1", SmallGraph::empty(1)),
        ("K2", SmallGraph::complete(2)),
    ];
    named.into_iter().find(|(_, g)| canonical_key(g) == *key).map(|(n, _)| n.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for name in ["petersen", "K3,3", "K1,4+e", "C5", "P4", "K2"] {
            let g = parse_pattern(name).unwrap();
            assert_eq!(pattern_name(&canonical_key(&g)).as_deref(), Some(name));
        }
        assert_eq!(parse_pattern("E3").unwrap().edge_count(), 0);
        assert_eq!(parse_pattern("P4").unwrap().edge_count(), 3);
        assert!(parse_pattern("K7,7").is_err());
        assert_eq!(parse_pattern("Bw").unwrap().order(), 3);
    }
}
