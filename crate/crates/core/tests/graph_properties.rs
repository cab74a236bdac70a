use proptest::prelude::*;
use srg_core::graph::graph6::{graph6_decode, graph6_encode};
use srg_core::graph::{canonical_form, canonical_key, enumerate_graphs, extension_count, orbits, GraphClass, Orbit, OrbitKind, PermGroup, SmallGraph};

fn graph_from_code(n: usize, code: u128) -> SmallGraph {
    let mut g = SmallGraph::empty(n);
    let mut bit = 0;
    for j in 0..n {
        for i in 0..j {
            if code >> bit & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    g
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, (n - 1) as u8);
            out.push(q);
        }
    }
    out
}

#[test]
fn canonical_key_is_invariant_for_all_small_labelled_graphs() {
    for n in 1..=5 {
        let perms = permutations(n);
        let mut classes = std::collections::BTreeSet::new();
        for code in 0..1u128 << (n * (n - 1) / 2) {
            let g = graph_from_code(n, code);
            let key = canonical_key(&g);
            for p in &perms {
                assert_eq!(canonical_key(&g.permuted(p)), key, "order {n} code {code:b}");
            }
            classes.insert(key);
        }
        assert_eq!(classes.len(), [1, 2, 4, 11, 34][n - 1]);
    }
}

fn arb_graph(max: usize) -> impl Strategy<Value = SmallGraph> {
    (1..=max).prop_flat_map(|n| (Just(n), any::<u128>())).prop_map(|(n, code)| graph_from_code(n, code))
}

fn arb_graph_and_perm(max: usize) -> impl Strategy<Value = (SmallGraph, Vec<u8>)> {
    arb_graph(max).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n as u8).collect::<Vec<u8>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn canonical_key_is_invariant((g, p) in arb_graph_and_perm(11)) {
        prop_assert_eq!(canonical_key(&g), canonical_key(&g.permuted(&p)));
    }

    #[test]
    fn canonical_labeling_is_an_isomorphism(g in arb_graph(11)) {
        let form = canonical_form(&g);
        prop_assert_eq!(canonical_key(&form.key.to_graph()), form.key);
        prop_assert_eq!(form.key.to_graph().edge_count(), g.edge_count());
    }

    #[test]
    fn generators_are_automorphisms(g in arb_graph(10)) {
        let form = canonical_form(&g);
        for gen in &form.generators {
            prop_assert_eq!(&g.permuted(&gen[..g.order()]), &g);
        }
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        let text = graph6_encode(&g);
        prop_assert_eq!(graph6_decode(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn orbit_sizes_sum_and_divide_group_order(g in arb_graph(9)) {
        let form = canonical_form(&g);
        let group = PermGroup::new(g.order(), &form.generators).order();
        let d = orbits(&g);
        let sum = |v: &[Orbit]| v.iter().map(Orbit::size).sum::<usize>();
        prop_assert_eq!(sum(&d.vertex_orbits), g.order());
        prop_assert_eq!(sum(&d.edge_orbits), g.edge_count());
        prop_assert_eq!(sum(&d.nonedge_orbits), g.nonedge_count());
        for o in d.vertex_orbits.iter().chain(&d.edge_orbits).chain(&d.nonedge_orbits) {
            prop_assert_eq!(group % o.size() as u64, 0);
        }
    }
}

#[test]
fn orbit_sums_on_every_enumerated_graph() {
    for (o, class) in [(7, GraphClass::General), (8, GraphClass::TriangleFree), (9, GraphClass::TriangleAndQuadrangleFree)] {
        for g in enumerate_graphs(o, class).unwrap() {
            let d = orbits(&g);
            assert_eq!(d.vertex_orbits.iter().map(Orbit::size).sum::<usize>(), g.order());
            assert_eq!(d.edge_orbits.iter().map(Orbit::size).sum::<usize>(), g.edge_count());
            assert_eq!(d.nonedge_orbits.iter().map(Orbit::size).sum::<usize>(), g.nonedge_count());
        }
    }
}

/// For `h - u` isomorphic to `g`: the members of the orbit, carried over by
/// any isomorphism found by brute force, whose vertices all see `u`.
fn brute_extension(g: &SmallGraph, orbit: &Orbit, h: &SmallGraph, u: usize) -> u64 {
    let rest: Vec<usize> = (0..h.order()).filter(|&v| v != u).collect();
    let n = g.order();
    for p in permutations(n) {
        // p maps vertex i of g to rest[p[i]].
        let iso = (0..n).all(|i| (0..n).all(|j| i == j || g.has_edge(i, j) == h.has_edge(rest[p[i] as usize], rest[p[j] as usize])));
        if iso {
            return orbit
                .members
                .iter()
                .filter(|m| (0..n).filter(|i| *m >> i & 1 == 1).all(|i| h.has_edge(rest[p[i] as usize], u)))
                .count() as u64;
        }
    }
    0
}

#[test]
fn extension_counts_match_brute_force() {
    for o in 1..=4 {
        let lower = enumerate_graphs(o, GraphClass::General).unwrap();
        let upper = enumerate_graphs(o + 1, GraphClass::General).unwrap();
        for g in &lower {
            let d = orbits(g);
            for orbit in d.vertex_orbits.iter().chain(&d.edge_orbits).chain(&d.nonedge_orbits) {
                // Total incidences over all one-vertex extensions.
                let mut total = 0;
                let mut brute_total = 0;
                for h in &upper {
                    for u in 0..h.order() {
                        let f = extension_count(g, orbit, h, u);
                        assert_eq!(f, brute_extension(g, orbit, h, u), "{g:?} {orbit:?} {h:?} {u}");
                        total += f;
                        brute_total += brute_extension(g, orbit, h, u);
                    }
                }
                assert_eq!(total, brute_total);
                if orbit.kind == OrbitKind::Vertex {
                    assert!(total > 0);
                }
            }
        }
    }
}

#[test]
fn enumeration_counts() {
    let want: [(GraphClass, &[usize]); 3] = [
        (GraphClass::General, &[1, 2, 4, 11, 34, 156, 1044, 12346]),
        (GraphClass::TriangleFree, &[1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172]),
        (GraphClass::TriangleAndQuadrangleFree, &[1, 2, 3, 6, 11, 23, 48, 114, 293, 869, 2963]),
    ];
    for (class, counts) in want {
        for (i, &c) in counts.iter().enumerate() {
            assert_eq!(enumerate_graphs(i + 1, class).unwrap().len(), c, "{class:?} order {}", i + 1);
        }
    }
}
