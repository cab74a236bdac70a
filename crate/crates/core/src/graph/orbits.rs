//! Orbits of the automorphism group on vertices, edges and non-edges.

use super::canon::canonical_form;
use super::group::Perm;
use super::SmallGraph;
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitKind {
    Vertex,
    Edge,
    NonEdge,
}

/// One orbit; members are vertex sets (one or two vertices) as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub kind: OrbitKind,
    /// Members sorted lexicographically by their vertex tuples.
    pub members: Vec<u16>,
    /// Number of vertices adjacent to every vertex of a member.
    pub degree: usize,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// The lexicographically least member.
    pub fn representative(&self) -> u16 {
        self.members[0]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub vertex_orbits: Vec<Orbit>,
    pub edge_orbits: Vec<Orbit>,
    pub nonedge_orbits: Vec<Orbit>,
}

pub fn orbits(g: &SmallGraph) -> OrbitDecomposition {
    orbits_with(g, &canonical_form(g).generators)
}

/// Orbit decomposition under the group generated by `gens`.
pub fn orbits_with(g: &SmallGraph, gens: &[Perm]) -> OrbitDecomposition {
    let n = g.order();
    let vertices: Vec<u16> = (0..n).map(|v| 1 << v).collect();
    let edges: Vec<u16> = g.edges().map(|(u, v)| 1 << u | 1 << v).collect();
    let nonedges: Vec<u16> = g.nonedges().map(|(u, v)| 1 << u | 1 << v).collect();
    OrbitDecomposition {
        vertex_orbits: split(g, gens, OrbitKind::Vertex, &vertices),
        edge_orbits: split(g, gens, OrbitKind::Edge, &edges),
        nonedge_orbits: split(g, gens, OrbitKind::NonEdge, &nonedges),
    }
}

fn image(p: &Perm, set: u16) -> u16 {
    let mut out = 0;
    let mut m = set;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        out |= 1 << p[v];
    }
    out
}

/// Sort key giving lexicographic order on the sorted vertex tuple.
fn tuple_key(set: u16) -> (u32, u32) {
    let lo = set.trailing_zeros();
    let rest = set & (set - 1);
    (lo, if rest == 0 { 0 } else { rest.trailing_zeros() })
}

fn split(g: &SmallGraph, gens: &[Perm], kind: OrbitKind, items: &[u16]) -> Vec<Orbit> {
    let mut sorted = items.to_vec();
    sorted.sort_by_key(|&s| tuple_key(s));
    let mut assigned = alloc::vec![false; sorted.len()];
    let index_of = |s: u16| sorted.iter().position(|&x| x == s).expect("generator preserves the item set");
    let mut out = Vec::new();
    for start in 0..sorted.len() {
        if assigned[start] {
            continue;
        }
        assigned[start] = true;
        let mut members = Vec::from([sorted[start]]);
        let mut i = 0;
        while i < members.len() {
            let s = members[i];
            for p in gens {
                let t = image(p, s);
                let j = index_of(t);
                if !assigned[j] {
                    assigned[j] = true;
                    members.push(t);
                }
            }
            i += 1;
        }
        members.sort_by_key(|&s| tuple_key(s));
        let mut common = g.vertex_mask();
        let mut m = members[0];
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            common &= g.neighbors(v);
        }
        out.push(Orbit { kind, members, degree: common.count_ones() as usize });
    }
    out
}
