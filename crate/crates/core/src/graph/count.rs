//! Induced-subgraph counts inside small hosts.

use super::canon::{canonical_form, canonical_key, CanonicalForm};
use super::group::{compose, inverse, Perm};
use super::orbits::Orbit;
use super::SmallGraph;

/// Number of vertex subsets of `host` inducing a copy of `pattern`.
pub fn count_induced(pattern: &SmallGraph, host: &SmallGraph) -> u64 {
    let k = pattern.order();
    let n = host.order();
    if k > n {
        return 0;
    }
    let key = canonical_key(pattern);
    let edges = pattern.edge_count();
    let mut count = 0;
    for_each_subset(n, k, |mask| {
        let sub = host.induced(mask);
        if sub.edge_count() == edges && canonical_key(&sub) == key {
            count += 1;
        }
    });
    count
}

/// Calls `f` on every `k`-subset of `0..n` as a bitmask, in increasing order.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(u16)) {
    if k == 0 {
        f(0);
        return;
    }
    if k > n {
        return;
    }
    let mut mask: u32 = (1 << k) - 1;
    let limit = 1u32 << n;
    while mask < limit {
        f(mask as u16);
        // Gosper's hack.
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

/// An isomorphism `g -> h` as a vertex map, when one exists.
pub(crate) fn isomorphism(g: &CanonicalForm, h: &CanonicalForm) -> Option<Perm> {
    (g.key == h.key).then(|| compose(&g.labeling, &inverse(&h.labeling)))
}

/// For an orbit of `g` and a vertex `u` of `h` (with `h.order() == g.order() + 1`):
/// transport the orbit into `h - u` along an isomorphism and count the members
/// whose vertices are all adjacent to `u`. Zero when `h - u` is not isomorphic to `g`.
pub fn extension_count(g: &SmallGraph, orbit: &Orbit, h: &SmallGraph, u: usize) -> u64 {
    assert_eq!(h.order(), g.order() + 1, "h must extend g by one vertex");
    let hu = h.remove_vertex(u);
    let Some(phi) = isomorphism(&canonical_form(g), &canonical_form(&hu)) else {
        return 0;
    };
    extension_count_with(orbit, &phi, h, u)
}

/// As [`extension_count`] with a known isomorphism `phi: g -> h - u`.
pub(crate) fn extension_count_with(orbit: &Orbit, phi: &Perm, h: &SmallGraph, u: usize) -> u64 {
    let nbrs = h.neighbors(u);
    orbit
        .members
        .iter()
        .filter(|&&s| {
            let mut m = s;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let w = phi[v] as usize;
                let w = if w >= u { w + 1 } else { w };
                if nbrs >> w & 1 == 0 {
                    return false;
                }
            }
            true
        })
        .count() as u64
}
