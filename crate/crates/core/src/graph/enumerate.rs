//! Isomorph-free generation by vertex augmentation with canonical deletion.

use super::canon::{canonical_form, CanonicalKey};
use super::group::orbit_roots;
use super::{GraphClass, SmallGraph};
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerationError {
    OrderOutOfRange { order: usize, class: GraphClass, max: usize },
}

impl fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationError::OrderOutOfRange { order, class, max } => {
                write!(f, "order {order} unsupported for {class:?} (supported 1..={max})")
            }
        }
    }
}

/// One canonical representative per isomorphism class, sorted by key.
pub fn enumerate_graphs(order: usize, class: GraphClass) -> Result<Vec<SmallGraph>, EnumerationError> {
    let max = class.max_enumeration_order();
    if order == 0 || order > max {
        return Err(EnumerationError::OrderOutOfRange { order, class, max });
    }
    let mut level = Vec::from([SmallGraph::empty(1)]);
    for _ in 1..order {
        let mut keys: Vec<CanonicalKey> = Vec::new();
        for parent in &level {
            keys.extend(children(parent, class));
        }
        keys.sort_unstable();
        level = keys.iter().map(|k| k.to_graph()).collect();
    }
    Ok(level)
}

/// Canonical keys of the children of `parent` whose canonical parent is `parent`.
pub fn children(parent: &SmallGraph, class: GraphClass) -> BTreeSet<CanonicalKey> {
    let n = parent.order();
    let mut out = BTreeSet::new();
    for nbrs in 0u16..1 << n {
        if !admissible(parent, nbrs, class) {
            continue;
        }
        let child = parent.with_vertex(nbrs);
        let form = canonical_form(&child);
        // The canonical deletion vertex is the one placed last.
        let last = form.labeling[..n + 1].iter().position(|&p| p as usize == n).expect("bijective labelling");
        let roots = orbit_roots(n + 1, &form.generators);
        if roots[last] == roots[n] {
            out.insert(form.key);
        }
    }
    out
}

/// Whether joining a new vertex to `nbrs` keeps the graph in `class`,
/// assuming `parent` already belongs to it.
fn admissible(parent: &SmallGraph, nbrs: u16, class: GraphClass) -> bool {
    let independent = || {
        let mut m = nbrs;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if parent.neighbors(v) & nbrs != 0 {
                return false;
            }
        }
        true
    };
    match class {
        GraphClass::General => true,
        GraphClass::TriangleFree => independent(),
        GraphClass::TriangleAndQuadrangleFree => {
            if !independent() {
                return false;
            }
            // No vertex outside may see two new neighbours.
            (0..parent.order()).all(|w| (parent.neighbors(w) & nbrs).count_ones() <= 1)
        }
    }
}
