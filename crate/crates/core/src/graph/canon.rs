//! Canonical labelling by individualisation and refinement with
//! automorphism pruning.

use super::group::{compose, identity, inverse, orbit_roots, Perm};
use super::{SmallGraph, MAX_ORDER};
use alloc::vec::Vec;

/// Isomorphism-invariant key: the order plus the upper triangle of the
/// canonically relabelled adjacency matrix.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey {
    order: u8,
    bits: u128,
}

#[inline]
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

impl CanonicalKey {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The canonical representative. Its labelling is the canonical one, so
    /// `canonical_key(&k.to_graph()) == k` and its canonical labelling is the identity.
    pub fn to_graph(&self) -> SmallGraph {
        let n = self.order();
        let mut g = SmallGraph::empty(n);
        for j in 1..n {
            for i in 0..j {
                if self.bits >> pair_index(i, j) & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub key: CanonicalKey,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Perm,
    /// Generators of the full automorphism group.
    pub generators: Vec<Perm>,
}

impl CanonicalForm {
    /// Least member of each vertex's automorphism orbit.
    pub fn orbit_roots(&self) -> [u8; MAX_ORDER] {
        orbit_roots(self.key.order(), &self.generators)
    }
}

pub fn canonical_key(g: &SmallGraph) -> CanonicalKey {
    canonical_form(g).key
}

pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
    let n = g.order();
    let mut search = Search { g, n, first: None, best: None, gens: Vec::new() };
    let mut prefix = Vec::with_capacity(n);
    let mut cells = Vec::with_capacity(n);
    cells.push(g.vertex_mask());
    search.visit(cells, &mut prefix);
    let (bits, labeling) = search.best.expect("search reaches a leaf");
    CanonicalForm { key: CanonicalKey { order: n as u8, bits }, labeling, generators: search.gens }
}

/// Permuted upper triangle for a labelling.
fn leaf_bits(g: &SmallGraph, lab: &Perm) -> u128 {
    let mut bits = 0u128;
    for (u, v) in g.edges() {
        let (a, b) = (lab[u] as usize, lab[v] as usize);
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        bits |= 1u128 << pair_index(i, j);
    }
    bits
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Every step depends only on cell order and neighbour counts, so the
/// result is invariant under relabelling.
fn refine(g: &SmallGraph, cells: &mut Vec<u16>) {
    let n = g.order();
    let mut scratch: Vec<u16> = Vec::with_capacity(n);
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            scratch.clear();
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    scratch.push(cell);
                    continue;
                }
                let mut by_count = [0u16; MAX_ORDER + 1];
                let mut m = cell;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    by_count[(g.neighbors(v) & splitter).count_ones() as usize] |= 1 << v;
                }
                let parts = by_count.iter().filter(|&&c| c != 0).count();
                if parts > 1 {
                    changed = true;
                }
                scratch.extend(by_count.iter().copied().filter(|&c| c != 0));
            }
            core::mem::swap(cells, &mut scratch);
            if cells.len() == n {
                return;
            }
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Search<'a> {
    g: &'a SmallGraph,
    n: usize,
    first: Option<(u128, Perm)>,
    best: Option<(u128, Perm)>,
    gens: Vec<Perm>,
}

impl Search<'_> {
    fn visit(&mut self, mut cells: Vec<u16>, prefix: &mut Vec<u8>) {
        refine(self.g, &mut cells);
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        let target = (0..cells.len())
            .filter(|&i| cells[i].count_ones() > 1)
            .min_by_key(|&i| (cells[i].count_ones(), i))
            .expect("non-discrete partition");
        let tc = cells[target];
        let mut explored = 0u16;
        let mut m = tc;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if explored != 0 {
                let stab: Vec<Perm> = self
                    .gens
                    .iter()
                    .filter(|p| prefix.iter().all(|&x| p[x as usize] == x))
                    .copied()
                    .collect();
                let roots = orbit_roots(self.n, &stab);
                let mut e = explored;
                let mut pruned = false;
                while e != 0 {
                    let w = e.trailing_zeros() as usize;
                    e &= e - 1;
                    if roots[w] == roots[v] {
                        pruned = true;
                        break;
                    }
                }
                if pruned {
                    continue;
                }
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(tc & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v as u8);
            self.visit(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &[u16]) {
        let mut lab = identity();
        for (i, &c) in cells.iter().enumerate() {
            lab[c.trailing_zeros() as usize] = i as u8;
        }
        let bits = leaf_bits(self.g, &lab);
        let Some((first_bits, first_lab)) = self.first else {
            self.first = Some((bits, lab));
            self.best = Some((bits, lab));
            return;
        };
        let (best_bits, best_lab) = self.best.expect("set with first");
        let auto = if bits == first_bits {
            Some(compose(&lab, &inverse(&first_lab)))
        } else if bits == best_bits {
            Some(compose(&lab, &inverse(&best_lab)))
        } else {
            if bits > best_bits {
                self.best = Some((bits, lab));
            }
            None
        };
        if let Some(a) = auto {
            if a != identity() && !self.gens.contains(&a) {
                self.gens.push(a);
            }
        }
    }
}
