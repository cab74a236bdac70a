//! Congruences for prime-order automorphisms of srg(3250, 57, 0, 1).
//!
//! If `x` is an automorphism of prime order `p`, the copies of a pattern `G`
//! split into `x`-orbits of size `p` and copies fixed by `x`, so
//! `P_G ≡ #{fixed copies} (mod p)`. Here `a_i(x)` counts vertices moved to
//! distance `i` by `x`.

use crate::graph::{canonical_form, CanonicalKey, PermGroup};
use crate::solve::{residues_mod, ConcreteTable, NonIntegerConstant, Residues};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// The admissible values of `a_1(x)` for one `(a_0, p)` case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum A1Formula {
    /// `base + step * m <= cap` for `m >= 0`.
    Progression { base: u32, step: u32, cap: u32 },
    /// A single value.
    Exactly(u32),
    /// Stored as printed, without interpretation.
    Verbatim(&'static str),
}

impl A1Formula {
    /// Concrete values, or `None` for a verbatim row.
    pub fn values(&self) -> Option<Vec<u32>> {
        match *self {
            A1Formula::Progression { base, step, cap } => Some((0..).map(|m| base + step * m).take_while(|v| *v <= cap).collect()),
            A1Formula::Exactly(v) => Some(alloc::vec![v]),
            A1Formula::Verbatim(_) => None,
        }
    }
}

/// One row of the literature table of automorphisms of prime order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BaseRow {
    pub a0: u32,
    pub p: u32,
    pub a1: A1Formula,
}

const fn prog(a0: u32, p: u32, base: u32, step: u32, cap: u32) -> BaseRow {
    BaseRow { a0, p, a1: A1Formula::Progression { base, step, cap } }
}

const fn exact(a0: u32, p: u32, v: u32) -> BaseRow {
    BaseRow { a0, p, a1: A1Formula::Exactly(v) }
}

/// Possible fixed-point counts and `a_1` values by prime order.
pub const BASE_TABLE: [BaseRow; 17] = [
    prog(0, 5, 50, 75, 500),
    prog(0, 13, 65, 195, 500),
    BaseRow { a0: 1, p: 3, a1: A1Formula::Verbatim("27+45k = 0") },
    prog(1, 19, 57, 285, 500),
    prog(5, 5, 10, 75, 500),
    prog(5, 11, 55, 165, 500),
    exact(10, 3, 0),
    prog(50, 5, 25, 75, 350),
    exact(56, 2, 112),
    prog(2, 7, 49, 105, 500),
    prog(9, 7, 98, 105, 500),
    prog(16, 7, 42, 105, 500),
    prog(23, 7, 91, 105, 500),
    prog(30, 7, 35, 105, 500),
    prog(37, 7, 84, 105, 392),
    prog(44, 7, 28, 105, 260),
    exact(51, 7, 77),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismProfile {
    pub p: u32,
    pub a0: u32,
    pub a1_formula: A1Formula,
    /// Values of the formula that survive the extra constraint.
    pub refined_a1: Vec<u32>,
}

/// Residues of the order-`order` counts modulo `p`.
pub fn counts_mod_p(table: &ConcreteTable, order: usize, p: u64) -> Result<BTreeMap<CanonicalKey, Residues>, NonIntegerConstant> {
    residues_mod(table, order, p)
}

/// An order-7 automorphism has `3 a_1 / 7` orbits forming a 7-cycle, and
/// that number must itself be a multiple of 7.
pub fn orbit_constraint_order7(a1: u64) -> bool {
    a1.is_multiple_of(49)
}

/// The order-7 rows of [`BASE_TABLE`] intersected with multiples of 49.
pub fn refined_order7_table() -> Vec<AutomorphismProfile> {
    BASE_TABLE
        .iter()
        .filter(|r| r.p == 7)
        .map(|r| AutomorphismProfile {
            p: 7,
            a0: r.a0,
            a1_formula: r.a1,
            refined_a1: r.a1.values().unwrap_or_default().into_iter().filter(|v| orbit_constraint_order7(*v as u64)).collect(),
        })
        .collect()
}

/// Residues of all counts with the Petersen count set to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PetersenFreeReport {
    pub p: u64,
    pub residues: BTreeMap<CanonicalKey, u64>,
    /// Graphs with nonzero residue whose automorphism group has no element
    /// of order `p`; an automorphism of order `p` must fix a copy of each.
    pub forced_fixed: Vec<CanonicalKey>,
    pub note: &'static str,
}

impl PetersenFreeReport {
    pub fn all_zero(&self) -> bool {
        self.residues.values().all(|r| *r == 0)
    }
}

pub const PETERSEN_FREE_NOTE: &str =
    "nonzero residues force copies fixed by the automorphism; excluding the remaining cases needs arguments not automated here";

/// Whether `Aut(G)` has an element of order `p` (Cauchy: `p` divides `|Aut(G)|`).
pub fn has_automorphism_of_order(key: &CanonicalKey, p: u64) -> bool {
    let g = key.to_graph();
    let form = canonical_form(&g);
    let group = PermGroup::new(g.order(), &form.generators);
    group.order().is_multiple_of(p)
}

/// Residues of every count through `max_order` with the free Petersen
/// count set to zero, so only constant terms matter.
pub fn petersen_free_congruences(table: &ConcreteTable, max_order: usize, p: u64) -> Result<PetersenFreeReport, NonIntegerConstant> {
    let pb = BigInt::from(p);
    let mut residues = BTreeMap::new();
    let mut forced_fixed = Vec::new();
    for order in table.orders.iter().take(max_order) {
        for (key, v) in order.keys.iter().zip(&order.values) {
            if !v.constant.is_integer() {
                return Err(NonIntegerConstant { key: *key, value: v.constant.clone() });
            }
            let r = v.constant.to_integer().mod_floor(&pb).to_u64().expect("residue below p");
            if r != 0 && !has_automorphism_of_order(key, p) {
                forced_fixed.push(*key);
            }
            residues.insert(*key, r);
        }
    }
    Ok(PetersenFreeReport { p, residues, forced_fixed, note: PETERSEN_FREE_NOTE })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_constraint() {
        assert!(orbit_constraint_order7(49));
        assert!(!orbit_constraint_order7(105));
        assert!(orbit_constraint_order7(0));
    }

    #[test]
    fn refined_table() {
        let got: Vec<(u32, Vec<u32>)> = refined_order7_table().into_iter().map(|r| (r.a0, r.refined_a1)).collect();
        let want: Vec<(u32, Vec<u32>)> = alloc::vec![
            (2, alloc::vec![49]),
            (9, alloc::vec![98]),
            (16, alloc::vec![147]),
            (23, alloc::vec![196]),
            (30, alloc::vec![245]),
            (37, alloc::vec![294]),
            (44, alloc::vec![]),
            (51, alloc::vec![]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn verbatim_row_is_kept() {
        assert_eq!(BASE_TABLE.len(), 17);
        assert_eq!(BASE_TABLE[2].a1, A1Formula::Verbatim("27+45k = 0"));
        assert_eq!(BASE_TABLE[2].a1.values(), None);
    }
}
