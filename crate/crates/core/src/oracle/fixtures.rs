//! Small strongly regular graphs with known parameters.

use crate::spectra::SrgParams;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A host graph on at most 64 vertices stored as neighbour bitsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureSrg {
    pub name: &'static str,
    pub adjacency: Vec<u64>,
    pub params: SrgParams,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFailure {
    pub name: &'static str,
    pub detail: String,
}

impl fmt::Display for InvariantFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self.detail)
    }
}

impl FixtureSrg {
    /// Builds a fixture and checks k, λ and μ on every pair.
    pub fn from_adjacency(name: &'static str, adjacency: Vec<u64>, params: SrgParams) -> Result<Self, InvariantFailure> {
        let f = FixtureSrg { name, adjacency, params };
        f.verify()?;
        Ok(f)
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u] >> v & 1 == 1
    }

    pub fn verify(&self) -> Result<(), InvariantFailure> {
        let fail = |detail: String| Err(InvariantFailure { name: self.name, detail });
        let n = self.order();
        if n as i64 != self.params.n || n > 64 {
            return fail(alloc::format!("order {n}"));
        }
        for u in 0..n {
            if self.has_edge(u, u) {
                return fail(alloc::format!("loop at {u}"));
            }
            if self.adjacency[u].count_ones() as i64 != self.params.k {
                return fail(alloc::format!("vertex {u} has degree {}", self.adjacency[u].count_ones()));
            }
            for v in u + 1..n {
                if self.has_edge(u, v) != self.has_edge(v, u) {
                    return fail(alloc::format!("asymmetric pair {u},{v}"));
                }
                let common = (self.adjacency[u] & self.adjacency[v]).count_ones() as i64;
                let want = if self.has_edge(u, v) { self.params.lambda } else { self.params.mu };
                if common != want {
                    return fail(alloc::format!("pair {u},{v} has {common} common neighbours"));
                }
            }
        }
        Ok(())
    }

    /// Checks `A^2 - (λ - μ)A - (k - μ)I = μJ` entry by entry.
    pub fn adjacency_identity_holds(&self) -> bool {
        let n = self.order();
        let p = &self.params;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let a2 = (0..n).filter(|&m| self.has_edge(i, m) && self.has_edge(m, j)).count() as i64;
                let a = self.has_edge(i, j) as i64;
                let id = (i == j) as i64;
                a2 - (p.lambda - p.mu) * a - (p.k - p.mu) * id == p.mu
            })
        })
    }
}

fn symmetric(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<u64> {
    (0..n).map(|u| (0..n).filter(|&v| v != u && adjacent(u, v)).fold(0u64, |acc, v| acc | 1 << v)).collect()
}

fn build(name: &'static str, adjacency: Vec<u64>, p: (i64, i64, i64, i64)) -> FixtureSrg {
    let params = SrgParams::new(p.0, p.1, p.2, p.3).expect("fixture parameters are valid");
    FixtureSrg::from_adjacency(name, adjacency, params).unwrap_or_else(|e| panic!("fixture construction is broken: {e}"))
}

pub fn pentagon() -> FixtureSrg {
    build("pentagon", symmetric(5, |u, v| (u + 5 - v) % 5 == 1 || (v + 5 - u) % 5 == 1), (5, 2, 0, 1))
}

/// Kneser graph K(5, 2): 2-subsets of a 5-set, adjacent when disjoint.
pub fn petersen() -> FixtureSrg {
    let pairs: Vec<u8> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (1u8 << a) | (1 << b))).collect();
    build("petersen", symmetric(10, |u, v| pairs[u] & pairs[v] == 0), (10, 3, 0, 1))
}

/// Folded 5-cube: 4-bit words, adjacent when they differ in one bit or in all four.
pub fn clebsch() -> FixtureSrg {
    build("clebsch", symmetric(16, |u, v| matches!((u ^ v).count_ones(), 1 | 4)), (16, 5, 0, 2))
}

/// Robertson's construction from five pentagons `P_h` and five pentagrams `Q_i`:
/// vertex `j` of `P_h` is joined to vertex `hi + j` of `Q_i`.
pub fn hoffman_singleton() -> FixtureSrg {
    let adj = symmetric(50, |u, v| {
        let (su, hu, ju) = (u / 25, u % 25 / 5, u % 5);
        let (sv, hv, jv) = (v / 25, v % 25 / 5, v % 5);
        let diff = (ju + 5 - jv) % 5;
        match (su, sv) {
            (0, 0) => hu == hv && (diff == 1 || diff == 4),
            (1, 1) => hu == hv && (diff == 2 || diff == 3),
            (0, 1) => (hu * hv + ju) % 5 == jv,
            _ => (hv * hu + jv) % 5 == ju,
        }
    });
    build("hoffman_singleton", adj, (50, 7, 0, 1))
}

pub const FIXTURE_NAMES: [&str; 4] = ["pentagon", "petersen", "clebsch", "hoffman_singleton"];

pub fn build_fixture(name: &str) -> Option<FixtureSrg> {
    match name {
        "pentagon" => Some(pentagon()),
        "petersen" => Some(petersen()),
        "clebsch" => Some(clebsch()),
        "hoffman_singleton" | "hoffman-singleton" => Some(hoffman_singleton()),
        _ => None,
    }
}
