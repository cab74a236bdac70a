//! Brute-force censuses of induced subgraphs in fixture graphs, used to
//! check the symbolic results independently.

mod fixtures;

pub use fixtures::{build_fixture, clebsch, hoffman_singleton, pentagon, petersen, FixtureSrg, InvariantFailure, FIXTURE_NAMES};

use crate::algebra::Symbol;
use crate::graph::{canonical_key, CanonicalKey, SmallGraph};
use crate::solve::{evaluate_concrete, CountIssue, EvalError, SolutionTable};
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Largest pattern order the census supports.
pub const MAX_CENSUS_ORDER: usize = 7;

/// Default cap on the number of subsets a census may visit.
pub const DEFAULT_SUBSET_BUDGET: u128 = 200_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CensusError {
    OrderOutOfRange(usize),
    BudgetExceeded { subsets: u128, budget: u128 },
}

impl fmt::Display for CensusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusError::OrderOutOfRange(o) => write!(f, "census order {o} outside 1..={MAX_CENSUS_ORDER}"),
            CensusError::BudgetExceeded { subsets, budget } => write!(f, "{subsets} subsets exceed the budget of {budget}"),
        }
    }
}

/// Isomorphism class of every labelled graph of one order, indexed by its
/// upper-triangle adjacency code (bit `j(j-1)/2 + i` for the pair `i < j`).
#[derive(Clone, Debug)]
pub struct Classifier {
    pub order: usize,
    class_of: Vec<u16>,
    pub keys: Vec<CanonicalKey>,
}

impl Classifier {
    pub fn new(order: usize) -> Self {
        assert!((1..=MAX_CENSUS_ORDER).contains(&order));
        let bits = order * (order - 1) / 2;
        let mut index: BTreeMap<CanonicalKey, u16> = BTreeMap::new();
        let mut class_of = Vec::with_capacity(1 << bits);
        for code in 0u32..1 << bits {
            let key = canonical_key(&graph_of_code(order, code));
            let next = index.len() as u16;
            class_of.push(*index.entry(key).or_insert(next));
        }
        // Renumber classes in key order.
        let keys: Vec<CanonicalKey> = index.keys().cloned().collect();
        let rank: BTreeMap<u16, u16> = index.values().enumerate().map(|(i, &c)| (c, i as u16)).collect();
        for c in &mut class_of {
            *c = rank[c];
        }
        Classifier { order, class_of, keys }
    }

    pub fn class(&self, code: u32) -> usize {
        self.class_of[code as usize] as usize
    }

    /// Folds per-code tallies into per-class counts (zero classes omitted).
    pub fn aggregate(&self, code_counts: &[u64]) -> BTreeMap<CanonicalKey, u64> {
        let mut per = alloc::vec![0u64; self.keys.len()];
        for (code, &c) in code_counts.iter().enumerate() {
            per[self.class_of[code] as usize] += c;
        }
        self.keys.iter().cloned().zip(per).filter(|(_, c)| *c > 0).collect()
    }
}

fn graph_of_code(order: usize, code: u32) -> SmallGraph {
    let mut g = SmallGraph::empty(order);
    for j in 1..order {
        for i in 0..j {
            if code >> (j * (j - 1) / 2 + i) & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Tallies adjacency codes of all `order`-subsets whose least vertex is `first`.
pub fn census_codes_from(host: &FixtureSrg, order: usize, first: usize, counts: &mut [u64]) {
    let n = host.order();
    if first + order > n {
        return;
    }
    let mut chosen = [0usize; MAX_CENSUS_ORDER];
    chosen[0] = first;
    extend(host, order, &mut chosen, 1, 0, counts);
}

fn extend(host: &FixtureSrg, order: usize, chosen: &mut [usize; MAX_CENSUS_ORDER], depth: usize, code: u32, counts: &mut [u64]) {
    if depth == order {
        counts[code as usize] += 1;
        return;
    }
    let n = host.order();
    let base = depth * (depth - 1) / 2;
    for v in chosen[depth - 1] + 1..=n - (order - depth) {
        let row = host.adjacency[v];
        let mut c = code;
        for (i, &u) in chosen[..depth].iter().enumerate() {
            c |= ((row >> u & 1) as u32) << (base + i);
        }
        chosen[depth] = v;
        extend(host, order, chosen, depth + 1, c, counts);
    }
}

/// Induced-subgraph counts of every class of the given order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub order: usize,
    pub counts: BTreeMap<CanonicalKey, u64>,
}

impl Census {
    pub fn get(&self, key: &CanonicalKey) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }
}

pub fn census(host: &FixtureSrg, order: usize) -> Result<Census, CensusError> {
    census_with_budget(host, order, DEFAULT_SUBSET_BUDGET)
}

pub fn check_census_request(host: &FixtureSrg, order: usize, budget: u128) -> Result<(), CensusError> {
    if !(1..=MAX_CENSUS_ORDER).contains(&order) {
        return Err(CensusError::OrderOutOfRange(order));
    }
    let subsets = binomial(host.order() as u128, order as u128);
    if subsets > budget {
        return Err(CensusError::BudgetExceeded { subsets, budget });
    }
    Ok(())
}

pub fn census_with_budget(host: &FixtureSrg, order: usize, budget: u128) -> Result<Census, CensusError> {
    check_census_request(host, order, budget)?;
    let classifier = Classifier::new(order);
    let mut codes = alloc::vec![0u64; 1 << (order * (order - 1) / 2)];
    for first in 0..host.order() {
        census_codes_from(host, order, first, &mut codes);
    }
    Ok(Census { order, counts: classifier.aggregate(&codes) })
}

/// One census count that disagrees with the symbolic table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub key: CanonicalKey,
    /// The table's value, or the reason it has none.
    pub predicted: String,
    pub censused: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderCheck {
    pub order: usize,
    pub graphs_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossValidation {
    pub host: &'static str,
    /// Free symbols set to their censused values.
    pub free_values: BTreeMap<Symbol, u64>,
    pub orders: Vec<OrderCheck>,
}

impl CrossValidation {
    pub fn mismatch_count(&self) -> usize {
        self.orders.iter().map(|o| o.mismatches.len()).sum()
    }
}

/// Compares the table at the host's parameters with censuses through `max_order`.
pub fn cross_validate(host: &FixtureSrg, max_order: usize, table: &SolutionTable) -> Result<CrossValidation, ValidationError> {
    let max_order = max_order.min(table.max_order());
    let mut censuses = Vec::new();
    for o in 1..=max_order {
        censuses.push(census(host, o).map_err(ValidationError::Census)?);
    }
    let mut free_values = BTreeMap::new();
    let mut free = BTreeMap::new();
    for p in &table.free_parameters {
        let o = p.symbol.graph.order();
        if o <= max_order {
            let c = censuses[o - 1].get(&p.symbol.graph);
            free_values.insert(p.symbol, c);
            free.insert(p.symbol, BigRational::from_integer(BigInt::from(c)));
        }
    }
    let mut concrete = table.at_params(&host.params).map_err(ValidationError::Eval)?;
    concrete.orders.truncate(max_order);
    let evaluated = evaluate_concrete(&concrete, &free).map_err(ValidationError::Eval)?;
    let mut orders = Vec::new();
    for (o, cen) in censuses.iter().enumerate() {
        let level = &concrete.orders[o];
        let mut mismatches = Vec::new();
        for key in &level.keys {
            let got = cen.get(key);
            let predicted = match (evaluated.values.get(key), evaluated.issues.get(key)) {
                (Some(v), _) if *v == BigInt::from(got) => continue,
                (Some(v), _) => v.to_string(),
                (_, Some(CountIssue::NonInteger(x))) => alloc::format!("non-integer {x}"),
                (_, Some(CountIssue::Negative(x))) => alloc::format!("negative {x}"),
                (None, None) => String::from("missing"),
            };
            mismatches.push(Mismatch { key: *key, predicted, censused: got });
        }
        // Censused classes outside the table's universe must be absent.
        for (key, &c) in &cen.counts {
            if level.keys.binary_search(key).is_err() {
                mismatches.push(Mismatch { key: *key, predicted: String::from("outside class"), censused: c });
            }
        }
        orders.push(OrderCheck { order: o + 1, graphs_checked: level.keys.len(), mismatches });
    }
    Ok(CrossValidation { host: host.name, free_values, orders })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationError {
    Census(CensusError),
    Eval(EvalError),
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationError::Census(e) => write!(f, "{e}"),
            ValidationError::Eval(e) => write!(f, "{e}"),
        }
    }
}

/// Induced 5-cycles as vertex sequences starting at their least vertex,
/// each cycle listed once.
pub fn induced_pentagons(host: &FixtureSrg) -> Vec<[usize; 5]> {
    let n = host.order();
    let mut out = Vec::new();
    for c0 in 0..n {
        let above = |v: usize| v > c0;
        for c1 in (0..n).filter(|&v| above(v) && host.has_edge(c0, v)) {
            for c2 in (0..n).filter(|&v| above(v) && v != c1 && host.has_edge(c1, v) && !host.has_edge(c0, v)) {
                for c3 in (0..n).filter(|&v| above(v) && v != c1 && host.has_edge(c2, v) && !host.has_edge(c0, v) && !host.has_edge(c1, v)) {
                    for c4 in (c1 + 1..n).filter(|&v| {
                        v != c2 && v != c3 && host.has_edge(c3, v) && host.has_edge(c0, v) && !host.has_edge(c1, v) && !host.has_edge(c2, v)
                    }) {
                        out.push([c0, c1, c2, c3, c4]);
                    }
                }
            }
        }
    }
    out
}

/// Induced Petersen subgraphs, found by extending each induced pentagon
/// with one outside neighbour per cycle vertex. Every copy contains twelve
/// pentagons, each of which extends to it in exactly one way.
pub fn count_induced_petersen(host: &FixtureSrg) -> u64 {
    let target = canonical_key(&SmallGraph::petersen());
    let mut hits = 0u64;
    for cyc in induced_pentagons(host) {
        let cycle_mask = cyc.iter().fold(0u64, |m, &v| m | 1 << v);
        let options: Vec<Vec<usize>> = cyc
            .iter()
            .map(|&c| (0..host.order()).filter(|&w| host.has_edge(c, w) && cycle_mask >> w & 1 == 0).collect())
            .collect();
        let mut pick = [0usize; 5];
        hits += petersen_extensions(host, &cyc, &options, &mut pick, 0, &target);
    }
    hits / 12
}

fn petersen_extensions(
    host: &FixtureSrg,
    cyc: &[usize; 5],
    options: &[Vec<usize>],
    pick: &mut [usize; 5],
    depth: usize,
    target: &CanonicalKey,
) -> u64 {
    if depth == 5 {
        // The spokes must form a pentagram: w_i ~ w_{i+2}.
        if !(0..5).all(|i| host.has_edge(pick[i], pick[(i + 2) % 5])) {
            return 0;
        }
        let verts: Vec<usize> = cyc.iter().chain(pick.iter()).copied().collect();
        let mut g = SmallGraph::empty(10);
        for a in 0..10 {
            for b in a + 1..10 {
                if verts[a] == verts[b] {
                    return 0;
                }
                if host.has_edge(verts[a], verts[b]) {
                    g.add_edge(a, b);
                }
            }
        }
        return (canonical_key(&g) == *target) as u64;
    }
    let mut total = 0;
    for &w in &options[depth] {
        pick[depth] = w;
        total += petersen_extensions(host, cyc, options, pick, depth + 1, target);
    }
    total
}

/// Copies of each order-`order` class that are fixed setwise by the
/// automorphism `perm`.
pub fn fixed_copies(host: &FixtureSrg, perm: &[usize], order: usize) -> BTreeMap<CanonicalKey, u64> {
    let n = host.order();
    let mut seen = alloc::vec![false; n];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if !seen[s] {
            let mut c = Vec::new();
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                c.push(v);
                v = perm[v];
            }
            cycles.push(c);
        }
    }
    let mut out = BTreeMap::new();
    let mut stack: Vec<usize> = Vec::new();
    collect_fixed(host, &cycles, 0, order, &mut stack, &mut out);
    out
}

fn collect_fixed(host: &FixtureSrg, cycles: &[Vec<usize>], from: usize, left: usize, stack: &mut Vec<usize>, out: &mut BTreeMap<CanonicalKey, u64>) {
    if left == 0 {
        let mut g = SmallGraph::empty(stack.len());
        for a in 0..stack.len() {
            for b in a + 1..stack.len() {
                if host.has_edge(stack[a], stack[b]) {
                    g.add_edge(a, b);
                }
            }
        }
        *out.entry(canonical_key(&g)).or_insert(0) += 1;
        return;
    }
    for i in from..cycles.len() {
        if cycles[i].len() <= left {
            let len = stack.len();
            stack.extend_from_slice(&cycles[i]);
            collect_fixed(host, cycles, i + 1, left - cycles[i].len(), stack, out);
            stack.truncate(len);
        }
    }
}

/// Whether `perm` preserves adjacency.
pub fn is_automorphism(host: &FixtureSrg, perm: &[usize]) -> bool {
    let n = host.order();
    perm.len() == n && (0..n).all(|u| (0..n).all(|v| host.has_edge(u, v) == host.has_edge(perm[u], perm[v])))
}

/// `P_G ≡ #{copies fixed by x} (mod p)` for every class of the given order.
pub fn lemma_congruence_holds(host: &FixtureSrg, perm: &[usize], p: u64, order: usize) -> Result<bool, CensusError> {
    let cen = census(host, order)?;
    let fixed = fixed_copies(host, perm, order);
    let keys: alloc::collections::BTreeSet<CanonicalKey> = cen.counts.keys().chain(fixed.keys()).copied().collect();
    let holds = keys.iter().all(|k| cen.get(k) % p == fixed.get(k).copied().unwrap_or(0) % p);
    Ok(holds)
}
