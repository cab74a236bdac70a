//! Order-by-order solution of the count systems, evaluation at concrete
//! parameters, and bounds on the free parameters.

use crate::algebra::{row_reduce, AffineValue, CountExpression, Inconsistency, ReducedSystem, Symbol};
use crate::equations::{base_counts, build_system, LinearSystem, Mode, SystemError};
use crate::graph::{canonical_key, CanonicalKey, SmallGraph};
use crate::spectra::SrgParams;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A count left undetermined by the equations, named by its graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeParameter {
    pub symbol: Symbol,
    /// Order of the system that left it free.
    pub order: usize,
    /// False when the priority list could not supply this column.
    pub designated: bool,
}

/// Shape of one solved system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderReport {
    pub order: usize,
    pub equations: usize,
    pub equations_without_total: usize,
    pub variables: usize,
    pub rank: usize,
    pub new_parameters: Vec<Symbol>,
}

impl OrderReport {
    pub fn free(&self) -> usize {
        self.variables - self.rank
    }
}

#[derive(Clone, Debug)]
pub struct OrderCounts {
    pub order: usize,
    pub graphs: Vec<SmallGraph>,
    pub keys: Vec<CanonicalKey>,
    pub counts: Vec<CountExpression>,
}

impl OrderCounts {
    pub fn get(&self, key: &CanonicalKey) -> Option<&CountExpression> {
        self.keys.binary_search(key).ok().map(|i| &self.counts[i])
    }

    /// Graphs whose count involves no free parameter.
    pub fn constant_count(&self) -> usize {
        self.counts.iter().filter(|c| c.is_constant()).count()
    }

    pub fn as_map(&self) -> BTreeMap<CanonicalKey, CountExpression> {
        self.keys.iter().cloned().zip(self.counts.iter().cloned()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct SolutionTable {
    pub mode: Mode,
    /// `orders[i]` holds order `i + 1`.
    pub orders: Vec<OrderCounts>,
    /// One report per solved order (3 and up).
    pub reports: Vec<OrderReport>,
    pub free_parameters: Vec<FreeParameter>,
}

impl SolutionTable {
    pub fn max_order(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self, o: usize) -> Option<&OrderCounts> {
        o.checked_sub(1).and_then(|i| self.orders.get(i))
    }

    pub fn count(&self, key: &CanonicalKey) -> Option<&CountExpression> {
        self.order(key.order())?.get(key)
    }

    pub fn count_of(&self, g: &SmallGraph) -> Option<&CountExpression> {
        self.count(&canonical_key(g))
    }

    pub fn report(&self, o: usize) -> Option<&OrderReport> {
        self.reports.iter().find(|r| r.order == o)
    }

    pub fn symbol_for(&self, g: &SmallGraph) -> Option<Symbol> {
        let key = canonical_key(g);
        self.free_parameters.iter().map(|p| p.symbol).find(|s| s.graph == key)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    OrderOutOfRange { order: usize, max: usize },
    System(SystemError),
    Inconsistent { order: usize, inconsistency: Inconsistency },
    /// Variable count or rank differs from the published tables.
    RankMismatch { order: usize, expected: (usize, usize), found: (usize, usize) },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::OrderOutOfRange { order, max } => write!(f, "order {order} outside 1..={max}"),
            SolveError::System(e) => write!(f, "{e}"),
            SolveError::Inconsistent { order, inconsistency } => write!(f, "order {order}: {inconsistency}"),
            SolveError::RankMismatch { order, expected, found } => write!(
                f,
                "order {order}: expected {} variables of rank {}, found {} of rank {}",
                expected.0, expected.1, found.0, found.1
            ),
        }
    }
}

impl From<SystemError> for SolveError {
    fn from(e: SystemError) -> Self {
        SolveError::System(e)
    }
}

/// Published `(variables, rank)` of the order-`order` system, where known.
pub fn reference_shape(mode: Mode, order: usize) -> Option<(usize, usize)> {
    match (mode, order) {
        (Mode::General, 4) => Some((11, 10)),
        (Mode::General, 5) => Some((34, 31)),
        (Mode::TriangleFree, 5) => Some((14, 14)),
        (Mode::TriangleFree, 6) => Some((38, 37)),
        (Mode::TriangleFree, 7) => Some((107, 106)),
        (Mode::TriangleFree, 8) => Some((410, 402)),
        (Mode::MOORE57, 9) => Some((293, 293)),
        (Mode::MOORE57, 10) => Some((869, 868)),
        _ => None,
    }
}

/// Graphs preferred as free parameters, highest priority first.
pub fn designated_graphs() -> Vec<SmallGraph> {
    let mut k14e = SmallGraph::complete_bipartite(1, 4);
    k14e.add_edge(1, 2);
    alloc::vec![
        SmallGraph::complete_bipartite(3, 3),
        SmallGraph::complete_bipartite(3, 4),
        SmallGraph::petersen(),
        SmallGraph::complete_bipartite(1, 3),
        SmallGraph::complete_bipartite(1, 4),
        k14e,
        SmallGraph::complete_bipartite(2, 3),
    ]
}

/// Column order for elimination: ordinary graphs, then graphs with an
/// induced 4-cycle, then designated graphs in priority order. A column is
/// free exactly when it depends on the columns before it, so designated
/// graphs end up free whenever the system allows it.
pub fn column_order(system: &LinearSystem) -> Vec<usize> {
    let designated: Vec<CanonicalKey> = designated_graphs().iter().map(canonical_key).collect();
    let mut plain = Vec::new();
    let mut quad = Vec::new();
    let mut last = Vec::new();
    for (i, (g, key)) in system.variables.iter().zip(&system.keys).enumerate() {
        if let Some(p) = designated.iter().position(|d| d == key) {
            last.push((p, i));
        } else if g.has_induced_quadrangle() {
            quad.push(i);
        } else {
            plain.push(i);
        }
    }
    last.sort();
    plain.into_iter().chain(quad).chain(last.into_iter().map(|(_, i)| i)).collect()
}

/// Names the free columns of a reduced system, numbering symbols from `next_index`.
pub fn choose_free_parameters(
    reduced: &ReducedSystem,
    variables: &[CanonicalKey],
    order: usize,
    next_index: u32,
) -> Vec<FreeParameter> {
    let designated: Vec<CanonicalKey> = designated_graphs().iter().map(canonical_key).collect();
    reduced
        .free_columns
        .iter()
        .enumerate()
        .map(|(i, &c)| FreeParameter {
            symbol: Symbol { index: next_index + i as u32, graph: variables[c] },
            order,
            designated: designated.contains(&variables[c]),
        })
        .collect()
}

pub fn solve_counts(max_order: usize, mode: Mode) -> Result<SolutionTable, SolveError> {
    solve_counts_with(max_order, mode, |_| {})
}

/// As [`solve_counts`], calling `progress` after each order.
pub fn solve_counts_with(
    max_order: usize,
    mode: Mode,
    mut progress: impl FnMut(&OrderReport),
) -> Result<SolutionTable, SolveError> {
    if max_order == 0 || max_order > mode.max_order() {
        return Err(SolveError::OrderOutOfRange { order: max_order, max: mode.max_order() });
    }
    let mut table = SolutionTable { mode, orders: Vec::new(), reports: Vec::new(), free_parameters: Vec::new() };
    for o in 1..=max_order.min(2) {
        let map = base_counts(mode, o);
        table.orders.push(OrderCounts {
            order: o,
            graphs: map.keys().map(|k| k.to_graph()).collect(),
            keys: map.keys().cloned().collect(),
            counts: map.into_values().collect(),
        });
    }
    for o in 3..=max_order {
        let lower = table.orders[o - 2].as_map();
        let system = build_system(o, mode, &lower)?;
        let order = column_order(&system);
        let reduced = row_reduce(&system.matrix(), &system.rhs(), Some(&order))
            .map_err(|inconsistency| SolveError::Inconsistent { order: o, inconsistency })?;
        let found = (system.variables.len(), reduced.rank);
        if let Some(expected) = reference_shape(mode, o) {
            if expected != found {
                return Err(SolveError::RankMismatch { order: o, expected, found });
            }
        }
        let params = choose_free_parameters(&reduced, &system.keys, o, table.free_parameters.len() as u32 + 1);
        let values: Vec<CountExpression> = params.iter().map(|p| CountExpression::symbol(p.symbol)).collect();
        let counts = reduced.solve_with(&values);
        let report = OrderReport {
            order: o,
            equations: system.equation_count(),
            equations_without_total: system.equation_count_without_total(),
            variables: system.variables.len(),
            rank: reduced.rank,
            new_parameters: params.iter().map(|p| p.symbol).collect(),
        };
        progress(&report);
        table.reports.push(report);
        table.free_parameters.extend(params);
        table.orders.push(OrderCounts { order: o, graphs: system.variables, keys: system.keys, counts });
    }
    Ok(table)
}

/// Counts of one order with coefficients evaluated at concrete parameters.
#[derive(Clone, Debug)]
pub struct ConcreteOrder {
    pub order: usize,
    pub keys: Vec<CanonicalKey>,
    pub values: Vec<AffineValue>,
}

#[derive(Clone, Debug)]
pub struct ConcreteTable {
    pub params: SrgParams,
    pub orders: Vec<ConcreteOrder>,
}

impl ConcreteTable {
    pub fn get(&self, key: &CanonicalKey) -> Option<&AffineValue> {
        let o = self.orders.get(key.order() - 1)?;
        o.keys.binary_search(key).ok().map(|i| &o.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalKey, &AffineValue)> {
        self.orders.iter().flat_map(|o| o.keys.iter().zip(&o.values))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    /// The parameters do not belong to the table's mode.
    ModeMismatch,
    /// A coefficient's denominator vanishes at these parameters.
    DenominatorVanishes { key: CanonicalKey },
    /// A free symbol has no value.
    MissingValue { symbol: Symbol },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::ModeMismatch => f.write_str("parameters do not match the solver mode"),
            EvalError::DenominatorVanishes { .. } => f.write_str("a denominator vanishes at these parameters"),
            EvalError::MissingValue { symbol } => write!(f, "no value for {}", symbol.name()),
        }
    }
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

pub fn mode_accepts(mode: Mode, p: &SrgParams) -> bool {
    match mode {
        Mode::General => true,
        Mode::TriangleFree => p.lambda == 0,
        Mode::Moore { k } => p.k == k as i64 && p.lambda == 0 && p.mu == 1,
    }
}

impl SolutionTable {
    /// Evaluates every coefficient at `params`.
    pub fn at_params(&self, params: &SrgParams) -> Result<ConcreteTable, EvalError> {
        if !mode_accepts(self.mode, params) || params.mu == 0 {
            return Err(EvalError::ModeMismatch);
        }
        let (k, l, m) = (q(params.k), q(params.lambda), q(params.mu));
        let mut orders = Vec::new();
        for oc in &self.orders {
            let mut values = Vec::with_capacity(oc.counts.len());
            for (key, c) in oc.keys.iter().zip(&oc.counts) {
                values.push(c.eval_params(&k, &l, &m).ok_or(EvalError::DenominatorVanishes { key: *key })?);
            }
            orders.push(ConcreteOrder { order: oc.order, keys: oc.keys.clone(), values });
        }
        Ok(ConcreteTable { params: *params, orders })
    }
}

/// A count that is not a non-negative integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CountIssue {
    NonInteger(BigRational),
    Negative(BigInt),
}

#[derive(Clone, Debug, Default)]
pub struct EvaluatedCounts {
    /// Integer counts; graphs with an issue are absent here.
    pub values: BTreeMap<CanonicalKey, BigInt>,
    pub issues: BTreeMap<CanonicalKey, CountIssue>,
}

impl EvaluatedCounts {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

pub fn evaluate_counts(
    table: &SolutionTable,
    params: &SrgParams,
    free: &BTreeMap<Symbol, BigRational>,
) -> Result<EvaluatedCounts, EvalError> {
    evaluate_concrete(&table.at_params(params)?, free)
}

pub fn evaluate_concrete(table: &ConcreteTable, free: &BTreeMap<Symbol, BigRational>) -> Result<EvaluatedCounts, EvalError> {
    let mut out = EvaluatedCounts::default();
    for (key, v) in table.iter() {
        let x = match v.evaluate(free) {
            Some(x) => x,
            None => {
                let symbol = *v.terms.keys().find(|s| !free.contains_key(s)).expect("missing symbol");
                return Err(EvalError::MissingValue { symbol });
            }
        };
        if !x.is_integer() {
            out.issues.insert(*key, CountIssue::NonInteger(x));
        } else if x.is_negative() {
            out.issues.insert(*key, CountIssue::Negative(x.to_integer()));
        } else {
            out.values.insert(*key, x.to_integer());
        }
    }
    Ok(out)
}

/// Bounds on one free parameter from non-negativity and integrality of every count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterBounds {
    pub symbol: Symbol,
    /// Exact rational extremes before rounding; 0 joins the lower side.
    pub raw_lower: BigRational,
    pub raw_upper: Option<BigRational>,
    /// `ceil(raw_lower)` and `floor(raw_upper)`.
    pub lower: BigInt,
    pub upper: Option<BigInt>,
    /// Graphs attaining the raw bounds.
    pub lower_binding: Vec<CanonicalKey>,
    pub upper_binding: Vec<CanonicalKey>,
    /// Integrality of every count forces `P ≡ residue (mod modulus)`;
    /// `None` when the congruences have no common solution.
    pub congruence: Option<(BigInt, BigInt)>,
    /// Extremes of the rounded interval that satisfy the congruence.
    pub refined_lower: Option<BigInt>,
    pub refined_upper: Option<BigInt>,
}

impl ParameterBounds {
    pub fn infeasible(&self) -> bool {
        match (&self.upper, &self.congruence) {
            (_, None) => true,
            (Some(u), _) => &self.lower > u || self.refined_lower.is_none(),
            (None, _) => false,
        }
    }
}

/// Solves `a x ≡ b (mod m)` as `x ≡ r (mod m')`.
fn linear_congruence(a: &BigInt, b: &BigInt, m: &BigInt) -> Option<(BigInt, BigInt)> {
    let a = a.mod_floor(m);
    let b = b.mod_floor(m);
    let g = a.gcd(m);
    let g = if g.is_zero() { m.clone() } else { g };
    if !(&b % &g).is_zero() {
        return None;
    }
    let m2 = m / &g;
    if m2.is_one() {
        return Some((BigInt::zero(), BigInt::one()));
    }
    let inv = mod_inverse(&(&a / &g), &m2)?;
    Some(((&b / &g * inv).mod_floor(&m2), m2))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Combines `x ≡ r1 (mod m1)` and `x ≡ r2 (mod m2)` for arbitrary moduli.
pub fn crt_combine(r1: &BigInt, m1: &BigInt, r2: &BigInt, m2: &BigInt) -> Option<(BigInt, BigInt)> {
    let e = m1.extended_gcd(m2);
    let g = e.gcd;
    let diff = r2 - r1;
    if !(&diff % &g).is_zero() {
        return None;
    }
    let l = m1 / &g * m2;
    let t = (&diff / &g * &e.x).mod_floor(&(m2 / &g));
    Some(((r1 + m1 * t).mod_floor(&l), l))
}

pub fn bound_free_parameter(
    table: &ConcreteTable,
    symbol: Symbol,
    fixed: &BTreeMap<Symbol, BigRational>,
) -> ParameterBounds {
    let mut lower = BigRational::zero();
    let mut upper: Option<BigRational> = None;
    let mut lower_binding = Vec::new();
    let mut upper_binding = Vec::new();
    let mut congruence = Some((BigInt::zero(), BigInt::one()));
    for (key, v) in table.iter() {
        // Reduce to c0 + c1 P with every other symbol fixed.
        let mut c0 = v.constant.clone();
        let mut c1 = BigRational::zero();
        let mut usable = true;
        for (s, c) in &v.terms {
            if *s == symbol {
                c1 = c.clone();
            } else if let Some(x) = fixed.get(s) {
                c0 += c * x;
            } else {
                usable = false;
            }
        }
        if !usable || c1.is_zero() {
            continue;
        }
        let root = -&c0 / &c1;
        if c1.is_positive() {
            if root > lower {
                lower = root;
                lower_binding = alloc::vec![*key];
            } else if root == lower {
                lower_binding.push(*key);
            }
        } else {
            match &upper {
                Some(u) if root > *u => {}
                Some(u) if root == *u => upper_binding.push(*key),
                _ => {
                    upper = Some(root);
                    upper_binding = alloc::vec![*key];
                }
            }
        }
        // c0 + c1 P integral: L c1 P ≡ -L c0 (mod L).
        if let Some((r, m)) = &congruence {
            let l = c0.denom().lcm(c1.denom());
            if !l.is_one() {
                let lq = BigRational::from_integer(l.clone());
                let a = (&c1 * &lq).to_integer();
                let b = -(&c0 * &lq).to_integer();
                congruence = linear_congruence(&a, &b, &l).and_then(|(r2, m2)| crt_combine(r, m, &r2, &m2));
            }
        }
    }
    let lo = lower.ceil().to_integer();
    let up = upper.as_ref().map(|u| u.floor().to_integer());
    let (refined_lower, refined_upper) = match &congruence {
        Some((r, m)) => {
            let rl = &lo + (r - &lo).mod_floor(m);
            let ru = up.as_ref().map(|u| u - (u - r).mod_floor(m));
            match &up {
                Some(u) if &rl > u => (None, None),
                _ => (Some(rl), ru),
            }
        }
        None => (None, None),
    };
    ParameterBounds {
        symbol,
        raw_lower: lower,
        raw_upper: upper,
        lower: lo,
        upper: up,
        lower_binding,
        upper_binding,
        congruence,
        refined_lower,
        refined_upper,
    }
}

/// Residues of `c0` and of each symbol coefficient modulo `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residues {
    pub constant: u64,
    /// `None` where `p` divides the coefficient's denominator.
    pub coefficients: BTreeMap<Symbol, Option<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonIntegerConstant {
    pub key: CanonicalKey,
    pub value: BigRational,
}

fn residue(x: &BigRational, p: &BigInt) -> Option<u64> {
    let inv = mod_inverse(&x.denom().mod_floor(p), p)?;
    let r = (x.numer() * inv).mod_floor(p);
    u64::try_from(r).ok()
}

pub fn residues_mod(
    table: &ConcreteTable,
    order: usize,
    p: u64,
) -> Result<BTreeMap<CanonicalKey, Residues>, NonIntegerConstant> {
    let pb = BigInt::from(p);
    let mut out = BTreeMap::new();
    let Some(oc) = table.orders.get(order.wrapping_sub(1)) else {
        return Ok(out);
    };
    for (key, v) in oc.keys.iter().zip(&oc.values) {
        if !v.constant.is_integer() {
            return Err(NonIntegerConstant { key: *key, value: v.constant.clone() });
        }
        let constant = residue(&v.constant, &pb).expect("integer residue");
        let coefficients = v.terms.iter().map(|(s, c)| (*s, residue(c, &pb))).collect();
        out.insert(*key, Residues { constant, coefficients });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn congruences() {
        assert_eq!(linear_congruence(&b(4), &b(2), &b(6)), Some((b(2), b(3))));
        assert_eq!(linear_congruence(&b(2), &b(1), &b(4)), None);
        assert_eq!(crt_combine(&b(2), &b(3), &b(3), &b(4)), Some((b(11), b(12))));
        assert_eq!(crt_combine(&b(1), &b(4), &b(3), &b(6)), Some((b(9), b(12))));
        assert_eq!(crt_combine(&b(1), &b(4), &b(2), &b(6)), None);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(solve_counts(6, Mode::General), Err(SolveError::OrderOutOfRange { .. })));
    }
}
