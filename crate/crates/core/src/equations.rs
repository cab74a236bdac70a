//! Linear relations between induced-subgraph counts of consecutive orders.
//!
//! For every graph `G` of order `o - 1` in the active class, counting the
//! ways to extend a copy of `G` by one outside vertex gives
//!
//! * type i: `(n - o + 1) P_G = sum_H P_G(H) P_H`,
//! * type ii, per vertex orbit `S`: `(k - deg S) |S| P_G = sum_H (sum_j f(S, H, u_j) |V_H^j|) P_H`,
//! * type iii, per edge orbit (general mode): the same with `λ`,
//! * type iv, per non-edge orbit: the same with `μ`,
//!
//! where `H` runs over the graphs of order `o`. A final row states that
//! the counts of order `o` add up to `C(n, o)`.

use crate::algebra::{binomial, CountExpression, RationalFunction, SparseMatrix, SparseRow, Var};
use crate::graph::{canonical_form, enumerate_graphs, orbits, CanonicalForm, CanonicalKey, GraphClass, Orbit, OrbitDecomposition, SmallGraph};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Which universe of graphs and which parameters are symbolic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// All graphs; k, λ, μ symbolic.
    General,
    /// Triangle-free graphs; λ = 0, k and μ symbolic.
    TriangleFree,
    /// Graphs without triangles or 4-cycles; λ = 0, μ = 1 and the given degree.
    Moore { k: u32 },
}

impl Mode {
    /// The open Moore case srg(3250, 57, 0, 1).
    pub const MOORE57: Mode = Mode::Moore { k: 57 };

    pub fn class(self) -> GraphClass {
        match self {
            Mode::General => GraphClass::General,
            Mode::TriangleFree => GraphClass::TriangleFree,
            Mode::Moore { .. } => GraphClass::TriangleAndQuadrangleFree,
        }
    }

    pub fn k(self) -> RationalFunction {
        match self {
            Mode::Moore { k } => RationalFunction::int(k as i64),
            _ => RationalFunction::var(Var::K),
        }
    }

    pub fn lambda(self) -> RationalFunction {
        match self {
            Mode::General => RationalFunction::var(Var::Lambda),
            _ => RationalFunction::zero(),
        }
    }

    pub fn mu(self) -> RationalFunction {
        match self {
            Mode::Moore { .. } => RationalFunction::one(),
            _ => RationalFunction::var(Var::Mu),
        }
    }

    /// `n = k + 1 + k(k - λ - 1)/μ`.
    pub fn n(self) -> RationalFunction {
        let (k, l, m) = (self.k(), self.lambda(), self.mu());
        let one = RationalFunction::one();
        let t = &(&k * &(&(&k - &l) - &one)) / &m;
        &(&k + &one) + &t
    }

    /// Whether the edge-orbit rows are generated.
    pub fn uses_edge_rows(self) -> bool {
        matches!(self, Mode::General)
    }

    /// Largest order the solver handles in this mode.
    pub fn max_order(self) -> usize {
        match self {
            Mode::General => 5,
            Mode::TriangleFree => 8,
            Mode::Moore { .. } => 10,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::General => "general",
            Mode::TriangleFree => "triangle-free",
            Mode::Moore { .. } => "moore",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowKind {
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    TotalCount,
}

impl RowKind {
    pub fn name(self) -> &'static str {
        match self {
            RowKind::TypeI => "i",
            RowKind::TypeII => "ii",
            RowKind::TypeIII => "iii",
            RowKind::TypeIV => "iv",
            RowKind::TotalCount => "total",
        }
    }
}

/// Where a row came from: `(kind, source graph, orbit index within the kind)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Provenance {
    pub kind: RowKind,
    pub source: Option<CanonicalKey>,
    pub orbit: Option<usize>,
    /// The orbit's representative vertex set as a bitmask.
    pub representative: Option<u16>,
    /// Degree of the representative (vertex degree or common-neighbour count).
    pub degree: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Row {
    /// Nonnegative integer coefficients on the variables.
    pub coeffs: SparseRow,
    pub lhs: CountExpression,
    pub provenance: Provenance,
}

#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub order: usize,
    pub mode: Mode,
    /// Canonical representatives of the unknowns, sorted by key.
    pub variables: Vec<SmallGraph>,
    pub keys: Vec<CanonicalKey>,
    pub rows: Vec<Row>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemError {
    /// A graph of the previous order has no known count.
    MissingLowerCount(CanonicalKey),
    OrderOutOfRange(usize),
}

impl fmt::Display for SystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemError::MissingLowerCount(k) => write!(f, "no count known for lower-order graph {k:?}"),
            SystemError::OrderOutOfRange(o) => write!(f, "order {o} out of range"),
        }
    }
}

impl LinearSystem {
    pub fn matrix(&self) -> SparseMatrix {
        SparseMatrix { cols: self.variables.len(), rows: self.rows.iter().map(|r| r.coeffs.clone()).collect() }
    }

    pub fn rhs(&self) -> Vec<CountExpression> {
        self.rows.iter().map(|r| r.lhs.clone()).collect()
    }

    /// Number of rows, counting the total-count row.
    pub fn equation_count(&self) -> usize {
        self.rows.len()
    }

    /// Number of rows excluding the total-count row.
    pub fn equation_count_without_total(&self) -> usize {
        self.rows.iter().filter(|r| r.provenance.kind != RowKind::TotalCount).count()
    }

    pub fn column_of(&self, key: &CanonicalKey) -> Option<usize> {
        self.keys.binary_search(key).ok()
    }

    /// Rows whose source orbit has more common neighbours than the concrete
    /// parameters allow (so the source graph cannot occur and the row is vacuous).
    pub fn vacuous_rows(&self, k: i64, lambda: i64, mu: i64) -> Vec<usize> {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, r)| {
                let d = r.provenance.degree.unwrap_or(0) as i64;
                match r.provenance.kind {
                    RowKind::TypeII => d > k,
                    RowKind::TypeIII => d > lambda,
                    RowKind::TypeIV => d > mu,
                    _ => false,
                }
            })
            .map(|(i, _)| i)
            .collect()
    }
}

/// Counts of orders 1 and 2, from which the recursion starts.
pub fn base_counts(mode: Mode, order: usize) -> BTreeMap<CanonicalKey, CountExpression> {
    let n = mode.n();
    let mut out = BTreeMap::new();
    let key = |g: SmallGraph| canonical_form(&g).key;
    match order {
        1 => {
            out.insert(key(SmallGraph::empty(1)), CountExpression::constant(n));
        }
        2 => {
            let edges = (&n * &mode.k()).scale(&BigRational::new(1.into(), 2.into()));
            let pairs = binomial(&n, 2);
            out.insert(key(SmallGraph::complete(2)), CountExpression::constant(edges.clone()));
            out.insert(key(SmallGraph::empty(2)), CountExpression::constant(&pairs - &edges));
        }
        _ => panic!("base counts exist for orders 1 and 2 only"),
    }
    out
}

struct Source {
    form: CanonicalForm,
    orbits: OrbitDecomposition,
    /// Index of this graph's type-i row; the orbit rows follow it.
    first_row: usize,
}

/// Builds the system for order `o` from counts of order `o - 1`.
pub fn build_system(
    order: usize,
    mode: Mode,
    lower: &BTreeMap<CanonicalKey, CountExpression>,
) -> Result<LinearSystem, SystemError> {
    let class = mode.class();
    if order < 2 || order > class.max_enumeration_order() {
        return Err(SystemError::OrderOutOfRange(order));
    }
    let lower_graphs = enumerate_graphs(order - 1, class).map_err(|_| SystemError::OrderOutOfRange(order))?;
    let variables = enumerate_graphs(order, class).map_err(|_| SystemError::OrderOutOfRange(order))?;
    let keys: Vec<CanonicalKey> = variables.iter().map(|g| canonical_form(g).key).collect();

    let n = mode.n();
    let edge_rows = mode.uses_edge_rows();
    let mut rows: Vec<Row> = Vec::new();
    let mut sources: BTreeMap<CanonicalKey, Source> = BTreeMap::new();
    for g in &lower_graphs {
        let form = canonical_form(g);
        let key = form.key;
        let count = lower.get(&key).cloned().ok_or(SystemError::MissingLowerCount(key))?;
        let orb = crate::graph::orbits_with(g, &form.generators);
        let first_row = rows.len();
        let shift = RationalFunction::int(order as i64 - 1);
        rows.push(new_row(&count, &(&n - &shift), RowKind::TypeI, key, None));
        let mut push = |kind: RowKind, list: &[Orbit], param: &RationalFunction| {
            for (i, o) in list.iter().enumerate() {
                let factor = (param - &RationalFunction::int(o.degree as i64)).scale(&BigRational::from_integer(o.size().into()));
                rows.push(new_row(&count, &factor, kind, key, Some((i, o))));
            }
        };
        push(RowKind::TypeII, &orb.vertex_orbits, &mode.k());
        if edge_rows {
            push(RowKind::TypeIII, &orb.edge_orbits, &mode.lambda());
        }
        push(RowKind::TypeIV, &orb.nonedge_orbits, &mode.mu());
        sources.insert(key, Source { form, orbits: orb, first_row });
    }

    let mut dense: Vec<BTreeMap<usize, u64>> = alloc::vec![BTreeMap::new(); rows.len()];
    for (col, h) in variables.iter().enumerate() {
        let h_orbits = orbits(h);
        for vo in &h_orbits.vertex_orbits {
            let u = vo.representative().trailing_zeros() as usize;
            let weight = vo.size() as u64;
            let hu = h.remove_vertex(u);
            let hu_form = canonical_form(&hu);
            let src = sources.get(&hu_form.key).expect("vertex-deleted subgraph stays in the class");
            let phi = crate::graph::count::isomorphism(&src.form, &hu_form).expect("keys agree");
            let mut r = src.first_row;
            *dense[r].entry(col).or_default() += weight;
            r += 1;
            let mut add = |list: &[Orbit], r: &mut usize| {
                for o in list {
                    let f = crate::graph::count::extension_count_with(o, &phi, h, u);
                    if f > 0 {
                        *dense[*r].entry(col).or_default() += f * weight;
                    }
                    *r += 1;
                }
            };
            add(&src.orbits.vertex_orbits, &mut r);
            if edge_rows {
                add(&src.orbits.edge_orbits, &mut r);
            }
            add(&src.orbits.nonedge_orbits, &mut r);
        }
    }
    for (row, coeffs) in rows.iter_mut().zip(dense) {
        row.coeffs = coeffs.into_iter().filter(|(_, c)| *c != 0).map(|(j, c)| (j, BigInt::from(c))).collect();
    }
    // Rows that read 0 = 0 carry no information. They only arise in Moore
    // mode, where every extension of a pair with a common neighbour closes a 4-cycle.
    rows.retain(|r| !(r.coeffs.is_empty() && r.lhs.is_zero()));

    rows.push(Row {
        coeffs: (0..variables.len()).map(|j| (j, BigInt::from(1))).collect(),
        lhs: CountExpression::constant(binomial(&n, order as u32)),
        provenance: Provenance { kind: RowKind::TotalCount, source: None, orbit: None, representative: None, degree: None },
    });
    Ok(LinearSystem { order, mode, variables, keys, rows })
}

fn new_row(count: &CountExpression, factor: &RationalFunction, kind: RowKind, key: CanonicalKey, orbit: Option<(usize, &Orbit)>) -> Row {
    Row {
        coeffs: Vec::new(),
        lhs: count.scale(factor),
        provenance: Provenance {
            kind,
            source: Some(key),
            orbit: orbit.map(|(i, _)| i),
            representative: orbit.map(|(_, o)| o.representative()),
            degree: orbit.map(|(_, o)| o.degree),
        },
    }
}
