//! Bounds on free counts from the spherical representation of an SRG.
//!
//! Vertices project to unit vectors in the `s`-eigenspace with inner products
//! `1`, `p` and `q`. A subgraph is represented by the normalised sum of its
//! vertex vectors, and for the Gegenbauer polynomial `C_t` of index
//! `(g - 2)/2` the sums `S_AB = sum C_t(x_Δ · x_Ω)` over copies of `A` and `B`
//! satisfy `S_XY^2 <= S_XX S_YY`. Each sum is a combination of induced
//! counts, so the inequality constrains a free count.
//!
//! Everything is exact. With `N_A = |V_A| + 2p|E_A| + 2q|Ē_A|` all inner
//! products in `S_AB` equal `c / sqrt(N_A N_B)` with `c` rational, and
//! `C_t` has the parity of `t`, so `S_AB = u + v / sqrt(N_A N_B)` with
//! rational `u`, `v`, of which at most one is nonzero.

use crate::algebra::{AffineValue, Symbol};
use crate::graph::count::for_each_subset;
use crate::graph::{canonical_key, CanonicalKey, SmallGraph};
use crate::solve::ConcreteTable;
use crate::spectra::{spectrum, SrgParams};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use num_rational::BigRational;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

/// Inner products of projected vertex vectors and the Gegenbauer index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionGeometry {
    pub p: BigRational,
    pub q: BigRational,
    /// Multiplicity of the negative eigenvalue `s`.
    pub g: i64,
    /// `(g - 2) / 2`.
    pub alpha: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeoError {
    /// `s` or `g` is not an integer.
    IrrationalSpectrum,
    /// `g <= 2`, so the index is not positive.
    SmallMultiplicity,
    /// A representative has non-positive squared norm.
    DegenerateNorm,
    /// Counts of this order are needed but not in the table.
    MissingOrder(usize),
    /// A count involves a free symbol other than the bounded one.
    ExtraSymbol(Symbol),
    /// The free symbol enters `S_XY` or `S_XX`, making the inequality quadratic.
    Unsupported,
    /// The free symbol has zero coefficient in the inequality.
    NoConstraint,
}

impl fmt::Display for GeoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeoError::IrrationalSpectrum => f.write_str("eigenvalue s or its multiplicity is not an integer"),
            GeoError::SmallMultiplicity => f.write_str("multiplicity g must exceed 2"),
            GeoError::DegenerateNorm => f.write_str("a representative has non-positive norm"),
            GeoError::MissingOrder(o) => write!(f, "counts of order {o} are missing"),
            GeoError::ExtraSymbol(s) => write!(f, "unexpected free symbol {}", s.name()),
            GeoError::Unsupported => f.write_str("the free count enters quadratically"),
            GeoError::NoConstraint => f.write_str("the inequality does not involve the free count"),
        }
    }
}

impl ProjectionGeometry {
    pub fn new(params: &SrgParams) -> Result<Self, GeoError> {
        let sp = spectrum(params);
        let (s, g) = sp.s_int().zip(sp.g_int()).ok_or(GeoError::IrrationalSpectrum)?;
        if g <= 2 {
            return Err(GeoError::SmallMultiplicity);
        }
        Ok(ProjectionGeometry {
            p: BigRational::new(s.into(), params.k.into()),
            q: BigRational::new((-(s + 1)).into(), params.l().into()),
            g,
            alpha: BigRational::new((g - 2).into(), 2.into()),
        })
    }

    /// Squared norm of the unnormalised sum of vertex vectors of `h`.
    pub fn norm_squared(&self, h: &SmallGraph) -> BigRational {
        q(h.order() as i64) + q(2 * h.edge_count() as i64) * &self.p + q(2 * h.nonedge_count() as i64) * &self.q
    }
}

/// `C_t^α(x)` by the three-term recurrence.
pub fn gegenbauer(t: u32, alpha: f64, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * alpha * x);
    if t == 0 {
        return prev;
    }
    for n in 2..=t {
        let n = n as f64;
        let next = (2.0 * x * (alpha + n - 1.0) * cur - (2.0 * alpha + n - 2.0) * prev) / n;
        prev = cur;
        cur = next;
    }
    cur
}

/// `C_t^α(c / sqrt(m))` as `(u, v)` with value `u + v / sqrt(m)`.
pub fn gegenbauer_scaled(t: u32, alpha: &BigRational, c: &BigRational, m: &BigRational) -> (BigRational, BigRational) {
    // x * (u + v s) with x = c s and s^2 = 1/m.
    let times_x = |(u, v): &(BigRational, BigRational)| (c * v / m, c * u);
    let lin = |a: &BigRational, x: &(BigRational, BigRational), b: &BigRational, y: &(BigRational, BigRational)| {
        (a * &x.0 - b * &y.0, a * &x.1 - b * &y.1)
    };
    let one = BigRational::one();
    let c0 = (one.clone(), BigRational::zero());
    if t == 0 {
        return c0;
    }
    let two = q(2);
    let x1 = times_x(&c0);
    let mut cur = (&x1.0 * &two * alpha, &x1.1 * &two * alpha);
    let mut prev = c0;
    for n in 2..=t {
        let nn = q(n as i64);
        let a = &two * (alpha + &nn - &one) / &nn;
        let b = (&two * alpha + &nn - &two) / &nn;
        let next = lin(&a, &times_x(&cur), &b, &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// An ordered pair of vertex sets covering a union graph. Masks refer to
/// the union graph's own labelling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairConfiguration {
    pub union: CanonicalKey,
    pub first: u16,
    pub second: u16,
    pub overlap: u32,
    /// Ordered pairs (u in first, v in second) with u ~ v.
    pub cross_edges: u32,
    /// Ordered pairs with u != v and u not adjacent to v.
    pub cross_nonedges: u32,
}

impl PairConfiguration {
    pub fn new(w: &SmallGraph, first: u16, second: u16) -> Self {
        let overlap = (first & second).count_ones();
        let mut e = 0;
        for u in 0..w.order() {
            if first >> u & 1 == 1 {
                e += (w.neighbors(u) & second).count_ones();
            }
        }
        let pairs = first.count_ones() * second.count_ones();
        PairConfiguration {
            union: canonical_key(w),
            first,
            second,
            overlap,
            cross_edges: e,
            cross_nonedges: pairs - overlap - e,
        }
    }

    /// Numerator `|V ∩ V'| + e p + ē q` of the inner product.
    pub fn numerator(&self, geom: &ProjectionGeometry) -> BigRational {
        q(self.overlap as i64) + q(self.cross_edges as i64) * &geom.p + q(self.cross_nonedges as i64) * &geom.q
    }
}

/// Inner product of the two representatives of `config`, given the squared
/// norms of the two pattern types.
pub fn rep_inner_product(config: &PairConfiguration, geom: &ProjectionGeometry, first_norm: &BigRational, second_norm: &BigRational) -> f64 {
    let num = config.numerator(geom).to_f64().unwrap_or(f64::NAN);
    let den = Float::sqrt((first_norm * second_norm).to_f64().unwrap_or(f64::NAN));
    num / den
}

/// Ordered pairs `(V1, V2)` covering `w` with `w[V1] ≅ a` and `w[V2] ≅ b`.
pub fn placements(w: &SmallGraph, a: &SmallGraph, b: &SmallGraph) -> Vec<PairConfiguration> {
    let n = w.order();
    let full = w.vertex_mask();
    let (ka, kb) = (canonical_key(a), canonical_key(b));
    let (na, nb) = (a.order(), b.order());
    if na + nb < n || na > n || nb > n {
        return Vec::new();
    }
    let mut firsts = Vec::new();
    for_each_subset(n, na, |m| {
        if canonical_key(&w.induced(m)) == ka {
            firsts.push(m);
        }
    });
    let mut cache: BTreeMap<u16, bool> = BTreeMap::new();
    let mut out = Vec::new();
    for &v1 in &firsts {
        let rest = full & !v1;
        let extra = nb - rest.count_ones() as usize;
        // Choose the remaining vertices of V2 inside V1.
        let inside: Vec<usize> = (0..n).filter(|&i| v1 >> i & 1 == 1).collect();
        for_each_subset(inside.len(), extra, |sel| {
            let mut v2 = rest;
            for (j, &i) in inside.iter().enumerate() {
                if sel >> j & 1 == 1 {
                    v2 |= 1 << i;
                }
            }
            let ok = *cache.entry(v2).or_insert_with(|| canonical_key(&w.induced(v2)) == kb);
            if ok {
                out.push(PairConfiguration::new(w, v1, v2));
            }
        });
    }
    out
}

/// `c0 + c1 P` in the single bounded symbol.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Linear {
    pub constant: BigRational,
    pub coefficient: BigRational,
}

impl Linear {
    fn add_scaled(&mut self, v: &Linear, c: &BigRational) {
        self.constant += &v.constant * c;
        self.coefficient += &v.coefficient * c;
    }

    fn from_affine(v: &AffineValue, symbol: Option<Symbol>) -> Result<Self, GeoError> {
        let mut out = Linear { constant: v.constant.clone(), coefficient: BigRational::zero() };
        for (s, c) in &v.terms {
            if Some(*s) == symbol {
                out.coefficient = c.clone();
            } else {
                return Err(GeoError::ExtraSymbol(*s));
            }
        }
        Ok(out)
    }
}

/// `S = u + v / sqrt(radicand)` with `u`, `v` affine in the free count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingSum {
    pub rational: Linear,
    pub radical: Linear,
    pub radicand: BigRational,
}

impl PairingSum {
    pub fn involves_symbol(&self) -> bool {
        !self.rational.coefficient.is_zero() || !self.radical.coefficient.is_zero()
    }

    /// The constant part as a float.
    pub fn constant_f64(&self) -> f64 {
        let r = Float::sqrt(self.radicand.to_f64().unwrap_or(f64::NAN));
        self.rational.constant.to_f64().unwrap_or(f64::NAN) + self.radical.constant.to_f64().unwrap_or(f64::NAN) / r
    }

    /// Square of the constant part, exact when one component vanishes.
    fn square(&self) -> Option<BigRational> {
        let (u, v) = (&self.rational.constant, &self.radical.constant);
        if v.is_zero() {
            Some(u * u)
        } else if u.is_zero() {
            Some(v * v / &self.radicand)
        } else {
            None
        }
    }

    /// Exact value when the radical part vanishes or the radicand is a square.
    fn rational_value(&self) -> Option<Linear> {
        if self.radical == Linear::default() {
            return Some(self.rational.clone());
        }
        let root = rational_sqrt(&self.radicand)?;
        let mut out = self.rational.clone();
        out.add_scaled(&self.radical, &root.recip());
        Some(out)
    }
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| BigRational::new(n, d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingSums {
    pub xy: PairingSum,
    pub xx: PairingSum,
    pub yy: PairingSum,
}

pub fn pairing_sum(
    a: &SmallGraph,
    b: &SmallGraph,
    counts: &ConcreteTable,
    geom: &ProjectionGeometry,
    t: u32,
    symbol: Option<Symbol>,
) -> Result<PairingSum, GeoError> {
    let (na, nb) = (geom.norm_squared(a), geom.norm_squared(b));
    if !na.is_positive() || !nb.is_positive() {
        return Err(GeoError::DegenerateNorm);
    }
    let radicand = &na * &nb;
    let mut rational = Linear::default();
    let mut radical = Linear::default();
    let lo = a.order().max(b.order());
    let hi = a.order() + b.order();
    for o in lo..=hi {
        let level = counts.orders.get(o - 1).ok_or(GeoError::MissingOrder(o))?;
        for (key, value) in level.keys.iter().zip(&level.values) {
            if value.constant.is_zero() && value.terms.is_empty() {
                continue;
            }
            let w = key.to_graph();
            let configs = placements(&w, a, b);
            if configs.is_empty() {
                continue;
            }
            let count = Linear::from_affine(value, symbol)?;
            let (mut u, mut v) = (BigRational::zero(), BigRational::zero());
            for c in &configs {
                let (cu, cv) = gegenbauer_scaled(t, &geom.alpha, &c.numerator(geom), &radicand);
                u += cu;
                v += cv;
            }
            rational.add_scaled(&count, &u);
            radical.add_scaled(&count, &v);
        }
    }
    Ok(PairingSum { rational, radical, radicand })
}

pub fn pairing_sums(
    x: &SmallGraph,
    y: &SmallGraph,
    counts: &ConcreteTable,
    geom: &ProjectionGeometry,
    t: u32,
    symbol: Option<Symbol>,
) -> Result<PairingSums, GeoError> {
    Ok(PairingSums {
        xy: pairing_sum(x, y, counts, geom, t, symbol)?,
        xx: pairing_sum(x, x, counts, geom, t, symbol)?,
        yy: pairing_sum(y, y, counts, geom, t, symbol)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Upper,
    Lower,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeoBound {
    pub params: SrgParams,
    pub t: u32,
    /// Exact bound on the free count.
    pub value: BigRational,
    pub direction: Direction,
    /// Odd `t` gave an upper bound and even `t` a lower one.
    pub parity_agrees: bool,
    pub sums: PairingSums,
}

impl GeoBound {
    pub fn value_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }
}

/// Solves `S_XY^2 <= S_XX S_YY` for the free count, which may appear in `S_YY` only.
pub fn cauchy_schwarz_bound(
    counts: &ConcreteTable,
    x: &SmallGraph,
    y: &SmallGraph,
    t: u32,
    symbol: Symbol,
) -> Result<GeoBound, GeoError> {
    let geom = ProjectionGeometry::new(&counts.params)?;
    let sums = pairing_sums(x, y, counts, &geom, t, Some(symbol))?;
    if sums.xy.involves_symbol() || sums.xx.involves_symbol() {
        return Err(GeoError::Unsupported);
    }
    let sxy2 = sums.xy.square().ok_or(GeoError::Unsupported)?;
    let sxx = sums.xx.rational_value().ok_or(GeoError::Unsupported)?.constant;
    let syy = sums.yy.rational_value().ok_or(GeoError::Unsupported)?;
    // S_XY^2 <= S_XX (A + B P).
    let b = &sxx * &syy.coefficient;
    if b.is_zero() {
        return Err(GeoError::NoConstraint);
    }
    let value = (&sxy2 - &sxx * &syy.constant) / &b;
    let direction = if b.is_positive() { Direction::Lower } else { Direction::Upper };
    let parity_agrees = (t % 2 == 1) == (direction == Direction::Upper);
    Ok(GeoBound { params: counts.params, t, value, direction, parity_agrees, sums })
}

/// The path on four vertices, read as "path of length 4" in the Moore table.
pub fn p4_fixture() -> SmallGraph {
    SmallGraph::path(4)
}

/// The alternative reading: the path with four edges.
pub fn p5_fixture() -> SmallGraph {
    SmallGraph::path(5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gegenbauer_base_cases() {
        let a = 2.5;
        for x in [-0.7, 0.0, 0.3, 1.0] {
            assert_eq!(gegenbauer(0, a, x), 1.0);
            assert!((gegenbauer(1, a, x) - 2.0 * a * x).abs() < 1e-12);
            let c2 = 2.0 * a * (a + 1.0) * x * x - a;
            assert!((gegenbauer(2, a, x) - c2).abs() < 1e-12);
        }
    }

    #[test]
    fn scaled_matches_float() {
        let alpha = BigRational::new(19.into(), 2.into());
        let c = BigRational::new((-3).into(), 4.into());
        let m = q(7);
        for t in 0..8 {
            let (u, v) = gegenbauer_scaled(t, &alpha, &c, &m);
            let exact = u.to_f64().unwrap() + v.to_f64().unwrap() / 7f64.sqrt();
            let float = gegenbauer(t, 9.5, -0.75 / 7f64.sqrt());
            assert!((exact - float).abs() < 1e-9 * float.abs().max(1.0), "t={t}");
            assert!(u.is_zero() || v.is_zero());
        }
    }

    #[test]
    fn single_vertex_products() {
        let params = SrgParams::new(77, 16, 0, 4).unwrap();
        let geom = ProjectionGeometry::new(&params).unwrap();
        assert_eq!(geom.g, 21);
        let k1 = SmallGraph::empty(1);
        let one = geom.norm_squared(&k1);
        let edge = SmallGraph::complete(2);
        let cfg = PairConfiguration::new(&edge, 0b01, 0b10);
        assert_eq!(cfg.numerator(&geom), geom.p);
        assert!((rep_inner_product(&cfg, &geom, &one, &one) - geom.p.to_f64().unwrap()).abs() < 1e-15);
        let same = PairConfiguration::new(&k1, 1, 1);
        assert_eq!(rep_inner_product(&same, &geom, &one, &one), 1.0);
        let apart = PairConfiguration::new(&SmallGraph::empty(2), 0b01, 0b10);
        assert_eq!(apart.numerator(&geom), geom.q);
    }

    #[test]
    fn placements_cover_union() {
        let w = SmallGraph::path(4);
        let k1 = SmallGraph::empty(1);
        let k12 = SmallGraph::path(3);
        // A K1 placed outside one of the two induced paths on three vertices.
        let ps = placements(&w, &k1, &k12);
        assert_eq!(ps.len(), 2);
        for p in &ps {
            assert_eq!(p.first | p.second, w.vertex_mask());
        }
    }
}
