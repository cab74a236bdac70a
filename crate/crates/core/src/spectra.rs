//! Parameters, eigenvalues and feasibility conditions of strongly regular graphs.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Concrete parameters `srg(n, k, λ, μ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SrgParams {
    pub n: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamsError {
    /// `(k - λ - 1) k != (n - k - 1) μ`.
    Identity { lhs: i64, rhs: i64 },
    /// Degree outside `0 < k < n - 1`, or a negative λ/μ.
    Range,
    /// `μ = 0` (disjoint union of cliques) when `n` must be derived.
    Imprimitive,
    /// `n` derived from (k, λ, μ) is not an integer.
    NonIntegralOrder,
}

impl fmt::Display for ParamsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamsError::Identity { lhs, rhs } => write!(f, "(k-λ-1)k = {lhs} differs from (n-k-1)μ = {rhs}"),
            ParamsError::Range => write!(f, "parameters out of range"),
            ParamsError::Imprimitive => write!(f, "μ = 0"),
            ParamsError::NonIntegralOrder => write!(f, "n = k + 1 + k(k-λ-1)/μ is not an integer"),
        }
    }
}

impl SrgParams {
    pub fn new(n: i64, k: i64, lambda: i64, mu: i64) -> Result<Self, ParamsError> {
        if !(0 < k && k < n - 1) || lambda < 0 || mu < 0 || lambda >= k || mu > k {
            return Err(ParamsError::Range);
        }
        let lhs = (k - lambda - 1) * k;
        let rhs = (n - k - 1) * mu;
        if lhs != rhs {
            return Err(ParamsError::Identity { lhs, rhs });
        }
        Ok(SrgParams { n, k, lambda, mu })
    }

    /// Derives `n` from the defining identity.
    pub fn from_klm(k: i64, lambda: i64, mu: i64) -> Result<Self, ParamsError> {
        if mu <= 0 {
            return Err(ParamsError::Imprimitive);
        }
        let t = k * (k - lambda - 1);
        if t % mu != 0 {
            return Err(ParamsError::NonIntegralOrder);
        }
        Self::new(k + 1 + t / mu, k, lambda, mu)
    }

    /// Number of non-neighbours of a vertex.
    pub fn l(&self) -> i64 {
        self.n - self.k - 1
    }

    pub fn complement(&self) -> Result<Self, ParamsError> {
        let (n, k, l, m) = (self.n, self.k, self.lambda, self.mu);
        Self::new(n, n - k - 1, n - 2 - 2 * k + m, n - 2 * k + l)
    }

    pub fn k_rational(&self) -> BigRational {
        BigRational::from_integer(self.k.into())
    }

    pub fn lambda_rational(&self) -> BigRational {
        BigRational::from_integer(self.lambda.into())
    }

    pub fn mu_rational(&self) -> BigRational {
        BigRational::from_integer(self.mu.into())
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// An element `a + b√d` of a real quadratic field (`d` not a perfect square
/// unless `b = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadratic {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigInt,
}

impl Quadratic {
    pub fn rational(a: BigRational, d: &BigInt) -> Self {
        Quadratic { a, b: BigRational::zero(), d: d.clone() }
    }

    pub fn int(a: i64, d: &BigInt) -> Self {
        Self::rational(BigRational::from_integer(a.into()), d)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // Opposite signs: compare a² with b²d.
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * BigRational::from_integer(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * num_traits::Float::sqrt(self.d.to_f64().unwrap_or(f64::NAN))
    }
}

impl Add for &Quadratic {
    type Output = Quadratic;
    fn add(self, o: &Quadratic) -> Quadratic {
        Quadratic { a: &self.a + &o.a, b: &self.b + &o.b, d: self.d.clone() }
    }
}

impl Sub for &Quadratic {
    type Output = Quadratic;
    fn sub(self, o: &Quadratic) -> Quadratic {
        Quadratic { a: &self.a - &o.a, b: &self.b - &o.b, d: self.d.clone() }
    }
}

impl Mul for &Quadratic {
    type Output = Quadratic;
    fn mul(self, o: &Quadratic) -> Quadratic {
        let d = BigRational::from_integer(self.d.clone());
        Quadratic { a: &self.a * &o.a + &self.b * &o.b * d, b: &self.a * &o.b + &self.b * &o.a, d: self.d.clone() }
    }
}

impl Neg for &Quadratic {
    type Output = Quadratic;
    fn neg(self) -> Quadratic {
        Quadratic { a: -&self.a, b: -&self.b, d: self.d.clone() }
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

/// Eigenvalues `k`, `r` (multiplicity `f`) and `s` (multiplicity `g`), `r > s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub params: SrgParams,
    /// Discriminant `(λ - μ)² + 4(k - μ)`.
    pub discriminant: i64,
    pub r: Quadratic,
    pub s: Quadratic,
    pub f: Quadratic,
    pub g: Quadratic,
    /// `(n - 1)(μ - λ) = 2k`.
    pub conference: bool,
}

impl Spectrum {
    pub fn f_int(&self) -> Option<i64> {
        integral(&self.f)
    }

    pub fn g_int(&self) -> Option<i64> {
        integral(&self.g)
    }

    pub fn r_int(&self) -> Option<i64> {
        integral(&self.r)
    }

    pub fn s_int(&self) -> Option<i64> {
        integral(&self.s)
    }
}

fn integral(q: &Quadratic) -> Option<i64> {
    q.as_rational().filter(|x| x.is_integer()).and_then(|x| x.to_integer().to_i64())
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

pub fn spectrum(p: &SrgParams) -> Spectrum {
    let (n, k, l, m) = (p.n, p.k, p.lambda, p.mu);
    let disc = (l - m) * (l - m) + 4 * (k - m);
    assert!(disc > 0, "discriminant of a valid parameter set is positive");
    let root = disc.sqrt();
    let square = root * root == disc;
    // Work in Q(√D); with a square discriminant use d = 1 and fold b into a.
    let d = BigInt::from(if square { 1 } else { disc });
    let sqrt_d = if square {
        Quadratic::int(root, &d)
    } else {
        Quadratic { a: BigRational::zero(), b: BigRational::one(), d: d.clone() }
    };
    let lm = Quadratic::int(l - m, &d);
    let h = Quadratic::rational(half(), &d);
    let r = &(&lm + &sqrt_d) * &h;
    let s = &(&lm - &sqrt_d) * &h;
    // (2k + (n-1)(λ-μ)) / √D
    let t = 2 * k + (n - 1) * (l - m);
    let ratio = if square {
        Quadratic::rational(BigRational::new(t.into(), root.into()), &d)
    } else {
        Quadratic { a: BigRational::zero(), b: BigRational::new(t.into(), disc.into()), d: d.clone() }
    };
    let nm1 = Quadratic::int(n - 1, &d);
    let f = &(&nm1 - &ratio) * &h;
    let g = &(&nm1 + &ratio) * &h;
    Spectrum { params: *p, discriminant: disc, r: fold(r), s: fold(s), f: fold(f), g: fold(g), conference: (n - 1) * (m - l) == 2 * k }
}

/// Normalises values over d = 1 so that `b` is always zero there.
fn fold(q: Quadratic) -> Quadratic {
    if q.d.is_one() {
        Quadratic { a: &q.a + &q.b, b: BigRational::zero(), d: q.d }
    } else {
        q
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Test {
    Integrality,
    Krein1,
    Krein2,
    AbsoluteBound,
    Conference,
}

impl Test {
    pub fn name(self) -> &'static str {
        match self {
            Test::Integrality => "INTEGRALITY",
            Test::Krein1 => "KREIN1",
            Test::Krein2 => "KREIN2",
            Test::AbsoluteBound => "ABSOLUTE",
            Test::Conference => "CONFERENCE",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "N/A",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TestOutcome {
    pub test: Test,
    pub verdict: Verdict,
    /// The inequality with numbers substituted.
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct FeasibilityReport {
    pub params: SrgParams,
    pub spectrum: Spectrum,
    pub outcomes: Vec<TestOutcome>,
}

impl FeasibilityReport {
    pub fn verdict(&self, t: Test) -> Verdict {
        self.outcomes.iter().find(|o| o.test == t).map_or(Verdict::NotApplicable, |o| o.verdict)
    }

    /// No test failed.
    pub fn feasible(&self) -> bool {
        self.outcomes.iter().all(|o| o.verdict != Verdict::Fail)
    }
}

/// Krein inequalities as (left side, right side), each required to be `lhs <= rhs`.
fn krein_sides(sp: &Spectrum) -> [(Quadratic, Quadratic); 2] {
    let d = &sp.r.d;
    let one = Quadratic::int(1, d);
    let two = Quadratic::int(2, d);
    let k = Quadratic::int(sp.params.k, d);
    let (r, s) = (&sp.r, &sp.s);
    let rs2 = &two * &(r * s);
    let r1 = r + &one;
    let s1 = s + &one;
    let k1 = &r1 * &(&(&k + r) + &rs2);
    let k1r = &(&k + r) * &(&s1 * &s1);
    let k2 = &s1 * &(&(&k + s) + &rs2);
    let k2r = &(&k + s) * &(&r1 * &r1);
    [(k1, k1r), (k2, k2r)]
}

/// Whether `n` is a sum of two squares.
pub fn is_sum_of_two_squares(n: i64) -> bool {
    let mut a = 0i64;
    while a * a <= n {
        let rest = n - a * a;
        let b = rest.sqrt();
        if b * b == rest {
            return true;
        }
        a += 1;
    }
    false
}

pub fn feasibility_report(p: &SrgParams) -> FeasibilityReport {
    let sp = spectrum(p);
    let mut outcomes = Vec::new();
    let (fi, gi) = (sp.f_int(), sp.g_int());
    outcomes.push(TestOutcome {
        test: Test::Integrality,
        verdict: if fi.is_some() && gi.is_some() { Verdict::Pass } else { Verdict::Fail },
        detail: format!("f = {}, g = {}", sp.f, sp.g),
    });
    for (i, (lhs, rhs)) in krein_sides(&sp).iter().enumerate() {
        let ok = (rhs - lhs).signum() != Ordering::Less;
        outcomes.push(TestOutcome {
            test: if i == 0 { Test::Krein1 } else { Test::Krein2 },
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            detail: format!("{} <= {}", lhs, rhs),
        });
    }
    match (fi, gi) {
        (Some(f), Some(g)) => {
            let bf = f * (f + 3) / 2;
            let bg = g * (g + 3) / 2;
            let ok = p.n <= bf && p.n <= bg;
            outcomes.push(TestOutcome {
                test: Test::AbsoluteBound,
                verdict: if ok { Verdict::Pass } else { Verdict::Fail },
                detail: format!("n = {} <= f(f+3)/2 = {bf}, g(g+3)/2 = {bg}", p.n),
            });
        }
        _ => outcomes.push(TestOutcome {
            test: Test::AbsoluteBound,
            verdict: Verdict::NotApplicable,
            detail: String::from("multiplicities not integral"),
        }),
    }
    if sp.conference {
        let ok = is_sum_of_two_squares(p.n);
        outcomes.push(TestOutcome {
            test: Test::Conference,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            detail: format!("n = {} sum of two squares: {ok}", p.n),
        });
    } else {
        outcomes.push(TestOutcome { test: Test::Conference, verdict: Verdict::NotApplicable, detail: String::from("not a conference graph") });
    }
    FeasibilityReport { params: *p, spectrum: sp, outcomes }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Eigenspace {
    R,
    S,
}

/// Spherical design strength of the eigenspace embedding: 2, 3 when the
/// matching Krein inequality is tight, 4 when the absolute bound is tight as well.
pub fn design_level(p: &SrgParams, space: Eigenspace) -> u32 {
    let sp = spectrum(p);
    let [k1, k2] = krein_sides(&sp);
    let (sides, mult) = match space {
        Eigenspace::R => (k1, sp.f_int()),
        Eigenspace::S => (k2, sp.g_int()),
    };
    if (&sides.1 - &sides.0).signum() != Ordering::Equal {
        return 2;
    }
    match mult {
        Some(m) if m * (m + 3) / 2 == p.n => 4,
        _ => 3,
    }
}

/// A member of the two-parameter triangle-free family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TfFamilyMember {
    pub big_n: i64,
    pub big_m: i64,
    pub k: i64,
    pub mu: i64,
    /// `n` may be fractional for some (N, M).
    pub n: BigRational,
    pub params: Option<SrgParams>,
    /// Both eigenvalue multiplicities are integers.
    pub integral: bool,
}

/// `k = N(2N + 1 + M(N + 1))`, `μ = N(M + 1)`, `λ = 0`.
pub fn tf_family_params(big_n: i64, big_m: i64) -> TfFamilyMember {
    let k = big_n * (2 * big_n + 1 + big_m * (big_n + 1));
    let mu = big_n * (big_m + 1);
    let n = BigRational::from_integer((k + 1).into()) + BigRational::new((k * (k - 1)).into(), mu.into());
    let params = SrgParams::from_klm(k, 0, mu).ok();
    let integral = params.as_ref().is_some_and(|p| {
        let sp = spectrum(p);
        sp.f_int().is_some() && sp.g_int().is_some()
    });
    TfFamilyMember { big_n, big_m, k, mu, n, params, integral }
}

/// The linked pair of parameter sets for a given N.
pub fn biggs_linked_pair(big_n: i64) -> Result<(SrgParams, SrgParams), ParamsError> {
    let k = big_n * (big_n * big_n + 3 * big_n + 1);
    let mu = big_n * (big_n + 1);
    let k2 = big_n * big_n * (big_n + 2);
    let mu2 = big_n * big_n;
    Ok((SrgParams::from_klm(k, 0, mu)?, SrgParams::from_klm(k2, 0, mu2)?))
}

/// Parameters of the Krein graph Kr(r).
pub fn krein_params(r: i64) -> SrgParams {
    let n = (r * r + 3 * r) * (r * r + 3 * r);
    SrgParams::new(n, r * r * r + 3 * r * r + r, 0, r * r + r).expect("Krein parameters are valid")
}

/// Number of induced independent 3-sets, from the parameters alone.
pub fn independent_triples(p: &SrgParams) -> BigRational {
    let q = |x: i64| BigRational::from_integer(x.into());
    let (n, k, l, m) = (q(p.n), q(p.k), q(p.lambda), q(p.mu));
    let c3 = &n * (&n - q(1)) * (&n - q(2)) / q(6);
    let c2 = &n * (&n - q(1)) / q(2);
    let nk2 = &n * &k / q(2);
    c3 - c2 * &m - nk2 * (&l / q(3) - &m + (&n - q(2) * &k + &l))
}

/// Induced K_{3,3} count in Kr(r): half the independent triples times C(r, 3).
pub fn krein_k33_count(r: i64) -> BigInt {
    let p = krein_params(r);
    let c = BigInt::from(r) * (r - 1) * (r - 2) / 6;
    let half = independent_triples(&p) * BigRational::from_integer(c) / BigRational::from_integer(2.into());
    assert!(half.is_integer());
    half.to_integer()
}

/// Known triangle-free strongly regular graphs.
pub fn known_triangle_free() -> [SrgParams; 7] {
    [(5, 2, 1), (10, 3, 1), (16, 5, 2), (50, 7, 1), (56, 10, 2), (77, 16, 4), (100, 22, 6)]
        .map(|(n, k, m)| SrgParams::new(n, k, 0, m).expect("known parameters"))
}

impl Spectrum {
    /// `k + f r + g s`, zero for a consistent spectrum.
    pub fn trace(&self) -> Quadratic {
        let d = &self.r.d;
        &(&Quadratic::int(self.params.k, d) + &(&self.f * &self.r)) + &(&self.g * &self.s)
    }
}

impl Quadratic {
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }
}
