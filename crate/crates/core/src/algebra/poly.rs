//! Sparse multivariate polynomials over Q in the variables k, λ, μ.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The three parameter variables, in lexicographic priority order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    K,
    Lambda,
    Mu,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::K, Var::Lambda, Var::Mu];

    fn shift(self) -> u32 {
        match self {
            Var::K => 32,
            Var::Lambda => 16,
            Var::Mu => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::K => "k",
            Var::Lambda => "lambda",
            Var::Mu => "mu",
        }
    }
}

/// Exponent vector packed so that integer order is lex order with k > λ > μ.
pub type Monomial = u64;

#[inline]
pub fn exponent(m: Monomial, v: Var) -> u32 {
    (m >> v.shift() & 0xffff) as u32
}

#[inline]
fn mono_of(v: Var, e: u32) -> Monomial {
    (e as u64) << v.shift()
}

#[inline]
fn divides(a: Monomial, b: Monomial) -> bool {
    Var::ALL.iter().all(|&v| exponent(a, v) <= exponent(b, v))
}

#[inline]
fn mono_min(a: Monomial, b: Monomial) -> Monomial {
    Var::ALL.iter().map(|&v| mono_of(v, exponent(a, v).min(exponent(b, v)))).sum()
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(0, c);
        }
        p
    }

    pub fn int(c: i64) -> Self {
        Poly::constant(BigRational::from_integer(c.into()))
    }

    pub fn var(v: Var) -> Self {
        Poly::term(BigRational::one(), mono_of(v, 1))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term in lex order.
    pub fn leading(&self) -> Option<(Monomial, &BigRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|&m| exponent(m, v)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    fn mul_term(&self, c: &BigRational, m: Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, x)| (k + m, x * c)).collect() }
    }

    fn add_scaled(&mut self, other: &Poly, c: &BigRational, m: Monomial) {
        for (k, x) in &other.terms {
            let key = k + m;
            let v = x * c;
            match self.terms.get_mut(&key) {
                Some(e) => {
                    *e += v;
                    if e.is_zero() {
                        self.terms.remove(&key);
                    }
                }
                None => {
                    self.terms.insert(key, v);
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, k: &BigRational, lambda: &BigRational, mu: &BigRational) -> BigRational {
        let vals = [k, lambda, mu];
        let mut total = BigRational::zero();
        for (&m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &v) in Var::ALL.iter().enumerate() {
                let e = exponent(m, v);
                if e > 0 {
                    t *= num_traits::pow(vals[i].clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Replaces a variable by a constant.
    pub fn specialize(&self, v: Var, value: &BigRational) -> Poly {
        let mut out = Poly::zero();
        for (&m, c) in &self.terms {
            let e = exponent(m, v);
            let rest = m - mono_of(v, e);
            let coeff = c * num_traits::pow(value.clone(), e as usize);
            out.add_scaled(&Poly::constant(coeff), &BigRational::one(), rest);
        }
        out
    }

    /// Coefficients as a univariate polynomial in `v`, lowest degree first.
    pub fn coefficients_in(&self, v: Var) -> Vec<Poly> {
        let d = self.degree_in(v) as usize;
        let mut out = alloc::vec![Poly::zero(); d + 1];
        for (&m, c) in &self.terms {
            let e = exponent(m, v);
            out[e as usize].terms.insert(m - mono_of(v, e), c.clone());
        }
        out
    }

    fn from_coefficients(v: Var, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            out.add_scaled(c, &BigRational::one(), mono_of(v, e as u32));
        }
        out
    }

    /// Exact quotient; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        let dc = dc.clone();
        let mut r = self.clone();
        let mut q = Poly::zero();
        while let Some((rm, rc)) = r.leading() {
            if !divides(dm, rm) {
                return None;
            }
            let t = rc / &dc;
            let tm = rm - dm;
            r.add_scaled(d, &-t.clone(), tm);
            q.terms.insert(tm, t);
        }
        Some(q)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(&first) = it.next() else { return 0 };
        it.fold(first, |acc, &m| mono_min(acc, m))
    }

    pub fn divide_monomial(&self, m: Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, c)| (k - m, c.clone())).collect() }
    }

    pub fn multiply_monomial(&self, m: Monomial) -> Poly {
        self.mul_term(&BigRational::one(), m)
    }

    /// Multiplies through to integer coefficients with content 1 and a
    /// positive leading coefficient; returns the factor used.
    pub fn primitive(&self) -> (BigRational, Poly) {
        if self.is_zero() {
            return (BigRational::one(), Poly::zero());
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(&(c.numer() * (&lcm / c.denom())));
        }
        let mut factor = BigRational::new(lcm, g);
        if self.leading().is_some_and(|(_, c)| c.is_negative()) {
            factor = -factor;
        }
        (factor.clone(), self.scale(&factor))
    }

    /// Greatest common divisor, monic in lex order (or zero when both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let g = gcd_rec(self, other);
        monic(&g)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if self.is_zero() {
            s.push('0');
            return s;
        }
        for (i, (&m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if m == 0 || !a.is_one() {
                factors.push(alloc::format!("{a}"));
            }
            for &v in &Var::ALL {
                match exponent(m, v) {
                    0 => {}
                    1 => factors.push(String::from(v.name())),
                    e => factors.push(alloc::format!("{}^{e}", v.name())),
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

pub fn monic(p: &Poly) -> Poly {
    match p.leading() {
        None => Poly::zero(),
        Some((_, c)) => {
            let inv = c.recip();
            p.scale(&inv)
        }
    }
}

/// Main variable for the recursive gcd: the first one present in either input.
fn main_var(a: &Poly, b: &Poly) -> Option<Var> {
    Var::ALL.into_iter().find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
}

fn gcd_rec(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.len() == 1 || b.len() == 1 {
        return Poly::term(BigRational::one(), mono_min(a.monomial_content(), b.monomial_content()));
    }
    let Some(v) = main_var(a, b) else {
        return Poly::one();
    };
    let ca = a.coefficients_in(v);
    let cb = b.coefficients_in(v);
    let cont_a = content(&ca);
    let cont_b = content(&cb);
    let cont = gcd_rec(&cont_a, &cont_b);
    let pa: Vec<Poly> = ca.iter().map(|c| c.div_exact(&cont_a).expect("content divides")).collect();
    let pb: Vec<Poly> = cb.iter().map(|c| c.div_exact(&cont_b).expect("content divides")).collect();
    let (mut f, mut g) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
    while !(g.len() == 1 && g[0].is_zero()) {
        let r = prem(&f, &g);
        f = g;
        g = if r.iter().all(|c| c.is_zero()) {
            alloc::vec![Poly::zero()]
        } else {
            let c = content(&r);
            trim(r.iter().map(|x| x.div_exact(&c).expect("content divides")).collect())
        };
    }
    let prim = if f.len() == 1 { Poly::one() } else { Poly::from_coefficients(v, &f) };
    &prim * &cont
}

fn trim(mut v: Vec<Poly>) -> Vec<Poly> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn content(coeffs: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in coeffs {
        g = gcd_rec(&g, c);
        if g.as_constant().is_some() && !g.is_zero() {
            return Poly::one();
        }
    }
    monic(&g)
}

/// Pseudo-remainder of univariate polynomials with polynomial coefficients.
fn prem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let d = b.len() - 1;
    let lb = &b[d];
    let mut r = trim(a.to_vec());
    while r.len() > d && !(r.len() == 1 && r[0].is_zero()) {
        let m = r.len() - 1;
        let lr = r[m].clone();
        let mut next: Vec<Poly> = r.iter().map(|c| c * lb).collect();
        for (i, bc) in b.iter().enumerate() {
            next[m - d + i] = &next[m - d + i] - &(&lr * bc);
        }
        next.pop();
        r = trim(next);
        if r.is_empty() {
            r.push(Poly::zero());
        }
    }
    r
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigRational::one(), 0);
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigRational::one(), 0);
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &rhs.terms {
            out.add_scaled(self, c, *m);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-BigRational::one())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
