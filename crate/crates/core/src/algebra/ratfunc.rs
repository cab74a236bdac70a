//! Rational functions in k, λ, μ kept in lowest terms with a monic denominator.

use super::poly::{Poly, Var};
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionByZero;

impl fmt::Display for DivisionByZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("division by the zero rational function")
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: Poly::one(), den: Poly::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        RationalFunction { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn int(c: i64) -> Self {
        RationalFunction { num: Poly::int(c), den: Poly::one() }
    }

    pub fn var(v: Var) -> Self {
        RationalFunction { num: Poly::var(v), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    /// Builds `num / den` in lowest terms.
    pub fn new(num: Poly, den: Poly) -> Result<Self, DivisionByZero> {
        if den.is_zero() {
            return Err(DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let (num, den) = if den.as_constant().is_some() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        let lc = den.leading().expect("nonzero denominator").1.recip();
        RationalFunction { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn recip(&self) -> Result<Self, DivisionByZero> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, DivisionByZero> {
        if rhs.is_zero() {
            return Err(DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Exact value at a point; `None` if the denominator vanishes there.
    pub fn eval(&self, k: &BigRational, lambda: &BigRational, mu: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(k, lambda, mu);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(k, lambda, mu) / d)
    }

    /// Replaces one variable by a constant.
    pub fn specialize(&self, v: Var, value: &BigRational) -> Result<Self, DivisionByZero> {
        Self::new(self.num.specialize(v, value), self.den.specialize(v, value))
    }

    /// Replaces one variable by a rational function.
    pub fn substitute(&self, v: Var, value: &RationalFunction) -> Result<Self, DivisionByZero> {
        let num = compose(&self.num, v, value);
        let den = compose(&self.den, v, value);
        num.checked_div(&den)
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Normalised text: `num` or `(num)/(den)`.
    pub fn to_text(&self) -> String {
        if self.den.is_one() {
            self.num.to_text()
        } else {
            alloc::format!("({})/({})", self.num, self.den)
        }
    }
}

fn compose(p: &Poly, v: Var, value: &RationalFunction) -> RationalFunction {
    let coeffs = p.coefficients_in(v);
    let mut acc = RationalFunction::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * value) + &RationalFunction::from_poly(c.clone());
    }
    acc
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &-rhs
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction { num: &self.num * &rhs.num, den: Poly::one() };
        }
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    /// # Panics
    /// On division by zero; use [`RationalFunction::checked_div`] to handle it.
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        RationalFunction::zero()
    }
}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Binomial coefficient C(x, r) as a polynomial in an arbitrary expression.
pub fn binomial(x: &RationalFunction, r: u32) -> RationalFunction {
    let mut acc = RationalFunction::one();
    for i in 0..r {
        acc = &acc * &(x - &RationalFunction::int(i as i64));
    }
    let fact: u64 = (1..=r as u64).product();
    acc.scale(&BigRational::new(One::one(), fact.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(v: Var) -> RationalFunction {
        RationalFunction::var(v)
    }

    #[test]
    fn n_after_lambda_zero() {
        let (k, m) = (rf(Var::K), rf(Var::Mu));
        let kk1 = &k * &(&k - &RationalFunction::one());
        let n = &(&kk1 / &m) + &(&k + &RationalFunction::one());
        assert_eq!(n.to_text(), "(k^2 + k*mu - k + mu)/(mu)");
        let r = |x: i64| BigRational::from_integer(x.into());
        assert_eq!(n.eval(&r(3), &r(0), &r(1)), Some(r(10)));
        assert_eq!(n.eval(&r(3), &r(0), &r(0)), None);
    }

    #[test]
    fn cancellation() {
        let (k, l, m) = (rf(Var::K), rf(Var::Lambda), rf(Var::Mu));
        let f = &(&k * &l) - &(&m + &RationalFunction::int(2));
        assert_eq!(&f / &f, RationalFunction::one());
        let g = &(&k - &m) * &f;
        let h = &(&l + &m) * &f;
        let q = &g / &h;
        assert_eq!(q, &(&k - &m) / &(&l + &m));
        assert!(f.checked_div(&RationalFunction::zero()).is_err());
    }

    #[test]
    fn substitution() {
        let (k, l) = (rf(Var::K), rf(Var::Lambda));
        let e = &(&k * &k) + &l;
        let s = e.substitute(Var::K, &(&l + &RationalFunction::one())).unwrap();
        assert_eq!(s.to_text(), "lambda^2 + 3*lambda + 1");
        assert_eq!(binomial(&k, 2).to_text(), "1/2*k^2 - 1/2*k");
    }
}
