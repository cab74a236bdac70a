//! Affine expressions `c0 + sum ci * Pi` in free count parameters.

use super::poly::Var;
use super::ratfunc::{DivisionByZero, RationalFunction};
use crate::graph::CanonicalKey;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_rational::BigRational;

/// A free parameter: the count of one designated graph, numbered by the
/// order in which the solver introduced it (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub index: u32,
    pub graph: CanonicalKey,
}

impl Symbol {
    pub fn name(&self) -> String {
        alloc::format!("P{}", self.index)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CountExpression {
    constant: RationalFunction,
    terms: BTreeMap<Symbol, RationalFunction>,
}

impl CountExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: RationalFunction) -> Self {
        CountExpression { constant: c, terms: BTreeMap::new() }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(RationalFunction::int(c))
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(s, RationalFunction::one());
        CountExpression { constant: RationalFunction::zero(), terms }
    }

    pub fn constant_part(&self) -> &RationalFunction {
        &self.constant
    }

    pub fn terms(&self) -> &BTreeMap<Symbol, RationalFunction> {
        &self.terms
    }

    pub fn coefficient(&self, s: &Symbol) -> RationalFunction {
        self.terms.get(s).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.terms.is_empty()
    }

    /// True when no free symbol appears.
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.terms.keys()
    }

    pub fn add_assign(&mut self, other: &CountExpression) {
        self.add_scaled(other, &RationalFunction::one());
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &CountExpression, c: &RationalFunction) {
        if c.is_zero() {
            return;
        }
        self.constant = &self.constant + &(&other.constant * c);
        for (s, v) in &other.terms {
            let add = v * c;
            let e = self.terms.entry(*s).or_insert_with(RationalFunction::zero);
            *e = &*e + &add;
            if e.is_zero() {
                self.terms.remove(s);
            }
        }
    }

    /// `self += c * other` for a rational scalar.
    pub fn add_scaled_rational(&mut self, other: &CountExpression, c: &BigRational) {
        self.add_scaled(other, &RationalFunction::constant(c.clone()));
    }

    pub fn scale(&self, c: &RationalFunction) -> CountExpression {
        if c.is_zero() {
            return CountExpression::zero();
        }
        CountExpression {
            constant: &self.constant * c,
            terms: self.terms.iter().map(|(s, v)| (*s, v * c)).collect(),
        }
    }

    pub fn scale_rational(&self, c: &BigRational) -> CountExpression {
        if num_traits::Zero::is_zero(c) {
            return CountExpression::zero();
        }
        CountExpression {
            constant: self.constant.scale(c),
            terms: self.terms.iter().map(|(s, v)| (*s, v.scale(c))).collect(),
        }
    }

    pub fn sub(&self, other: &CountExpression) -> CountExpression {
        let mut out = self.clone();
        out.add_scaled(other, &RationalFunction::int(-1));
        out
    }

    pub fn add(&self, other: &CountExpression) -> CountExpression {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// Replaces symbols by expressions (symbols missing from `values` stay).
    pub fn substitute(&self, values: &BTreeMap<Symbol, CountExpression>) -> CountExpression {
        let mut out = CountExpression::constant(self.constant.clone());
        for (s, c) in &self.terms {
            match values.get(s) {
                Some(v) => out.add_scaled(v, c),
                None => out.add_scaled(&CountExpression::symbol(*s), c),
            }
        }
        out
    }

    pub fn map_coefficients(
        &self,
        mut f: impl FnMut(&RationalFunction) -> Result<RationalFunction, DivisionByZero>,
    ) -> Result<CountExpression, DivisionByZero> {
        let constant = f(&self.constant)?;
        let mut terms = BTreeMap::new();
        for (s, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                terms.insert(*s, v);
            }
        }
        Ok(CountExpression { constant, terms })
    }

    pub fn specialize(&self, v: Var, value: &BigRational) -> Result<CountExpression, DivisionByZero> {
        self.map_coefficients(|c| c.specialize(v, value))
    }

    /// Coefficients evaluated at concrete parameters.
    pub fn eval_params(&self, k: &BigRational, lambda: &BigRational, mu: &BigRational) -> Option<AffineValue> {
        let constant = self.constant.eval(k, lambda, mu)?;
        let mut terms = BTreeMap::new();
        for (s, c) in &self.terms {
            let v = c.eval(k, lambda, mu)?;
            if !num_traits::Zero::is_zero(&v) {
                terms.insert(*s, v);
            }
        }
        Some(AffineValue { constant, terms })
    }

    pub fn to_text(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if !self.constant.is_zero() || self.terms.is_empty() {
            parts.push(self.constant.to_text());
        }
        for (s, c) in &self.terms {
            if c == &RationalFunction::one() {
                parts.push(s.name());
            } else {
                parts.push(alloc::format!("({})*{}", c, s.name()));
            }
        }
        parts.join(" + ")
    }
}

impl fmt::Debug for CountExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for CountExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// An affine form with rational coefficients (a count at concrete parameters).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AffineValue {
    pub constant: BigRational,
    pub terms: BTreeMap<Symbol, BigRational>,
}

impl AffineValue {
    pub fn constant(c: BigRational) -> Self {
        AffineValue { constant: c, terms: BTreeMap::new() }
    }

    pub fn coefficient(&self, s: &Symbol) -> BigRational {
        self.terms.get(s).cloned().unwrap_or_default()
    }

    /// Value once every symbol is assigned; `None` if one is missing.
    pub fn evaluate(&self, values: &BTreeMap<Symbol, BigRational>) -> Option<BigRational> {
        let mut total = self.constant.clone();
        for (s, c) in &self.terms {
            total += c * values.get(s)?;
        }
        Some(total)
    }

    pub fn add_scaled(&mut self, other: &AffineValue, c: &BigRational) {
        self.constant += &other.constant * c;
        for (s, v) in &other.terms {
            let e = self.terms.entry(*s).or_default();
            *e += v * c;
            if num_traits::Zero::is_zero(e) {
                self.terms.remove(s);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_key, SmallGraph};

    #[test]
    fn affine_bookkeeping() {
        let s = Symbol { index: 1, graph: canonical_key(&SmallGraph::complete_bipartite(3, 3)) };
        let mut e = CountExpression::int(3);
        e.add_scaled(&CountExpression::symbol(s), &RationalFunction::var(Var::Mu));
        assert_eq!(e.to_text(), "3 + (mu)*P1");
        let cancel = e.sub(&e);
        assert!(cancel.is_zero());
        assert!(cancel.terms().is_empty());
        let mut vals = BTreeMap::new();
        vals.insert(s, CountExpression::int(2));
        assert_eq!(e.substitute(&vals).to_text(), "2*mu + 3");
    }
}
