//! Text renderings shared by the subcommands.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use srg_core::algebra::{AffineValue, Symbol};
use srg_core::graph::graph6::graph6_encode;
use srg_core::graph::CanonicalKey;
use std::collections::BTreeMap;

pub fn key_graph6(key: &CanonicalKey) -> String {
    graph6_encode(&key.to_graph())
}

/// `x` rounded to `places` decimals, halves away from zero.
pub fn decimal(x: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let y = (x * BigRational::from_integer(scale.clone())).round().to_integer();
    let sign = if y.is_negative() { "-" } else { "" };
    let y = y.abs();
    let (int, frac) = (&y / &scale, &y % &scale);
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{:0>width$}", frac.to_string(), width = places as usize)
    }
}

/// `c0 + c1*P1 + ...` with zero parts omitted; `0` when everything vanishes.
pub fn affine_text(v: &AffineValue) -> String {
    let mut parts = Vec::new();
    if !v.constant.is_zero() || v.terms.is_empty() {
        parts.push(v.constant.to_string());
    }
    for (s, c) in &v.terms {
        parts.push(format!("{c}*{}", s.name()));
    }
    parts.join(" + ")
}

/// Folds fixed symbol values into the constant term.
pub fn substitute(v: &AffineValue, fixed: &BTreeMap<Symbol, BigRational>) -> AffineValue {
    let mut out = AffineValue::constant(v.constant.clone());
    for (s, c) in &v.terms {
        match fixed.get(s) {
            Some(x) => out.constant += c * x,
            None => {
                out.terms.insert(*s, c.clone());
            }
        }
    }
    out
}

/// Left-aligned columns separated by two spaces.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().enumerate().map(|(c, s)| format!("{s:<w$}", w = widths[c])).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// A Markdown table with a header row.
pub fn markdown(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("| {} |\n|{}|\n", header.join(" | "), header.iter().map(|_| "---").collect::<Vec<_>>().join("|"));
    for r in rows {
        out.push_str(&format!("| {} |\n", r.join(" | ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(&q(1, 8), 2), "0.13");
        assert_eq!(decimal(&q(-1, 8), 2), "-0.13");
        assert_eq!(decimal(&q(-1, 1000), 2), "0.00");
        assert_eq!(decimal(&q(266266000, 1), 0), "266266000");
        assert_eq!(decimal(&q(53463, 100), 2), "534.63");
    }
}
