//! Helpers shared by the integration tests.
#![allow(dead_code)]

use num_rational::BigRational;
use srg_core::algebra::{RationalFunction, Var};
use srg_core::equations::Mode;
use srg_core::graph::SmallGraph;

/// `constant + coefficient * P1`.
#[derive(Clone, Debug)]
pub struct Affine {
    pub constant: RationalFunction,
    pub coefficient: RationalFunction,
}

impl Affine {
    fn scalar(c: RationalFunction) -> Self {
        Affine { constant: c, coefficient: RationalFunction::zero() }
    }

    fn add(&self, o: &Affine) -> Affine {
        Affine { constant: &self.constant + &o.constant, coefficient: &self.coefficient + &o.coefficient }
    }

    fn neg(&self) -> Affine {
        Affine { constant: -&self.constant, coefficient: -&self.coefficient }
    }

    fn mul(&self, o: &Affine) -> Affine {
        assert!(self.coefficient.is_zero() || o.coefficient.is_zero(), "formula is not affine in P1");
        Affine {
            constant: &self.constant * &o.constant,
            coefficient: &(&self.constant * &o.coefficient) + &(&self.coefficient * &o.constant),
        }
    }

    fn div(&self, o: &Affine) -> Affine {
        assert!(o.coefficient.is_zero(), "division by an expression in P1");
        Affine {
            constant: self.constant.checked_div(&o.constant).expect("nonzero divisor"),
            coefficient: self.coefficient.checked_div(&o.constant).expect("nonzero divisor"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Var(Var),
    P,
    Op(char),
}

fn tokens(s: &str) -> Vec<Tok> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        match c {
            ' ' => i += 1,
            '0'..='9' => {
                let j = (i..b.len()).find(|&j| !b[j].is_ascii_digit()).unwrap_or(b.len());
                out.push(Tok::Num(s[i..j].parse().unwrap()));
                i = j;
            }
            'k' => {
                out.push(Tok::Var(Var::K));
                i += 1;
            }
            'l' => {
                out.push(Tok::Var(Var::Lambda));
                i += 1;
            }
            'm' => {
                out.push(Tok::Var(Var::Mu));
                i += 1;
            }
            'P' => {
                assert_eq!(&s[i..i + 2], "P1");
                out.push(Tok::P);
                i += 2;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push(Tok::Op(c));
                i += 1;
            }
            _ => panic!("unexpected {c:?} in {s}"),
        }
    }
    out
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Tok {
        self.pos += 1;
        self.toks[self.pos - 1].clone()
    }

    fn expr(&mut self) -> Affine {
        let mut acc = self.term();
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let t = self.term();
            acc = if c == '+' { acc.add(&t) } else { acc.add(&t.neg()) };
        }
        acc
    }

    // Products and quotients associate left to right; juxtaposition multiplies.
    fn term(&mut self) -> Affine {
        let mut acc = self.unary();
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary());
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    acc = acc.div(&self.unary());
                }
                Some(Tok::Num(_) | Tok::Var(_) | Tok::P | Tok::Op('(')) => acc = acc.mul(&self.unary()),
                _ => return acc,
            }
        }
    }

    fn unary(&mut self) -> Affine {
        if self.peek() == Some(&Tok::Op('-')) {
            self.pos += 1;
            return self.unary().neg();
        }
        let base = self.atom();
        if self.peek() == Some(&Tok::Op('^')) {
            self.pos += 1;
            let Tok::Num(e) = self.next() else { panic!("exponent") };
            assert!(base.coefficient.is_zero());
            return Affine::scalar(base.constant.pow(e as u32));
        }
        base
    }

    fn atom(&mut self) -> Affine {
        match self.next() {
            Tok::Num(n) => Affine::scalar(RationalFunction::int(n)),
            Tok::Var(v) => Affine::scalar(RationalFunction::var(v)),
            Tok::P => Affine { constant: RationalFunction::zero(), coefficient: RationalFunction::one() },
            Tok::Op('(') => {
                let e = self.expr();
                assert_eq!(self.next(), Tok::Op(')'));
                e
            }
            t => panic!("unexpected token {t:?}"),
        }
    }
}

/// Parses a count formula in `k`, `l` (λ), `m` (μ) and `P1`.
pub fn parse_formula(s: &str) -> Affine {
    let mut p = Parser { toks: tokens(s), pos: 0 };
    let e = p.expr();
    assert_eq!(p.pos, p.toks.len(), "trailing input in {s}");
    e
}

pub struct FormulaCase {
    pub mode: Mode,
    pub order: usize,
    pub graph: SmallGraph,
    pub formula: String,
}

pub fn formula_cases() -> Vec<FormulaCase> {
    include_str!("../data/count_formulas.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let mut it = l.splitn(4, ' ');
            let mode = match it.next().unwrap() {
                "triangle-free" => Mode::TriangleFree,
                "general" => Mode::General,
                m => panic!("mode {m}"),
            };
            let order: usize = it.next().unwrap().parse().unwrap();
            let rows: Vec<&str> = it.next().unwrap().split('/').collect();
            let mut g = SmallGraph::empty(order);
            for (i, r) in rows.iter().enumerate() {
                for (j, c) in r.bytes().enumerate() {
                    if c == b'1' && i < j {
                        g.add_edge(i, j);
                    }
                }
            }
            FormulaCase { mode, order, graph: g, formula: it.next().unwrap().to_string() }
        })
        .collect()
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `|a - b| <= rel * |b|`, or `<= abs` when `b` is that small.
pub fn close(a: f64, b: f64, rel: f64, abs: f64) -> bool {
    let d = (a - b).abs();
    d <= abs || d <= rel * b.abs()
}
