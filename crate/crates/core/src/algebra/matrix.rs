//! Fraction-free sparse elimination of an integer matrix, with the row
//! operations replayed on a symbolic right-hand side.

use super::expr::CountExpression;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Sparse integer row: `(column, coefficient)` pairs with nonzero coefficients.
pub type SparseRow = Vec<(usize, BigInt)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub cols: usize,
    pub rows: Vec<SparseRow>,
}

impl SparseMatrix {
    pub fn new(cols: usize) -> Self {
        SparseMatrix { cols, rows: Vec::new() }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        SparseMatrix {
            cols,
            rows: rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, &x)| (j, BigInt::from(x))).collect())
                .collect(),
        }
    }

    /// `M x` for a vector of expressions.
    pub fn apply(&self, x: &[CountExpression]) -> Vec<CountExpression> {
        self.rows
            .iter()
            .map(|row| {
                let mut acc = CountExpression::zero();
                for (j, c) in row {
                    acc.add_scaled_rational(&x[*j], &BigRational::from_integer(c.clone()));
                }
                acc
            })
            .collect()
    }
}

/// A row `0 = residual` left after elimination with a nonzero residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inconsistency {
    pub row: usize,
    pub residual: CountExpression,
}

impl fmt::Display for Inconsistency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "row {} reduces to 0 = {}", self.row, self.residual)
    }
}

#[derive(Clone, Debug)]
pub struct ReducedSystem {
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
    pub free_columns: Vec<usize>,
    /// Solution with every free column set to zero.
    pub particular: Vec<CountExpression>,
    /// One integer vector per free column, in `free_columns` order.
    pub nullspace: Vec<Vec<BigInt>>,
    echelon: Vec<EchelonRow>,
    cols: usize,
}

#[derive(Clone, Debug)]
struct EchelonRow {
    pivot: usize,
    row: SparseRow,
    rhs: CountExpression,
}

impl ReducedSystem {
    /// Back-substitution with the given values on the free columns.
    pub fn solve_with(&self, free_values: &[CountExpression]) -> Vec<CountExpression> {
        assert_eq!(free_values.len(), self.free_columns.len());
        let mut x = alloc::vec![CountExpression::zero(); self.cols];
        for (c, v) in self.free_columns.iter().zip(free_values) {
            x[*c] = v.clone();
        }
        for e in self.echelon.iter().rev() {
            let mut acc = e.rhs.clone();
            let mut pivot_coeff = BigInt::zero();
            for (j, a) in &e.row {
                if *j == e.pivot {
                    pivot_coeff = a.clone();
                } else {
                    acc.add_scaled_rational(&x[*j], &BigRational::from_integer(-a));
                }
            }
            x[e.pivot] = acc.scale_rational(&BigRational::new(BigInt::one(), pivot_coeff));
        }
        x
    }

    fn solve_rational(&self, free_values: &[BigRational]) -> Vec<BigRational> {
        let mut x = alloc::vec![BigRational::zero(); self.cols];
        for (c, v) in self.free_columns.iter().zip(free_values) {
            x[*c] = v.clone();
        }
        for e in self.echelon.iter().rev() {
            let mut acc = BigRational::zero();
            let mut pivot_coeff = BigInt::zero();
            for (j, a) in &e.row {
                if *j == e.pivot {
                    pivot_coeff = a.clone();
                } else {
                    acc -= &x[*j] * BigRational::from_integer(a.clone());
                }
            }
            x[e.pivot] = acc / BigRational::from_integer(pivot_coeff);
        }
        x
    }
}

fn content(row: &SparseRow) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in row {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `a*x - b*y` over sparse rows ordered by column position.
fn combine(x: &SparseRow, a: &BigInt, y: &SparseRow, b: &BigInt, pos: &[usize]) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let pi = x.get(i).map_or(usize::MAX, |e| pos[e.0]);
        let pj = y.get(j).map_or(usize::MAX, |e| pos[e.0]);
        if pi < pj {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if pj < pi {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Eliminates `m x = b`, visiting columns in `column_order` (all columns,
/// each once). A column becomes free exactly when it depends on the columns
/// visited before it. The result is re-verified against `m` and `b`.
pub fn row_reduce(
    m: &SparseMatrix,
    b: &[CountExpression],
    column_order: Option<&[usize]>,
) -> Result<ReducedSystem, Inconsistency> {
    assert_eq!(m.rows.len(), b.len(), "matrix and right-hand side disagree");
    let cols = m.cols;
    let order: Vec<usize> = match column_order {
        Some(o) => o.to_vec(),
        None => (0..cols).collect(),
    };
    assert_eq!(order.len(), cols, "column order must list every column");
    let mut pos = alloc::vec![usize::MAX; cols];
    for (p, &c) in order.iter().enumerate() {
        assert!(pos[c] == usize::MAX, "column {c} listed twice");
        pos[c] = p;
    }

    let mut rows: Vec<SparseRow> = m
        .rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.sort_by_key(|e| pos[e.0]);
            r
        })
        .collect();
    let mut rhs: Vec<CountExpression> = b.to_vec();
    let mut buckets: Vec<Vec<usize>> = alloc::vec![Vec::new(); cols];
    for (i, r) in rows.iter_mut().enumerate() {
        let g = content(r);
        if !g.is_zero() && !g.is_one() {
            for e in r.iter_mut() {
                e.1 /= &g;
            }
            rhs[i] = rhs[i].scale_rational(&BigRational::new(BigInt::one(), g));
        }
        if let Some(first) = r.first() {
            buckets[pos[first.0]].push(i);
        }
    }

    let mut echelon = Vec::new();
    let mut free_columns = Vec::new();
    for (p, &col) in order.iter().enumerate() {
        let bucket = core::mem::take(&mut buckets[p]);
        let Some(&pivot) = bucket.iter().min_by_key(|&&i| (rows[i].len(), i)) else {
            free_columns.push(col);
            continue;
        };
        let prow = core::mem::take(&mut rows[pivot]);
        let prhs = core::mem::take(&mut rhs[pivot]);
        let a_p = prow[0].1.clone();
        for &i in &bucket {
            if i == pivot {
                continue;
            }
            let a_i = rows[i][0].1.clone();
            let g = a_p.gcd(&a_i);
            let (sx, sy) = (&a_p / &g, &a_i / &g);
            let mut new = combine(&rows[i], &sx, &prow, &sy, &pos);
            let mut new_rhs = rhs[i].scale_rational(&BigRational::from_integer(sx.clone()));
            new_rhs.add_scaled_rational(&prhs, &BigRational::from_integer(-sy));
            let c = content(&new);
            if !c.is_zero() && !c.is_one() {
                for e in new.iter_mut() {
                    e.1 /= &c;
                }
                new_rhs = new_rhs.scale_rational(&BigRational::new(BigInt::one(), c));
            }
            if let Some(first) = new.first() {
                buckets[pos[first.0]].push(i);
            }
            rows[i] = new;
            rhs[i] = new_rhs;
        }
        echelon.push(EchelonRow { pivot: col, row: prow, rhs: prhs });
    }

    // Pivot rows were moved out, so every row left is empty; its
    // right-hand side must vanish.
    for (i, r) in rhs.iter().enumerate() {
        debug_assert!(rows[i].is_empty());
        if !r.is_zero() {
            return Err(Inconsistency { row: i, residual: r.clone() });
        }
    }

    let pivot_columns: Vec<usize> = echelon.iter().map(|e| e.pivot).collect();
    let mut reduced = ReducedSystem {
        rank: echelon.len(),
        pivot_columns,
        free_columns,
        particular: Vec::new(),
        nullspace: Vec::new(),
        echelon,
        cols,
    };
    let zeros = alloc::vec![CountExpression::zero(); reduced.free_columns.len()];
    reduced.particular = reduced.solve_with(&zeros);
    for f in 0..reduced.free_columns.len() {
        let mut unit = alloc::vec![BigRational::zero(); reduced.free_columns.len()];
        unit[f] = BigRational::one();
        let v = reduced.solve_rational_homogeneous(&unit);
        reduced.nullspace.push(v);
    }

    let mx = m.apply(&reduced.particular);
    for (i, (lhs, r)) in mx.iter().zip(b).enumerate() {
        let diff = lhs.sub(r);
        if !diff.is_zero() {
            return Err(Inconsistency { row: i, residual: diff });
        }
    }
    for v in &reduced.nullspace {
        for (i, row) in m.rows.iter().enumerate() {
            let s: BigInt = row.iter().map(|(j, c)| c * &v[*j]).sum();
            assert!(s.is_zero(), "nullspace vector fails row {i}");
        }
    }
    Ok(reduced)
}

impl ReducedSystem {
    fn solve_rational_homogeneous(&self, free_values: &[BigRational]) -> Vec<BigInt> {
        let x = self.solve_rational(free_values);
        let mut l = BigInt::one();
        for v in &x {
            l = l.lcm(v.denom());
        }
        let ints: Vec<BigInt> = x.iter().map(|v| (v * BigRational::from_integer(l.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        ints.into_iter().map(|v| v / &g).collect()
    }
}
