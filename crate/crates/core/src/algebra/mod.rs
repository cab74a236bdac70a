//! Exact arithmetic: polynomials and rational functions in (k, λ, μ),
//! affine count expressions, and integer elimination.

pub mod expr;
pub mod matrix;
pub mod poly;
pub mod ratfunc;

pub use expr::{AffineValue, CountExpression, Symbol};
pub use matrix::{row_reduce, Inconsistency, ReducedSystem, SparseMatrix, SparseRow};
pub use poly::{Poly, Var};
pub use ratfunc::{binomial, DivisionByZero, RationalFunction};
