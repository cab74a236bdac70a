use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use srg_core::algebra::{row_reduce, CountExpression, Poly, RationalFunction, SparseMatrix, Var};

const P: i64 = 1_000_000_007;

fn pow_mod(mut b: i64, mut e: i64) -> i64 {
    let mut r = 1;
    b = b.rem_euclid(P);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Gaussian elimination over GF(P). Entries and sizes are small enough that
/// every nonzero minor is below P, so this equals the rank over Q.
fn rank_mod_p(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(P)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, p);
        let inv = pow_mod(m[rank][c], P - 2);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c] * inv % P;
                for j in 0..cols {
                    m[r][j] = (m[r][j] - f * m[rank][j]).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn arb_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

fn int(x: &BigInt) -> CountExpression {
    CountExpression::constant(RationalFunction::constant(BigRational::from_integer(x.clone())))
}

proptest! {
    #[test]
    fn rank_agrees_with_modular_rank(rows in arb_matrix(), x in prop::collection::vec(-5i64..=5, 6)) {
        let m = SparseMatrix::from_dense(&rows);
        let x: Vec<CountExpression> = x[..m.cols].iter().map(|v| CountExpression::int(*v)).collect();
        let b = m.apply(&x);
        let reduced = row_reduce(&m, &b, None).unwrap();
        prop_assert_eq!(reduced.rank, rank_mod_p(&rows));
        prop_assert_eq!(reduced.rank + reduced.free_columns.len(), m.cols);
    }

    #[test]
    fn nullspace_shifts_keep_solutions(rows in arb_matrix(), x in prop::collection::vec(-5i64..=5, 6)) {
        let m = SparseMatrix::from_dense(&rows);
        let x: Vec<CountExpression> = x[..m.cols].iter().map(|v| CountExpression::int(*v)).collect();
        let b = m.apply(&x);
        let reduced = row_reduce(&m, &b, None).unwrap();
        prop_assert_eq!(&m.apply(&reduced.particular), &b);
        for v in &reduced.nullspace {
            for t in [-1i64, 0, 1] {
                let shifted: Vec<CountExpression> = reduced.particular.iter().zip(v).map(|(p, n)| p.add(&int(&(n * t)))).collect();
                prop_assert_eq!(&m.apply(&shifted), &b);
            }
        }
    }

    #[test]
    fn inconsistent_systems_are_rejected(rows in arb_matrix(), x in prop::collection::vec(-5i64..=5, 6)) {
        let m = SparseMatrix::from_dense(&rows);
        let x: Vec<CountExpression> = x[..m.cols].iter().map(|v| CountExpression::int(*v)).collect();
        let mut b = m.apply(&x);
        // Append a copy of row 0 with a different right-hand side.
        let mut rows2 = rows.clone();
        rows2.push(rows[0].clone());
        b.push(b[0].add(&CountExpression::int(1)));
        let m2 = SparseMatrix::from_dense(&rows2);
        prop_assert!(row_reduce(&m2, &b, None).is_err());
    }
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-3i64..=3, 0u32..=2, 0u32..=2, 0u32..=2), 0..5).prop_map(|terms| {
        let mut p = Poly::zero();
        for (c, a, b, d) in terms {
            let t = &(&Poly::var(Var::K).pow(a) * &Poly::var(Var::Lambda).pow(b)) * &Poly::var(Var::Mu).pow(d);
            p = &p + &t.scale(&BigRational::from_integer(c.into()));
        }
        p
    })
}

fn arb_point() -> impl Strategy<Value = (BigRational, BigRational, BigRational)> {
    (-20i64..=20, -20i64..=20, 1i64..=20, 1i64..=7).prop_map(|(a, b, c, d)| {
        (BigRational::new(a.into(), d.into()), BigRational::new(b.into(), 3.into()), BigRational::new(c.into(), 2.into()))
    })
}

proptest! {
    #[test]
    fn evaluation_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), (k, l, m) in arb_point()) {
        let ra = RationalFunction::from_poly(a.clone());
        let rb = RationalFunction::from_poly(b.clone());
        let ea = a.eval(&k, &l, &m);
        let eb = b.eval(&k, &l, &m);
        prop_assert_eq!((&ra + &rb).eval(&k, &l, &m).unwrap(), &ea + &eb);
        prop_assert_eq!((&ra * &rb).eval(&k, &l, &m).unwrap(), &ea * &eb);
        if let Ok(q) = ra.checked_div(&rb) {
            if eb != BigRational::from_integer(0.into()) {
                if let Some(v) = q.eval(&k, &l, &m) {
                    prop_assert_eq!(v, &ea / &eb);
                }
            }
        }
    }

    #[test]
    fn quotients_are_normalized(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let x = RationalFunction::new(&a * &c, &b * &c).unwrap();
        let y = RationalFunction::new(a, b).unwrap();
        prop_assert_eq!(x, y);
    }
}
