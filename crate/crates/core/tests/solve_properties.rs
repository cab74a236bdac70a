use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use srg_core::algebra::{row_reduce, Symbol};
use srg_core::equations::{build_system, Mode, RowKind};
use srg_core::graph::{canonical_key, CanonicalKey, SmallGraph};
use srg_core::mooreaut::{counts_mod_p, petersen_free_congruences};
use srg_core::oracle::{census, clebsch, petersen, FixtureSrg};
use srg_core::solve::{solve_counts, SolutionTable};
use srg_core::spectra::SrgParams;

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn k14e() -> SmallGraph {
    let mut g = SmallGraph::complete_bipartite(1, 4);
    g.add_edge(1, 2);
    g
}

#[test]
fn total_row_is_implied_by_type_i_rows() {
    for (mode, max) in [(Mode::TriangleFree, 5), (Mode::General, 5)] {
        let table = solve_counts(max - 1, mode).unwrap();
        for o in 3..=max {
            let sys = build_system(o, mode, &table.order(o - 1).unwrap().as_map()).unwrap();
            let keep = |pred: &dyn Fn(RowKind) -> bool| {
                let rows: Vec<usize> = (0..sys.rows.len()).filter(|&i| pred(sys.rows[i].provenance.kind)).collect();
                let mut m = sys.matrix();
                m.rows = rows.iter().map(|&i| m.rows[i].clone()).collect();
                let rhs: Vec<_> = rows.iter().map(|&i| sys.rows[i].lhs.clone()).collect();
                row_reduce(&m, &rhs, None).unwrap().rank
            };
            let without = keep(&|k| k == RowKind::TypeI);
            let with = keep(&|k| matches!(k, RowKind::TypeI | RowKind::TotalCount));
            assert_eq!(without, with, "{mode:?} order {o}");
        }
    }
}

fn check_rows_on(host: &FixtureSrg, table: &SolutionTable, max: usize) {
    let p = host.params;
    let (k, l, m) = (q(p.k), q(p.lambda), q(p.mu));
    let censuses: Vec<_> = (1..=max).map(|o| census(host, o).unwrap()).collect();
    let free: BTreeMap<Symbol, BigRational> = table
        .free_parameters
        .iter()
        .filter(|f| f.symbol.graph.order() <= max)
        .map(|f| (f.symbol, q(censuses[f.symbol.graph.order() - 1].get(&f.symbol.graph) as i64)))
        .collect();
    for o in 3..=max {
        let sys = build_system(o, table.mode, &table.order(o - 1).unwrap().as_map()).unwrap();
        for row in &sys.rows {
            let lhs = row.lhs.eval_params(&k, &l, &m).unwrap().evaluate(&free).unwrap();
            let rhs: BigInt = row.coeffs.iter().map(|(c, a)| a * BigInt::from(censuses[o - 1].get(&sys.keys[*c]))).sum();
            assert_eq!(lhs, BigRational::from_integer(rhs), "{} order {o} {:?}", host.name, row.provenance);
        }
    }
}

#[test]
fn generated_rows_hold_on_real_graphs() {
    let table = solve_counts(6, Mode::TriangleFree).unwrap();
    check_rows_on(&petersen(), &table, 6);
    check_rows_on(&clebsch(), &table, 6);
    let moore = solve_counts(6, Mode::Moore { k: 3 }).unwrap();
    check_rows_on(&petersen(), &moore, 6);
}

#[test]
fn general_counts_specialize_to_triangle_free() {
    let general = solve_counts(4, Mode::General).unwrap();
    let tf = solve_counts(4, Mode::TriangleFree).unwrap();
    let paw = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
    for (n, kk, mu) in [(10, 3, 1), (16, 5, 2), (77, 16, 4), (50, 7, 1), (100, 22, 6)] {
        let p = SrgParams::new(n, kk, 0, mu).unwrap();
        let g = general.at_params(&p).unwrap();
        let t = tf.at_params(&p).unwrap();
        let sym = general.free_parameters[0].symbol;
        let pv = g.get(&canonical_key(&paw)).unwrap();
        let value = -pv.constant.clone() / pv.coefficient(&sym);
        let free = BTreeMap::from([(sym, value)]);
        for (key, v) in g.orders[3].keys.iter().zip(&g.orders[3].values) {
            let x = v.evaluate(&free).unwrap();
            match t.get(key) {
                Some(w) => assert_eq!(x, w.constant, "{p:?}"),
                None => assert!(x.is_zero(), "{p:?}: a graph with a triangle"),
            }
        }
    }
}

#[test]
fn general_free_parameters() {
    let table = solve_counts(5, Mode::General).unwrap();
    let by_order = |o: usize| -> Vec<CanonicalKey> {
        let mut v: Vec<_> = table.free_parameters.iter().filter(|f| f.order == o).map(|f| f.symbol.graph).collect();
        v.sort();
        v
    };
    assert_eq!(by_order(4), vec![canonical_key(&SmallGraph::complete_bipartite(1, 3))]);
    let mut want = vec![
        canonical_key(&SmallGraph::complete_bipartite(1, 4)),
        canonical_key(&k14e()),
        canonical_key(&SmallGraph::complete_bipartite(2, 3)),
    ];
    want.sort();
    assert_eq!(by_order(5), want);
}

#[test]
fn moore_edge_parity() {
    let table = solve_counts(7, Mode::MOORE57).unwrap();
    let concrete = table.at_params(&SrgParams::new(3250, 57, 0, 1).unwrap()).unwrap();
    let r = counts_mod_p(&concrete, 2, 2).unwrap();
    let edge = canonical_key(&SmallGraph::complete(2));
    let nonedge = canonical_key(&SmallGraph::empty(2));
    assert_eq!(concrete.get(&edge).unwrap().constant, q(92_625));
    assert_eq!(concrete.get(&nonedge).unwrap().constant, q(5_187_000));
    assert_eq!(r[&edge].constant, 1);
    assert_eq!(r[&nonedge].constant, 0);

    let report = petersen_free_congruences(&concrete, 7, 7).unwrap();
    for o in 1..=7 {
        for (key, res) in counts_mod_p(&concrete, o, 7).unwrap() {
            assert!(res.coefficients.is_empty());
            assert_eq!(report.residues[&key], res.constant);
        }
    }
}
