//! One line per acceptance criterion. Exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use common::{formula_cases, parse_formula};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use srg_core::equations::Mode;
use srg_core::geobound::{cauchy_schwarz_bound, gegenbauer, p4_fixture};
use srg_core::graph::{canonical_key, enumerate_graphs, orbits, GraphClass, SmallGraph};
use srg_core::mooreaut::{counts_mod_p, petersen_free_congruences, refined_order7_table};
use srg_core::oracle::{
    binomial, build_fixture, census, count_induced_petersen, cross_validate, hoffman_singleton, lemma_congruence_holds, pentagon,
    FIXTURE_NAMES,
};
use srg_core::solve::{bound_free_parameter, solve_counts, SolutionTable};
use srg_core::spectra::{feasibility_report, known_triangle_free, krein_k33_count, krein_params, SrgParams, Test, Verdict};

/// Relative tolerance for the tabulated geometric bounds.
const GEO_REL: f64 = 1e-4;
/// Absolute tolerance for tabulated zeros.
const GEO_ABS: f64 = 1e-2;
/// Relative tolerance for the Moore Petersen-bound table.
const MOORE_REL: f64 = 1e-6;

struct Report {
    failed: usize,
}

impl Report {
    fn record(&mut self, id: &str, ok: bool, detail: impl AsRef<str>) {
        println!("criterion {id}: {}  {}", if ok { "PASS" } else { "FAIL" }, detail.as_ref());
        if !ok {
            self.failed += 1;
        }
    }
}

fn p(n: i64, k: i64, l: i64, m: i64) -> SrgParams {
    SrgParams::new(n, k, l, m).unwrap()
}

fn close(got: f64, want: f64, rel: f64, abs: f64) -> bool {
    let err = (got - want).abs();
    if want == 0.0 {
        err <= abs
    } else {
        err <= rel * want.abs()
    }
}

struct Tables {
    tf8: SolutionTable,
    general5: SolutionTable,
    moore10: SolutionTable,
    moore_time: Duration,
}

fn enumeration(r: &mut Report) {
    let start = Instant::now();
    let want: [(GraphClass, &[usize]); 3] = [
        (GraphClass::General, &[1, 2, 4, 11, 34, 156, 1044, 12346]),
        (GraphClass::TriangleFree, &[1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172]),
        (GraphClass::TriangleAndQuadrangleFree, &[1, 2, 3, 6, 11, 23, 48, 114, 293, 869, 2963]),
    ];
    let mut bad = Vec::new();
    for (class, counts) in want {
        for (i, &c) in counts.iter().enumerate() {
            let got = enumerate_graphs(i + 1, class).unwrap().len();
            if got != c {
                bad.push(format!("{class:?} order {}: {got} != {c}", i + 1));
            }
        }
    }
    let t = start.elapsed();
    r.record("1", bad.is_empty() && t < Duration::from_secs(60), format!("{:.1}s {}", t.as_secs_f64(), bad.join("; ")));
}

fn shapes(r: &mut Report, t: &Tables) {
    let want: [(&SolutionTable, usize, usize, usize, usize); 8] = [
        (&t.tf8, 5, 30, 14, 14),
        (&t.tf8, 6, 86, 38, 37),
        (&t.tf8, 7, 301, 107, 106),
        (&t.tf8, 8, 1238, 410, 402),
        (&t.general5, 4, 17, 11, 10),
        (&t.general5, 5, 60, 34, 31),
        (&t.moore10, 9, 1234, 293, 293),
        (&t.moore10, 10, 4221, 869, 868),
    ];
    let mut bad = Vec::new();
    for (table, o, eq, var, rank) in want {
        let rep = table.report(o).unwrap();
        let eq_ok = [rep.equations, rep.equations_without_total].iter().any(|&e| e.abs_diff(eq) <= 1);
        if !eq_ok || rep.variables != var || rep.rank != rank {
            bad.push(format!("{:?} o={o}: ({}, {}, {}, {})", table.mode, rep.equations, rep.equations_without_total, rep.variables, rep.rank));
        }
    }
    let ok = bad.is_empty() && t.moore_time < Duration::from_secs(1800);
    r.record("2", ok, format!("moore solve {:.1}s {}", t.moore_time.as_secs_f64(), bad.join("; ")));
}

fn closed_forms(r: &mut Report, t: &Tables) {
    let general4 = &t.general5;
    let mut checked = 0;
    let mut bad = Vec::new();
    for case in formula_cases() {
        let table = if case.mode == Mode::General { general4 } else { &t.tf8 };
        let got = table.count_of(&case.graph).unwrap();
        let want = parse_formula(&case.formula);
        let p1 = table.free_parameters.iter().find(|f| f.order == case.order).map(|f| f.symbol);
        let coefficient = p1.map(|s| got.coefficient(&s)).unwrap_or_default();
        let ok = (got.constant_part() - &want.constant).is_zero() && (&coefficient - &want.coefficient).is_zero();
        if !ok {
            bad.push(format!("{:?} order {}", case.mode, case.order));
        }
        checked += 1;
    }
    r.record("3", bad.is_empty(), format!("{checked} formulas {}", bad.join("; ")));
}

fn free_structure(r: &mut Report, t: &Tables) {
    let k33 = canonical_key(&SmallGraph::complete_bipartite(3, 3));
    let k34 = canonical_key(&SmallGraph::complete_bipartite(3, 4));
    let pet = canonical_key(&SmallGraph::petersen());
    let sym = |table: &SolutionTable, o: usize| table.free_parameters.iter().filter(|f| f.order == o).map(|f| f.symbol).collect::<Vec<_>>();
    let o6 = t.tf8.order(6).unwrap();
    let s6 = sym(&t.tf8, 6);
    let ok6 = o6.constant_count() == 12 && s6.len() == 1 && s6[0].graph == k33;
    let o7 = t.tf8.order(7).unwrap();
    let s7 = sym(&t.tf8, 7);
    let p1 = s6[0];
    let on = |s| o7.counts.iter().filter(|c| !c.coefficient(&s).is_zero()).count();
    let ok7 = s7.len() == 1 && s7[0].graph == k34 && o7.constant_count() == 15 && on(p1) == 91 && on(s7[0]) == 76;
    let o10 = t.moore10.order(10).unwrap();
    let s10: Vec<_> = t.moore10.free_parameters.iter().map(|f| f.symbol).collect();
    let affine = o10.counts.iter().filter(|c| c.terms().len() == 1 && !c.coefficient(&s10[0]).is_zero()).count();
    let ok10 = s10.len() == 1 && s10[0].graph == pet && o10.constant_count() == 595 && affine == 274;
    r.record(
        "4",
        ok6 && ok7 && ok10,
        format!(
            "tf6 {} const; tf7 {} const, {} on P1, {} on P2; moore10 {} const, {} affine",
            o6.constant_count(),
            o7.constant_count(),
            on(p1),
            on(s7[0]),
            o10.constant_count(),
            affine
        ),
    );
}

fn moore_bound(r: &mut Report, t: &Tables) {
    let c = t.moore10.at_params(&p(3250, 57, 0, 1)).unwrap();
    let s = t.moore10.free_parameters[0].symbol;
    let b = bound_free_parameter(&c, s, &BTreeMap::new());
    let ok = b.lower == BigInt::from(0) && b.upper == Some(BigInt::from(266_266_000));
    r.record("5", ok, format!("[{}, {}]", b.lower, b.upper.map_or("inf".into(), |u| u.to_string())));
}

fn evaluations(r: &mut Report, t: &Tables) {
    let c5 = canonical_key(&SmallGraph::cycle(5));
    let c4 = canonical_key(&SmallGraph::cycle(4));
    let mut got = Vec::new();
    let mut ok = true;
    for (params, want) in [(p(10, 3, 0, 1), 12), (p(16, 5, 0, 2), 192), (p(50, 7, 0, 1), 1260)] {
        let v = t.tf8.at_params(&params).unwrap().get(&c5).unwrap().clone();
        ok &= v.terms.is_empty() && v.constant == BigRational::from_integer(want.into());
        got.push(v.constant.to_string());
    }
    for params in [p(10, 3, 0, 1), p(50, 7, 0, 1), p(3250, 57, 0, 1)] {
        let v = t.tf8.at_params(&params).unwrap().get(&c4).unwrap().clone();
        ok &= v.terms.is_empty() && v.constant == BigRational::from_integer(0.into());
    }
    r.record("6", ok, format!("C5 counts {}", got.join(", ")));
}

fn oracle(r: &mut Report, t: &Tables) {
    let mut bad = Vec::new();
    for (name, max) in [("pentagon", 6), ("petersen", 6), ("clebsch", 6), ("hoffman_singleton", 5)] {
        let host = build_fixture(name).unwrap();
        let v = cross_validate(&host, max, &t.tf8).unwrap();
        if v.mismatch_count() != 0 {
            bad.push(format!("{name}: {} mismatches", v.mismatch_count()));
        }
    }
    let pet = count_induced_petersen(&hoffman_singleton());
    r.record("7", bad.is_empty() && pet == 525, format!("petersen in HS {pet} {}", bad.join("; ")));
}

fn k33_bound(tf: &SolutionTable, params: SrgParams, x: &SmallGraph, t: u32) -> (f64, Duration) {
    let start = Instant::now();
    let mut c = tf.at_params(&params).unwrap();
    c.orders.truncate(6);
    let s = tf.free_parameters.iter().find(|f| f.order == 6).unwrap().symbol;
    let b = cauchy_schwarz_bound(&c, x, &SmallGraph::path(3), t, s).unwrap();
    (b.value_f64(), start.elapsed())
}

fn k33_table(r: &mut Report, t: &Tables) {
    let k1 = SmallGraph::empty(1);
    let k2 = SmallGraph::complete(2);
    let rows: [(SrgParams, &SmallGraph, u32, f64); 7] = [
        (p(77, 16, 0, 4), &k1, 5, 534.63),
        (p(77, 16, 0, 4), &k2, 5, 552.27),
        (p(77, 16, 0, 4), &k2, 6, -378.11),
        (p(100, 22, 0, 6), &k1, 5, 0.0),
        (p(100, 22, 0, 6), &k2, 5, 0.0),
        (p(324, 57, 0, 12), &k1, 5, 1_580_040.0),
        (p(1600, 205, 0, 30), &k1, 5, 2_263_856_000.0),
    ];
    let mut ok = true;
    let mut out = Vec::new();
    for (params, x, tt, want) in rows {
        let (got, time) = k33_bound(&t.tf8, params, x, tt);
        ok &= close(got, want, GEO_REL, GEO_ABS) && time < Duration::from_secs(10);
        out.push(format!("{got:.2}"));
    }
    r.record("8", ok, out.join(" "));
}

fn krein_identity(r: &mut Report, t: &Tables) {
    let mut ok = true;
    let mut out = Vec::new();
    for kr in 1..=3 {
        let (got, _) = k33_bound(&t.tf8, krein_params(kr), &SmallGraph::empty(1), 5);
        let want = krein_k33_count(kr).to_f64().unwrap();
        ok &= close(got, want, GEO_REL, GEO_ABS);
        out.push(format!("Kr({kr}) {got:.2} vs {want}"));
    }
    r.record("9", ok, out.join("; "));
}

fn moore_geometry(r: &mut Report, t: &Tables) {
    let c = t.moore10.at_params(&p(3250, 57, 0, 1)).unwrap();
    let s = t.moore10.free_parameters[0].symbol;
    let c5 = SmallGraph::cycle(5);
    for (id, x, tt, want) in [("10a", SmallGraph::empty(1), 5, 22_694_158_422_336.21), ("10b", p4_fixture(), 7, 3_331_657_191_483.46)] {
        let got = cauchy_schwarz_bound(&c, &x, &c5, tt, s).unwrap().value_f64();
        let rel = (got - want).abs() / want.abs();
        r.record(id, rel <= MOORE_REL, format!("X order {} t={tt}: {got:.2} vs {want:.2} (rel {rel:.1e})", x.order()));
    }
}

fn mod_p(r: &mut Report, t: &Tables) {
    let c = t.moore10.at_params(&p(3250, 57, 0, 1)).unwrap();
    let e7 = canonical_key(&SmallGraph::empty(7));
    let res7 = counts_mod_p(&c, 7, 7).unwrap();
    let ok7 = res7.iter().all(|(k, v)| v.constant == if *k == e7 { 2 } else { 0 });
    let refined: Vec<(u32, Vec<u32>)> = refined_order7_table().into_iter().map(|x| (x.a0, x.refined_a1)).collect();
    let want: Vec<(u32, Vec<u32>)> =
        vec![(2, vec![49]), (9, vec![98]), (16, vec![147]), (23, vec![196]), (30, vec![245]), (37, vec![294]), (44, vec![]), (51, vec![])];
    let mut nonzero = Vec::new();
    let o10: Vec<_> = c.orders[9].keys.clone();
    for prime in [7u64, 11, 13, 19] {
        let rep = petersen_free_congruences(&c, 10, prime).unwrap();
        let n = o10.iter().filter(|k| rep.residues[k] != 0).count();
        nonzero.push(format!("{prime}:{n}"));
    }
    let ok10 = nonzero.iter().all(|s| s.ends_with(":0"));
    r.record("11", ok7 && refined == want && ok10, format!("order 7 ok={ok7}; a1 ok={}; order 10 nonzero {}", refined == want, nonzero.join(" ")));
}

fn feasibility(r: &mut Report) {
    let fails = |params: SrgParams, test: Test| feasibility_report(&params).verdict(test) == Verdict::Fail;
    let mut ok = fails(p(28, 9, 0, 4), Test::Krein2)
        && fails(p(144, 78, 52, 30), Test::Krein1)
        && fails(p(64, 21, 0, 10), Test::AbsoluteBound)
        && fails(p(50, 21, 4, 12), Test::AbsoluteBound);
    ok &= known_triangle_free().iter().all(|q| feasibility_report(q).feasible());
    r.record("12", ok, "");
}

fn properties(r: &mut Report) {
    let mut bad = Vec::new();
    // Relabeling invariance, exhaustive to order 5.
    for o in 1..=5 {
        let perms = permutations(o);
        for g in enumerate_graphs(o, GraphClass::General).unwrap() {
            let key = canonical_key(&g);
            if perms.iter().any(|pm| canonical_key(&g.permuted(pm)) != key) {
                bad.push(format!("relabel order {o}"));
            }
            let d = orbits(&g);
            let sum: usize = d.vertex_orbits.iter().map(|x| x.size()).sum();
            let pairs: usize = d.edge_orbits.iter().chain(&d.nonedge_orbits).map(|x| x.size()).sum();
            if sum != o || pairs != o * (o - 1) / 2 {
                bad.push(format!("orbit sums order {o}"));
            }
        }
    }
    for name in FIXTURE_NAMES {
        let f = build_fixture(name).unwrap();
        if !f.adjacency_identity_holds() {
            bad.push(format!("identity {name}"));
        }
        for o in 1..=4 {
            if census(&f, o).unwrap().total() != binomial(f.order() as u128, o as u128) {
                bad.push(format!("census {name} {o}"));
            }
        }
    }
    for i in 0..200 {
        let x = -1.0 + i as f64 / 100.0;
        for t in 0..=8 {
            let sign = if t % 2 == 0 { 1.0 } else { -1.0 };
            let (a, b) = (gegenbauer(t, 4.5, -x), sign * gegenbauer(t, 4.5, x));
            if (a - b).abs() > 1e-9 * b.abs().max(1.0) {
                bad.push(format!("gegenbauer t={t}"));
            }
        }
    }
    let rot: Vec<usize> = (0..5).map(|v| (v + 1) % 5).collect();
    for o in 1..=5 {
        if !lemma_congruence_holds(&pentagon(), &rot, 5, o).unwrap() {
            bad.push(format!("lemma order {o}"));
        }
    }
    bad.dedup();
    r.record("13", bad.is_empty(), bad.join("; "));
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, (n - 1) as u8);
            out.push(q);
        }
    }
    out
}

fn main() {
    let mut r = Report { failed: 0 };
    enumeration(&mut r);
    let start = Instant::now();
    let moore10 = solve_counts(10, Mode::MOORE57).unwrap();
    let moore_time = start.elapsed();
    let tables = Tables { tf8: solve_counts(8, Mode::TriangleFree).unwrap(), general5: solve_counts(5, Mode::General).unwrap(), moore10, moore_time };
    shapes(&mut r, &tables);
    closed_forms(&mut r, &tables);
    free_structure(&mut r, &tables);
    moore_bound(&mut r, &tables);
    evaluations(&mut r, &tables);
    oracle(&mut r, &tables);
    k33_table(&mut r, &tables);
    krein_identity(&mut r, &tables);
    moore_geometry(&mut r, &tables);
    mod_p(&mut r, &tables);
    feasibility(&mut r);
    properties(&mut r);
    println!("{} criteria failed", r.failed);
    if r.failed > 0 {
        std::process::exit(1);
    }
}
