use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use srg_core::algebra::AffineValue;
use srg_core::geobound::{gegenbauer, gegenbauer_scaled, pairing_sum, placements, rep_inner_product, ProjectionGeometry};
use srg_core::graph::SmallGraph;
use srg_core::oracle::census;
use srg_core::oracle::{clebsch, petersen, FixtureSrg};
use srg_core::solve::{ConcreteOrder, ConcreteTable};
use srg_core::spectra::spectrum;

proptest! {
    #[test]
    fn gegenbauer_parity(t in 0u32..=8, alpha in 0.5f64..20.0, x in -1.0f64..1.0) {
        let sign = if t % 2 == 0 { 1.0 } else { -1.0 };
        let a = gegenbauer(t, alpha, -x);
        let b = sign * gegenbauer(t, alpha, x);
        prop_assert!((a - b).abs() <= 1e-9 * b.abs().max(1.0));
    }

    #[test]
    fn exact_gegenbauer_matches_float(t in 0u32..=8, g in 3i64..40, c in -30i64..30, m in 1i64..50) {
        let alpha = BigRational::new((g - 2).into(), 2.into());
        let cq = BigRational::from_integer(c.into());
        let mq = BigRational::from_integer((m * m + 1).into());
        let (u, v) = gegenbauer_scaled(t, &alpha, &cq, &mq);
        let root = ((m * m + 1) as f64).sqrt();
        let exact = u.to_f64().unwrap() + v.to_f64().unwrap() / root;
        let float = gegenbauer(t, (g - 2) as f64 / 2.0, c as f64 / root);
        prop_assert!((exact - float).abs() <= 1e-7 * float.abs().max(1.0));
    }
}

#[test]
fn inner_product_is_symmetric() {
    let geom = ProjectionGeometry::new(&clebsch().params).unwrap();
    for w in srg_core::graph::enumerate_graphs(5, srg_core::graph::GraphClass::TriangleFree).unwrap() {
        let (a, b) = (SmallGraph::path(3), SmallGraph::complete(2));
        let (na, nb) = (geom.norm_squared(&a), geom.norm_squared(&b));
        for c in placements(&w, &a, &b) {
            let swapped = srg_core::geobound::PairConfiguration::new(&w, c.second, c.first);
            let x = rep_inner_product(&c, &geom, &na, &nb);
            let y = rep_inner_product(&swapped, &geom, &nb, &na);
            assert!((x - y).abs() < 1e-12);
        }
    }
}

fn census_table(host: &FixtureSrg, max: usize) -> ConcreteTable {
    let orders = (1..=max)
        .map(|o| {
            let c = census(host, o).unwrap();
            ConcreteOrder {
                order: o,
                keys: c.counts.keys().copied().collect(),
                values: c.counts.values().map(|n| AffineValue::constant(BigRational::from_integer((*n).into()))).collect(),
            }
        })
        .collect();
    ConcreteTable { params: host.params, orders }
}

/// Gram matrix of the unit projections onto the s-eigenspace, from
/// `E = (A - rI)(A - kI)` rescaled to unit diagonal.
fn gram(host: &FixtureSrg) -> Vec<Vec<f64>> {
    let n = host.order();
    let sp = spectrum(&host.params);
    let (k, r) = (host.params.k as f64, sp.r.to_f64());
    let a = |u: usize, v: usize| host.has_edge(u, v) as u8 as f64;
    let mut e = vec![vec![0.0; n]; n];
    for u in 0..n {
        for v in 0..n {
            let a2 = (0..n).map(|w| a(u, w) * a(w, v)).sum::<f64>();
            let id = (u == v) as u8 as f64;
            e[u][v] = a2 - (r + k) * a(u, v) + r * k * id;
        }
    }
    let d = e[0][0];
    e.iter().map(|row| row.iter().map(|x| x / d).collect()).collect()
}

fn copies(host: &FixtureSrg, pattern: &SmallGraph) -> Vec<Vec<usize>> {
    let n = host.order();
    let o = pattern.order();
    let key = srg_core::graph::canonical_key(pattern);
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(host: &FixtureSrg, from: usize, o: usize, pick: &mut Vec<usize>, key: &srg_core::graph::CanonicalKey, out: &mut Vec<Vec<usize>>, n: usize) {
        if pick.len() == o {
            let mut g = SmallGraph::empty(o);
            for i in 0..o {
                for j in i + 1..o {
                    if host.has_edge(pick[i], pick[j]) {
                        g.add_edge(i, j);
                    }
                }
            }
            if srg_core::graph::canonical_key(&g) == *key {
                out.push(pick.clone());
            }
            return;
        }
        for v in from..n {
            pick.push(v);
            rec(host, v + 1, o, pick, key, out, n);
            pick.pop();
        }
    }
    rec(host, 0, o, &mut pick, &key, &mut out, n);
    out
}

fn brute_force_sum(host: &FixtureSrg, x: &SmallGraph, y: &SmallGraph, t: u32) -> f64 {
    let gm = gram(host);
    let g = spectrum(&host.params).g.to_f64();
    let alpha = (g - 2.0) / 2.0;
    let dot = |a: &[usize], b: &[usize]| a.iter().map(|&u| b.iter().map(|&v| gm[u][v]).sum::<f64>()).sum::<f64>();
    let (cx, cy) = (copies(host, x), copies(host, y));
    let mut total = 0.0;
    for a in &cx {
        for b in &cy {
            let cos = dot(a, b) / (dot(a, a) * dot(b, b)).sqrt();
            total += gegenbauer(t, alpha, cos);
        }
    }
    total
}

#[test]
fn pairing_sums_match_brute_force() {
    let patterns = [SmallGraph::empty(1), SmallGraph::complete(2), SmallGraph::path(3)];
    for host in [petersen(), clebsch()] {
        let table = census_table(&host, 6);
        let geom = ProjectionGeometry::new(&host.params).unwrap();
        for x in &patterns {
            for y in &patterns {
                for t in 1..=5 {
                    let s = pairing_sum(x, y, &table, &geom, t, None).unwrap();
                    let want = brute_force_sum(&host, x, y, t);
                    let got = s.constant_f64();
                    assert!((got - want).abs() <= 1e-8 * want.abs().max(1.0), "{} t={t}: {got} vs {want}", host.name);
                }
            }
        }
    }
}

#[test]
fn cauchy_schwarz_holds_on_real_graphs() {
    let patterns = [SmallGraph::empty(1), SmallGraph::complete(2), SmallGraph::path(3)];
    let host = clebsch();
    let table = census_table(&host, 6);
    let geom = ProjectionGeometry::new(&host.params).unwrap();
    for x in &patterns {
        for y in &patterns {
            for t in 1..=6 {
                let s = |a: &SmallGraph, b: &SmallGraph| pairing_sum(a, b, &table, &geom, t, None).unwrap().constant_f64();
                let (xy, xx, yy) = (s(x, y), s(x, x), s(y, y));
                assert!(xx >= -1e-6 && yy >= -1e-6);
                assert!(xy * xy <= xx * yy * (1.0 + 1e-9) + 1e-6, "t={t}");
                if x == y {
                    assert!((xy.abs() - xx).abs() <= 1e-9 * xx.max(1.0));
                }
            }
        }
    }
}
