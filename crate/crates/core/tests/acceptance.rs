//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Every comparison is exact; timing limits are fixed
//! below.

mod common;

use std::time::{Duration, Instant};

use num_rational::BigRational;

use bqp::analysis::{detect_additive, min_negative_eliminator, negativity_matching, rank_factorize};
use bqp::dispatch::{dispatch_solve, Algorithm, SolveOptions};
use bqp::fixtures;
use bqp::generate::{generate_instance, generate_rank_one_form, generator, Kind};
use bqp::graph::BipartiteWeightedGraph;
use bqp::instance::normalize_orientation;
use bqp::matrix::ints;
use bqp::rational::{int, ratio};
use bqp::solver::cut::{build_cut_network, labeling, solve_nonnegative, solve_with_eliminator};
use bqp::solver::enumerate::solve_enumeration;
use bqp::solver::fixed_rank::{candidate_bound, solve_fixed_rank_with, FixedRankOptions};
use bqp::solver::flow::max_flow;
use bqp::solver::rank_one::{pkp_breakpoints, solve_rank_one, solve_rank_one_zero_linear, ulp_breakpoints, RankOneForm};
use bqp::solver::solve_additive;
use bqp::transform::{
    bmaxcut_to_bqp11h, bqp01_to_cut, bqp01_to_qp01, bqp11h_to_bmaxcut, cut_to_bqp01, mwbp_to_bqp01,
    qp01_to_bqp01, rank1_binary_approx_to_bqp01, squared_approximation_error, to_homogeneous, Qp01,
};
use bqp::{CutInstance, Instance, Matrix, Rational, Solution};
use common::{all_points, all_spin_points, big, big_int, oracle_min_cover, Dense};
use rand::Rng;

const SAMPLE_LIMIT: Duration = Duration::from_secs(1);
const SUITE_LIMIT: Duration = Duration::from_secs(300);
const RANK1_LIMIT: Duration = Duration::from_secs(10);
const RANK1_SIZE: usize = 100_000;
const DOUBLING_LIMIT: f64 = 2.5;
const RANK1_RUNS: usize = 7;
const ADDITIVE_LIMIT: Duration = Duration::from_secs(30);
const ADDITIVE_SIZE: usize = 2000;
const MINCUT_LIMIT: Duration = Duration::from_secs(10);
const MINCUT_SIZE: usize = 200;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Value from a solver must be the oracle optimum and match its own point.
fn agrees(label: &str, dense: &Dense, best: &BigRational, s: &Solution) -> Result<(), String> {
    ensure(&big(&s.value) == best, || format!("{label}: value {} but optimum {best}", s.value))?;
    ensure(dense.objective(&s.x, &s.y) == *best, || format!("{label}: reported point does not attain {best}"))
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let form = fixtures::sample_form();
    let pkp = pkp_breakpoints(&form);
    let ulp = ulp_breakpoints(&form);
    ensure(pkp.breakpoints() == ints(&[-5, 1, 3, 6, 8]), || format!("lambda {:?}", pkp.breakpoints()))?;
    ensure(pkp.values() == ints(&[11, 26, 30, 24, 19]), || format!("h1 {:?}", pkp.values()))?;
    let mus = vec![int(-2), int(0), ratio(3, 4), int(2), int(4)];
    ensure(ulp.breakpoints() == mus, || format!("mu {:?}", ulp.breakpoints()))?;
    let h2 = vec![int(27), int(17), ratio(59, 4), int(16), int(20)];
    ensure(ulp.values() == h2, || format!("h2 {:?}", ulp.values()))?;
    ensure(ulp.origin_value() == int(45), || format!("h2(-5) = {}", ulp.origin_value()))?;
    let t = start.elapsed();
    ensure(t < SAMPLE_LIMIT, || format!("took {t:?}"))?;
    Ok(format!("h1 and h2 tracks exact, {:.3} ms", t.as_secs_f64() * 1e3))
}

fn criterion_2() -> Check {
    let inst = fixtures::sample();
    let dense = Dense::new(&inst);
    let best = dense.optimum();
    ensure(best == big_int(56), || format!("brute force gives {best}"))?;
    let opts = SolveOptions::default();
    for a in [Algorithm::Rank1, Algorithm::RankP, Algorithm::Enum, Algorithm::Oracle] {
        let r = dispatch_solve(&inst, a, &opts).map_err(|e| format!("{a}: {e}"))?;
        agrees(a.name(), &dense, &best, &r.solution)?;
    }
    Ok("rank1, rankp, enum, oracle all 56".into())
}

#[derive(Default)]
struct Bounds {
    rankp_checked: usize,
    rankp_violations: Vec<String>,
    h1_checked: usize,
    h1_violations: Vec<String>,
}

impl Bounds {
    fn check_h1(&mut self, form: &RankOneForm) {
        let count = pkp_breakpoints(form).breakpoints().len();
        self.h1_checked += 1;
        if count > form.m() + 1 {
            self.h1_violations.push(format!("m = {} with {count} breakpoints", form.m()));
        }
    }

    fn check_rankp(&mut self, m: usize, p: usize, candidates: usize) {
        self.rankp_checked += 1;
        if candidates as u128 > candidate_bound(m, p) {
            self.rankp_violations.push(format!("m = {m}, p = {p}: {candidates} candidates"));
        }
    }
}

fn sizes(rng: &mut bqp::generate::Generator, lo: usize, m_hi: usize, n_hi: usize) -> (usize, usize) {
    (rng.random_range(lo..=m_hi), rng.random_range(lo..=n_hi))
}

fn auto_agrees(inst: &Instance, dense: &Dense, best: &BigRational) -> Result<(), String> {
    let r = dispatch_solve(inst, Algorithm::Auto, &SolveOptions::default()).map_err(|e| format!("auto: {e}"))?;
    agrees(&format!("auto ({})", r.algorithm), dense, best, &r.solution)
}

fn criterion_3(bounds: &mut Bounds) -> Check {
    let start = Instant::now();
    let mut rng = generator(0x5eed_0003);
    let mut counts = Vec::new();
    let strict = FixedRankOptions::default();

    // rank one, general and with a vanishing linear side
    for t in 0..1000u64 {
        let (m, n) = sizes(&mut rng, 1, 5, 6);
        let inst = generate_instance(Kind::Rank(1), m, n, t, 10).map_err(|e| e.to_string())?;
        let dense = Dense::new(&inst);
        let best = dense.optimum();
        let form = RankOneForm::from_instance(&inst).map_err(|e| e.to_string())?;
        bounds.check_h1(&form);
        agrees("rank1", &dense, &best, &solve_rank_one(&form))?;
        let (s, stats) = solve_fixed_rank_with(&inst, &strict).map_err(|e| e.to_string())?;
        bounds.check_rankp(m, stats.rank, stats.candidates);
        agrees("rankp", &dense, &best, &s)?;
        agrees("enum", &dense, &best, &solve_enumeration(&inst, 25).map_err(|e| e.to_string())?)?;
        auto_agrees(&inst, &dense, &best)?;
    }
    counts.push("1000 rank-one");

    for t in 0..300u64 {
        let (m, n) = sizes(&mut rng, 1, 5, 6);
        let f = rank_factorize(generate_instance(Kind::Rank(1), m, n, 10_000 + t, 10).unwrap().q());
        let zero_c = t % 2 == 0;
        let c = if zero_c { vec![Rational::zero(); m] } else { (0..m).map(|_| int(rng.random_range(-10..=10))).collect() };
        let d = if zero_c { (0..n).map(|_| int(rng.random_range(-10..=10))).collect() } else { vec![Rational::zero(); n] };
        let (a, b) = (f.a_column(0), f.b_row(0));
        let (a0, b0) = (int(rng.random_range(-5..=5)), int(rng.random_range(-5..=5)));
        // (a0 + a·x)(b0 + b·y) + c·x + d·y as a general instance
        let q = Matrix::from_fn(m, n, |i, j| &a[i] * &b[j]);
        let cc: Vec<Rational> = (0..m).map(|i| &c[i] + &a[i] * &b0).collect();
        let dd: Vec<Rational> = (0..n).map(|j| &d[j] + &b[j] * &a0).collect();
        let inst = Instance::new(q, cc, dd, &a0 * &b0).unwrap();
        let dense = Dense::new(&inst);
        let best = dense.optimum();
        let s = solve_rank_one_zero_linear(&a0, &a, &b0, &b, &c, &d).map_err(|e| e.to_string())?;
        agrees("rank1-zero-linear", &dense, &best, &s)?;
    }
    counts.push("300 zero-linear rank-one");

    // fixed rank, with the unfiltered superset for p <= 2
    let superset = FixedRankOptions { dual_filter: false, ..strict };
    for p in 1..=3usize {
        for t in 0..500u64 {
            let (m, n) = sizes(&mut rng, p, 6, 6);
            let inst = generate_instance(Kind::Rank(p), m, n, 20_000 * p as u64 + t, 10).map_err(|e| e.to_string())?;
            let dense = Dense::new(&inst);
            let best = dense.optimum();
            let (s, stats) = solve_fixed_rank_with(&inst, &strict).map_err(|e| e.to_string())?;
            ensure(stats.rank == p, || format!("generated rank {} instead of {p}", stats.rank))?;
            bounds.check_rankp(m, p, stats.candidates);
            agrees(&format!("rankp p={p}"), &dense, &best, &s)?;
            if p <= 2 {
                let (wide, _) = solve_fixed_rank_with(&inst, &superset).map_err(|e| e.to_string())?;
                ensure(wide.value == s.value, || format!("superset found {} over {}", wide.value, s.value))?;
            }
            auto_agrees(&inst, &dense, &best)?;
        }
    }
    counts.push("1500 rank-p");

    for t in 0..500u64 {
        let (m, n) = sizes(&mut rng, 1, 6, 6);
        let inst = generate_instance(Kind::Additive, m, n, 30_000 + t, 10).map_err(|e| e.to_string())?;
        let dense = Dense::new(&inst);
        let best = dense.optimum();
        let dec = detect_additive(inst.q()).ok_or("additive instance not detected")?;
        agrees("additive", &dense, &best, &solve_additive(&inst, &dec).map_err(|e| e.to_string())?)?;
        let (s, stats) = solve_fixed_rank_with(&inst, &strict).map_err(|e| e.to_string())?;
        bounds.check_rankp(m, stats.rank, stats.candidates);
        agrees("rankp on additive", &dense, &best, &s)?;
        auto_agrees(&inst, &dense, &best)?;
    }
    counts.push("500 additive");

    for t in 0..500u64 {
        let (m, n) = sizes(&mut rng, 1, 6, 6);
        let inst = generate_instance(Kind::Nonnegative, m, n, 40_000 + t, 10).map_err(|e| e.to_string())?;
        let dense = Dense::new(&inst);
        let best = dense.optimum();
        agrees("mincut", &dense, &best, &solve_nonnegative(&inst).map_err(|e| e.to_string())?)?;
        auto_agrees(&inst, &dense, &best)?;
    }
    counts.push("500 nonnegative");

    for t in 0..500u64 {
        let (m, n) = sizes(&mut rng, 1, 6, 6);
        let k = rng.random_range(0..=3);
        let inst = generate_instance(Kind::SparseNegative(k), m, n, 50_000 + t, 10).map_err(|e| e.to_string())?;
        let dense = Dense::new(&inst);
        let best = dense.optimum();
        let elim = min_negative_eliminator(inst.q());
        agrees("eliminator", &dense, &best, &solve_with_eliminator(&inst, &elim, 25).map_err(|e| e.to_string())?)?;
        auto_agrees(&inst, &dense, &best)?;
    }
    counts.push("500 sparse-negative");

    let t = start.elapsed();
    ensure(t <= SUITE_LIMIT, || format!("suites took {t:?}"))?;
    Ok(format!("{} instances match the oracle, {:.1} s", counts.join(", "), t.as_secs_f64()))
}

fn criterion_4(bounds: &Bounds) -> Check {
    ensure(bounds.rankp_violations.is_empty(), || bounds.rankp_violations.join("; "))?;
    ensure(bounds.h1_violations.is_empty(), || bounds.h1_violations.join("; "))?;
    ensure(bounds.rankp_checked > 0 && bounds.h1_checked > 0, || "no instances checked".into())?;
    Ok(format!(
        "candidates <= C(m,p) 2^p on {} runs, h1 breakpoints <= m+1 on {} tracks",
        bounds.rankp_checked, bounds.h1_checked
    ))
}

fn median(mut v: Vec<Duration>) -> Duration {
    v.sort();
    v[v.len() / 2]
}

fn criterion_5() -> Check {
    // interleaved runs, so machine noise hits both sizes alike
    let small = generate_rank_one_form(RANK1_SIZE, RANK1_SIZE, 1, 1000).unwrap();
    let large = generate_rank_one_form(2 * RANK1_SIZE, 2 * RANK1_SIZE, 2, 1000).unwrap();
    let (mut ts, mut tl) = (Vec::new(), Vec::new());
    for _ in 0..RANK1_RUNS {
        for (form, times) in [(&small, &mut ts), (&large, &mut tl)] {
            let t = Instant::now();
            std::hint::black_box(solve_rank_one(form));
            times.push(t.elapsed());
        }
    }
    let (t1, t2) = (median(ts), median(tl));
    let growth = t2.as_secs_f64() / t1.as_secs_f64();
    ensure(t1 <= RANK1_LIMIT, || format!("rank1 at {RANK1_SIZE} took {t1:?}"))?;
    ensure(growth <= DOUBLING_LIMIT, || format!("rank1 doubling ratio {growth:.2}"))?;

    let inst = generate_instance(Kind::Additive, ADDITIVE_SIZE, ADDITIVE_SIZE, 5, 100).unwrap();
    let dec = detect_additive(inst.q()).ok_or("not additive")?;
    let t = Instant::now();
    std::hint::black_box(solve_additive(&inst, &dec).map_err(|e| e.to_string())?);
    let ta = t.elapsed();
    ensure(ta <= ADDITIVE_LIMIT, || format!("additive at {ADDITIVE_SIZE} took {ta:?}"))?;

    let mut tm = Duration::ZERO;
    for seed in 0..3 {
        let inst = generate_instance(Kind::Nonnegative, MINCUT_SIZE, MINCUT_SIZE, seed, 100).unwrap();
        let t = Instant::now();
        std::hint::black_box(solve_nonnegative(&inst).map_err(|e| e.to_string())?);
        tm = tm.max(t.elapsed());
    }
    ensure(tm <= MINCUT_LIMIT, || format!("mincut at {MINCUT_SIZE} took {tm:?}"))?;

    Ok(format!(
        "rank1 {RANK1_SIZE}: {:.3} s (x{growth:.2} on doubling, medians of {RANK1_RUNS}), additive {ADDITIVE_SIZE}: {:.3} s, mincut {MINCUT_SIZE}: {:.3} s",
        t1.as_secs_f64(),
        ta.as_secs_f64(),
        tm.as_secs_f64()
    ))
}

/// Every identity of the transformations on every point of one instance.
fn transformation_identities(inst: &Instance, rng: &mut bqp::generate::Generator) -> Result<usize, String> {
    let (m, n) = (inst.m(), inst.n());
    let dense = Dense::new(inst);
    let mut checked = 0;

    // homogeneous form
    let (h, big_m) = to_homogeneous(inst);
    let hd = Dense::new(&h);
    let best = dense.optimum();
    let mut h_best = None::<BigRational>;
    for (x, y) in all_points(m + 1, n + 1) {
        let v = hd.objective(&x, &y);
        if x[m] && y[n] {
            ensure(v == dense.objective(&x[..m], &y[..n]) + big(&big_m), || "homogeneous value shift".into())?;
        }
        if h_best.as_ref().is_none_or(|b| v > *b) {
            h_best = Some(v);
        }
        checked += 1;
    }
    let h_best = h_best.unwrap();
    ensure(h_best.clone() - big(&big_m) == best, || "homogeneous optimum minus M".into())?;
    for (x, y) in all_points(m + 1, n + 1) {
        if hd.objective(&x, &y) == h_best {
            ensure(x[m] && y[n], || "homogeneous optimum without the border".into())?;
        }
    }

    // cut form, both directions and round trips
    let cut = bqp01_to_cut(inst);
    ensure(cut_to_bqp01(&cut) == *inst, || "cut round trip".into())?;
    for (w, z) in all_spin_points(m, n) {
        let x: Vec<bool> = w.iter().map(|&s| s > 0).collect();
        let y: Vec<bool> = z.iter().map(|&s| s > 0).collect();
        ensure(common::spin_objective(cut.data(), &w, &z) == dense.objective(&x, &y), || "cut identity".into())?;
        checked += 1;
    }
    let raw = common::rational_instance(rng, m, n);
    let spin = CutInstance::new(raw.q().clone(), raw.c().to_vec(), raw.d().to_vec(), raw.c0().clone()).unwrap();
    let back = cut_to_bqp01(&spin);
    ensure(bqp01_to_cut(&back) == spin, || "inverse cut round trip".into())?;
    let bd = Dense::new(&back);
    for (w, z) in all_spin_points(m, n) {
        let x: Vec<bool> = w.iter().map(|&s| s > 0).collect();
        let y: Vec<bool> = z.iter().map(|&s| s > 0).collect();
        ensure(bd.objective(&x, &y) == common::spin_objective(spin.data(), &w, &z), || "inverse cut identity".into())?;
        checked += 1;
    }

    // QP01 embedding of BQP01
    let qp = bqp01_to_qp01(inst);
    for (x, y) in all_points(m, n) {
        let w: Vec<bool> = x.iter().chain(&y).copied().collect();
        ensure(qp01_value(&qp, &w) == dense.objective(&x, &y), || "qp01 embedding".into())?;
        checked += 1;
    }

    // BQP01 embedding of a QP01 on m variables
    let qp2 = Qp01::new(Matrix::from_fn(m, m, |_, _| common::small_rational(rng)), raw.c().to_vec(), raw.c0().clone()).unwrap();
    let (emb, pen) = qp01_to_bqp01(&qp2);
    let ed = Dense::new(&emb);
    let qp_best = (0u64..1 << m).map(|mask| qp01_value(&qp2, &common::bits(mask, m))).max().unwrap();
    let mut emb_best = None::<BigRational>;
    for (x, y) in all_points(m, m) {
        let mismatches = x.iter().zip(&y).filter(|(a, b)| a != b).count() as i64;
        let qp_part = qp_cross_value(&qp2, &x, &y);
        let v = ed.objective(&x, &y);
        ensure(v == qp_part - big(&pen) * big_int(mismatches), || "qp01 penalty identity".into())?;
        if emb_best.as_ref().is_none_or(|b| v > *b) {
            emb_best = Some(v);
        }
        checked += 1;
    }
    let emb_best = emb_best.unwrap();
    ensure(emb_best == qp_best, || "qp01 embedding optimum".into())?;
    for (x, y) in all_points(m, m) {
        if ed.objective(&x, &y) == emb_best {
            ensure(x == y, || "qp01 embedding optimum with x != y".into())?;
        }
    }

    // bipartite max-cut, both directions
    let hom = CutInstance::new(inst.q().clone(), vec![Rational::zero(); m], vec![Rational::zero(); n], Rational::zero()).unwrap();
    let g = bqp11h_to_bmaxcut(&hom).map_err(|e| e.to_string())?;
    let sum_q: BigRational = (0..m).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| big(&inst.q()[(i, j)])).sum();
    for (w, z) in all_spin_points(m, n) {
        ensure(common::spin_objective(hom.data(), &w, &z) == &sum_q + big(&g.cut_value(&w, &z)), || "max-cut identity".into())?;
        checked += 1;
    }
    let mut edges = Vec::new();
    for (i, j) in (0..m).flat_map(|i| (0..n).map(move |j| (i, j))) {
        if rng.random_bool(0.6) {
            edges.push((i, j, common::small_rational(rng)));
        }
    }
    let graph = BipartiteWeightedGraph::new(m, n, edges.clone()).map_err(|e| e.to_string())?;
    let from_graph = bmaxcut_to_bqp11h(&graph);
    let half_w: BigRational = edges.iter().map(|(_, _, w)| big(w)).sum::<BigRational>() / big_int(2);
    for (w, z) in all_spin_points(m, n) {
        let phi = common::spin_objective(from_graph.data(), &w, &z);
        ensure(big(&graph.cut_value(&w, &z)) == &half_w + phi, || "max-cut inverse identity".into())?;
        checked += 1;
    }

    // maximum weight biclique
    let positive: Vec<(usize, usize, Rational)> = edges.iter().map(|(i, j, w)| (*i, *j, w.abs() + int(1))).collect();
    let bg = BipartiteWeightedGraph::new(m, n, positive.clone()).unwrap();
    let (bi, _) = mwbp_to_bqp01(&bg).map_err(|e| e.to_string())?;
    let bd = Dense::new(&bi);
    let mut best_biclique = big_int(0);
    for (x, y) in all_points(m, n) {
        let complete = (0..m).all(|i| (0..n).all(|j| !(x[i] && y[j]) || positive.iter().any(|e| e.0 == i && e.1 == j)));
        let v = bd.objective(&x, &y);
        if complete {
            let weight: BigRational = positive.iter().filter(|e| x[e.0] && y[e.1]).map(|e| big(&e.2)).sum();
            ensure(v == weight, || "biclique value".into())?;
            best_biclique = best_biclique.max(weight);
        } else {
            ensure(v < big_int(0), || "non-biclique must score negative".into())?;
        }
        checked += 1;
    }
    ensure(bd.optimum() == best_biclique, || "biclique optimum".into())?;

    // rank-one binary approximation
    let hmat = Matrix::from_fn(m, n, |_, _| int(rng.random_range(0..=1)));
    let approx = rank1_binary_approx_to_bqp01(&hmat).map_err(|e| e.to_string())?;
    let ad = Dense::new(&approx);
    let mut min_err = None::<BigRational>;
    for (u, v) in all_points(m, n) {
        let err: BigRational = (0..m)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let diff = big(&hmat[(i, j)]) - big_int((u[i] && v[j]) as i64);
                &diff * &diff
            })
            .sum();
        ensure(big(&squared_approximation_error(&hmat, &u, &v)) == err, || "squared error".into())?;
        ensure(ad.objective(&u, &v) == -err.clone(), || "approximation identity".into())?;
        min_err = Some(min_err.map_or(err.clone(), |e: BigRational| e.min(err)));
        checked += 1;
    }
    ensure(-ad.optimum() == min_err.unwrap(), || "approximation optimum".into())?;

    // orientation
    let (oriented, swapped) = normalize_orientation(inst);
    ensure(swapped == (m > n) && oriented.m() <= oriented.n(), || "orientation flag".into())?;
    let od = Dense::new(&oriented);
    for (x, y) in all_points(m, n) {
        let v = if swapped { od.objective(&y, &x) } else { od.objective(&x, &y) };
        ensure(v == dense.objective(&x, &y), || "orientation".into())?;
        checked += 1;
    }
    Ok(checked)
}

fn qp01_value(qp: &Qp01, w: &[bool]) -> BigRational {
    let mut v = big(&qp.c0);
    for i in (0..w.len()).filter(|&i| w[i]) {
        v += big(&qp.c[i]);
        for j in (0..w.len()).filter(|&j| w[j]) {
            v += big(&qp.q[(i, j)]);
        }
    }
    v
}

/// `xᵀQ'y + c'(x + y)/2 + c0'`.
fn qp_cross_value(qp: &Qp01, x: &[bool], y: &[bool]) -> BigRational {
    let mut v = big(&qp.c0);
    for i in 0..x.len() {
        let half = big(&qp.c[i]) / big_int(2);
        if x[i] {
            v += &half;
        }
        if y[i] {
            v += &half;
        }
        for (j, &yj) in y.iter().enumerate() {
            if x[i] && yj {
                v += big(&qp.q[(i, j)]);
            }
        }
    }
    v
}

fn criterion_6() -> Check {
    let mut rng = generator(0x5eed_0006);
    let mut points = 0;
    for _ in 0..200 {
        let (m, n) = sizes(&mut rng, 1, 3, 3);
        let inst = common::rational_instance(&mut rng, m, n);
        points += transformation_identities(&inst, &mut rng)?;
    }
    Ok(format!("200 instances, {points} point identities"))
}

fn criterion_7() -> Check {
    let mut rng = generator(0x5eed_0007);
    for t in 0..500 {
        let (m, n) = sizes(&mut rng, 1, 7, 7);
        let density = rng.random_range(0.05..0.4);
        let q = Matrix::from_fn(m, n, |_, _| if rng.random_bool(density) { int(-rng.random_range(1..=9)) } else { int(rng.random_range(0..=9)) });
        let elim = min_negative_eliminator(&q);
        let matching = negativity_matching(&q);
        ensure(elim.covers(&q), || format!("graph {t}: uncovered negative entry"))?;
        let mut rows: Vec<usize> = matching.iter().map(|e| e.0).collect();
        let mut cols: Vec<usize> = matching.iter().map(|e| e.1).collect();
        rows.sort();
        rows.dedup();
        cols.sort();
        cols.dedup();
        ensure(rows.len() == matching.len() && cols.len() == matching.len(), || format!("graph {t}: not a matching"))?;
        ensure(matching.iter().all(|&(i, j)| q[(i, j)].is_negative()), || format!("graph {t}: matched a nonnegative entry"))?;
        ensure(elim.size() == matching.len(), || format!("graph {t}: cover {} vs matching {}", elim.size(), matching.len()))?;
        let brute = oracle_min_cover(&q);
        ensure(elim.size() == brute, || format!("graph {t}: cover {} vs brute force {brute}", elim.size()))?;
    }
    Ok("500 graphs: cover = matching = brute-force minimum".into())
}

fn criterion_8() -> Check {
    let mut rng = generator(0x5eed_0008);
    let mut labelings = 0;
    for t in 0..100u64 {
        let (m, n) = sizes(&mut rng, 1, 3, 3);
        let inst = generate_instance(Kind::Nonnegative, m, n, 80_000 + t, 10).unwrap();
        let dense = Dense::new(&inst);
        let (net, offset) = build_cut_network(&inst).map_err(|e| e.to_string())?;
        let (flow, _) = max_flow(&net);
        let mut min_cut = None::<Rational>;
        for (x, y) in all_points(m, n) {
            let cap = net.cut_capacity(&labeling(&x, &y));
            ensure(big(&(&offset - &cap)) == dense.objective(&x, &y), || format!("instance {t}: cut identity"))?;
            min_cut = Some(min_cut.map_or(cap.clone(), |c| c.min(cap)));
            labelings += 1;
        }
        ensure(Some(&flow) == min_cut.as_ref(), || format!("instance {t}: flow {flow} vs min cut {min_cut:?}"))?;
    }
    Ok(format!("100 instances, {labelings} labelings, max flow = min cut"))
}

fn main() {
    let mut bounds = Bounds::default();
    let mut failed = 0;
    let mut report = |id: u32, name: &str, f: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id} {name}: PASS ({detail}) [{secs:.2} s]"),
            Err(why) => {
                failed += 1;
                println!("criterion {id} {name}: FAIL ({why}) [{secs:.2} s]");
            }
        }
    };
    report(1, "sample breakpoints", &mut criterion_1);
    report(2, "sample optimum", &mut criterion_2);
    report(3, "oracle equivalence", &mut || criterion_3(&mut bounds));
    report(4, "structural bounds", &mut || criterion_4(&bounds));
    report(5, "complexity smoke", &mut criterion_5);
    report(6, "transformation identities", &mut criterion_6);
    report(7, "konig property", &mut criterion_7);
    report(8, "cut identity", &mut criterion_8);
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
