//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{origin_edge_margin, origin_in_triangle, triangle_oracle};
use gjk2d::baseline::{oracle_distance, sat_intersects};
use gjk2d::bench::{bench_cell, Algorithm};
use gjk2d::datasets::{generate_dataset, Dataset, DatasetSpec, GenerationReport, PairCase, Regime};
use gjk2d::gjk::distance_traced;
use gjk2d::subdistance::{compute_barycode, s2d};
use gjk2d::{intersects, CollisionExit, QueryOptions, SimplexVertex, Vec2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const VERTEX_COUNTS: [usize; 6] = [4, 8, 12, 16, 20, 24];
const CASES_PER_REGIME: usize = 1000;
const SEED: u64 = 42;
const TRIANGLES: usize = 100_000;
const TIMING_ROUNDS: usize = 7;
const TIMING_REPETITIONS: usize = 50;

#[derive(Default)]
struct Suite {
    lines: Vec<(String, bool, String)>,
}

impl Suite {
    fn report(&mut self, id: &str, name: &str, pass: bool, detail: String) {
        self.lines
            .push((id.to_string(), pass, format!("{name}: {detail}")));
    }

    /// Prints results in criterion order and returns the failure count.
    fn finish(mut self) -> usize {
        self.lines.sort_by(|a, b| a.0.cmp(&b.0));
        for (id, pass, text) in &self.lines {
            println!("{} [{id}] {text}", if *pass { "PASS" } else { "FAIL" });
        }
        self.lines.iter().filter(|l| !l.1).count()
    }
}

#[derive(Default)]
struct CaseTally {
    cases: usize,
    distance_fail: usize,
    worst_err: f64,
    binary_checked: usize,
    binary_fail: usize,
    touching_mismatch: usize,
    separating_exits: usize,
    separating_false_neg: usize,
    vertical_exits: usize,
    vertical_false_pos: usize,
    work_fail: usize,
    descent_steps: usize,
    descent_fail: usize,
}

fn tally_case(case: &PairCase, t: &mut CaseTally) {
    let oracle = oracle_distance(&case.p, &case.q).distance;
    let sat = sat_intersects(&case.p, &case.q);
    t.cases += 1;
    let mut distance_ok = true;
    for opts in [QueryOptions::brute_force(), QueryOptions::hill_climbing()] {
        let (d, trace) = distance_traced(&case.p, &case.q, &opts);
        let err = (d.distance - oracle).abs();
        t.worst_err = t.worst_err.max(err);
        distance_ok &= err <= 1e-7 * oracle + 1e-9;
        for w in trace.norms.windows(2) {
            t.descent_steps += 1;
            if w[1] > w[0] + 1e-12 {
                t.descent_fail += 1;
            }
        }

        let c = intersects(&case.p, &case.q, &opts);
        if case.regime == Regime::Touching {
            t.touching_mismatch += (c.colliding != sat) as usize;
        } else {
            t.binary_checked += 1;
            t.binary_fail += (c.colliding != sat) as usize;
        }
        match c.exit {
            CollisionExit::SeparatingHyperplane => {
                t.separating_exits += 1;
                t.separating_false_neg += sat as usize;
            }
            CollisionExit::VerticalAngleEnclosure => {
                t.vertical_exits += 1;
                t.vertical_false_pos += (!sat) as usize;
            }
            _ => {}
        }
        if c.support_calls > d.support_calls {
            t.work_fail += 1;
        }
    }
    if !distance_ok {
        t.distance_fail += 1;
    }
}

fn dataset_criteria(suite: &mut Suite, datasets: &[(Dataset, GenerationReport)]) {
    let start = Instant::now();
    let mut t = CaseTally::default();
    for (dataset, _) in datasets {
        for case in &dataset.cases {
            tally_case(case, &mut t);
        }
    }
    let elapsed = start.elapsed().as_secs_f64();

    suite.report(
        "1",
        "oracle distance equivalence",
        t.distance_fail == 0,
        format!(
            "{}/{} cases within 1e-7 rel + 1e-9 abs (both support modes), worst abs error {:.3e}, {:.1}s",
            t.cases - t.distance_fail,
            t.cases,
            t.worst_err,
            elapsed
        ),
    );
    suite.report(
        "2",
        "binary correctness vs SAT",
        t.binary_fail == 0,
        format!(
            "{} mismatches in {} distant/overlap queries; touching band mismatches {} (reported only)",
            t.binary_fail, t.binary_checked, t.touching_mismatch
        ),
    );
    suite.report(
        "4",
        "early-exit soundness",
        t.separating_false_neg == 0 && t.vertical_false_pos == 0,
        format!(
            "separating-hyperplane exits {} with {} false negatives; vertical-angle exits {} with {} false positives",
            t.separating_exits, t.separating_false_neg, t.vertical_exits, t.vertical_false_pos
        ),
    );
    suite.report(
        "6",
        "binary work bound",
        t.work_fail == 0,
        format!(
            "{} of {} queries used more support calls than distance",
            t.work_fail,
            2 * t.cases
        ),
    );
    suite.report(
        "7",
        "descent property",
        t.descent_fail == 0,
        format!(
            "{} of {} steps grew by more than 1e-12",
            t.descent_fail, t.descent_steps
        ),
    );
}

fn random_triangle(rng: &mut ChaCha8Rng) -> (Vec2, Vec2, Vec2, f64) {
    let scale = 10f64.powf(rng.gen_range(-3.0..2.0));
    let mut pt = || Vec2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) * scale;
    (pt(), pt(), pt(), scale)
}

fn triangle_criterion(suite: &mut Suite) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst = 0.0f64;
    let mut distance_fail = 0;
    let mut code_checked = 0;
    let mut code_fail = 0;
    let mut inside = 0;
    for _ in 0..TRIANGLES {
        let (a, b, c, scale) = random_triangle(&mut rng);
        let sv = SimplexVertex::from_point;
        let got = s2d(sv(a), sv(b), sv(c)).v.norm();
        let (oracle, sampled) = triangle_oracle(a, b, c);
        assert!(
            sampled >= oracle - 1e-12 * scale,
            "oracle refinement went the wrong way"
        );
        let err = (got - oracle).abs();
        worst = worst.max(err);
        distance_fail += (err > 1e-9) as usize;

        let area = (b - a).cross(c - a).abs();
        let non_degenerate =
            area > 1e-9 * scale * scale && origin_edge_margin(a, b, c) > 1e-12 * scale;
        if let (true, Ok(coords)) = (non_degenerate, compute_barycode(a, b, c)) {
            code_checked += 1;
            let half_planes = origin_in_triangle(a, b, c);
            inside += half_planes as usize;
            code_fail += ((coords.code.get() == 7) != half_planes) as usize;
        }
    }
    suite.report(
        "3",
        "s2d brute-force equivalence",
        distance_fail == 0 && code_fail == 0,
        format!(
            "{}/{TRIANGLES} triangles within 1e-9 (worst {:.3e}); barycode 7 vs half-planes: {} mismatches in {} non-degenerate ({} inside)",
            TRIANGLES - distance_fail,
            worst,
            code_fail,
            code_checked,
            inside
        ),
    );
}

/// Median over interleaved rounds of the per-call mean of `a` divided by `b`.
fn timing_ratio(dataset: &Dataset, regime: Regime, a: Algorithm, b: Algorithm) -> (f64, f64, f64) {
    let cases: Vec<&PairCase> = dataset.regime(regime).collect();
    let n = dataset.vertex_count().unwrap_or(0);
    let mut ratios = Vec::new();
    let mut means = (Vec::new(), Vec::new());
    for _ in 0..TIMING_ROUNDS {
        let ra = bench_cell(a, regime, n, &cases, TIMING_REPETITIONS).mean_ns;
        let rb = bench_cell(b, regime, n, &cases, TIMING_REPETITIONS).mean_ns;
        ratios.push(ra / rb);
        means.0.push(ra);
        means.1.push(rb);
    }
    let median = |v: &mut Vec<f64>| {
        v.sort_by(f64::total_cmp);
        v[v.len() / 2]
    };
    (
        median(&mut ratios),
        median(&mut means.0),
        median(&mut means.1),
    )
}

fn timing_criterion(suite: &mut Suite, datasets: &[(Dataset, GenerationReport)]) {
    let by_n = |n: usize| &datasets[VERTEX_COUNTS.iter().position(|&m| m == n).unwrap()].0;
    let checks = [
        (
            "5a",
            4,
            Regime::Distant,
            Algorithm::BinaryGjk,
            Algorithm::DistanceGjk,
            0.75,
        ),
        (
            "5b",
            24,
            Regime::Distant,
            Algorithm::DistanceGjkHcs,
            Algorithm::DistanceGjk,
            0.9,
        ),
        (
            "5c",
            16,
            Regime::Overlap,
            Algorithm::BinaryGjk,
            Algorithm::Sat,
            0.5,
        ),
    ];
    for (id, n, regime, a, b, limit) in checks {
        let (ratio, ma, mb) = timing_ratio(by_n(n), regime, a, b);
        suite.report(
            id,
            "relative performance",
            ratio < limit,
            format!(
                "{} {:.1} ns / {} {:.1} ns on {regime} n={n}: ratio {:.3} (limit {limit})",
                a.name(),
                ma,
                b.name(),
                mb,
                ratio
            ),
        );
    }
}

fn touching_criterion(suite: &mut Suite, datasets: &[(Dataset, GenerationReport)]) {
    let mut worst = f64::INFINITY;
    let mut parts = Vec::new();
    for ((_, report), n) in datasets.iter().zip(VERTEX_COUNTS) {
        let rate = report.touching_success_rate();
        worst = worst.min(rate);
        parts.push(format!(
            "n={n} {:.1}% ({} regenerated)",
            100.0 * rate,
            report.touching_regenerated.len()
        ));
    }
    suite.report(
        "8",
        "touching-regime fidelity",
        worst >= 0.99,
        format!("first-try success {}", parts.join(", ")),
    );
}

fn main() -> ExitCode {
    let mut suite = Suite::default();
    let start = Instant::now();
    let datasets: Vec<(Dataset, GenerationReport)> = VERTEX_COUNTS
        .iter()
        .map(|&n| {
            generate_dataset(&DatasetSpec::new(n, CASES_PER_REGIME, SEED))
                .expect("generate dataset")
        })
        .collect();
    println!(
        "generated {} datasets x {} cases per regime (seed {SEED}) in {:.1}s",
        datasets.len(),
        CASES_PER_REGIME,
        start.elapsed().as_secs_f64()
    );

    dataset_criteria(&mut suite, &datasets);
    triangle_criterion(&mut suite);
    timing_criterion(&mut suite, &datasets);
    touching_criterion(&mut suite, &datasets);

    let failed = suite.finish();
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
