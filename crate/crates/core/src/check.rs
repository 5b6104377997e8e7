//! Cross-checks the GJK queries against the brute-force oracles over a
//! dataset.

use std::collections::BTreeMap;

use crate::baseline::{oracle_distance, sat_intersects};
use crate::datasets::{Dataset, PairCase, Regime};
use crate::gjk::{distance, distance_traced, intersects, CollisionExit, QueryOptions};

pub const DISTANCE_REL_TOL: f64 = 1e-7;
pub const DISTANCE_ABS_TOL: f64 = 1e-9;
pub const DESCENT_SLACK: f64 = 1e-12;

/// Allowed distance error for an oracle value.
pub fn distance_tolerance(oracle: f64) -> f64 {
    DISTANCE_REL_TOL * oracle.max(1.0) + DISTANCE_ABS_TOL
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct RegimeCheck {
    pub cases: usize,
    /// Cases whose geometry does not match their regime label.
    pub label_violations: usize,
    pub distance_failures: usize,
    /// Binary mismatches against SAT on distant and overlap cases.
    pub binary_failures: usize,
    /// Binary mismatches on touching cases; reported, not failed.
    pub touching_binary_mismatches: usize,
    /// `SeparatingHyperplane` exits on pairs SAT says intersect.
    pub separating_false_negatives: usize,
    /// `VerticalAngleEnclosure` exits on pairs SAT says are apart.
    pub vertical_angle_false_positives: usize,
    pub work_bound_violations: usize,
    pub descent_violations: usize,
    pub worst_abs_error: f64,
    pub failing_seeds: Vec<u64>,
}

impl RegimeCheck {
    pub fn failures(&self) -> usize {
        self.label_violations
            + self.distance_failures
            + self.binary_failures
            + self.separating_false_negatives
            + self.vertical_angle_false_positives
            + self.work_bound_violations
            + self.descent_violations
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct CheckReport {
    pub regimes: BTreeMap<Regime, RegimeCheck>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.regimes.values().all(RegimeCheck::passed)
    }

    pub fn total_cases(&self) -> usize {
        self.regimes.values().map(|r| r.cases).sum()
    }

    pub fn merge(&mut self, other: CheckReport) {
        for (regime, r) in other.regimes {
            let e = self.regimes.entry(regime).or_default();
            e.cases += r.cases;
            e.label_violations += r.label_violations;
            e.distance_failures += r.distance_failures;
            e.binary_failures += r.binary_failures;
            e.touching_binary_mismatches += r.touching_binary_mismatches;
            e.separating_false_negatives += r.separating_false_negatives;
            e.vertical_angle_false_positives += r.vertical_angle_false_positives;
            e.work_bound_violations += r.work_bound_violations;
            e.descent_violations += r.descent_violations;
            e.worst_abs_error = e.worst_abs_error.max(r.worst_abs_error);
            e.failing_seeds.extend(r.failing_seeds);
        }
    }
}

/// Runs both support variants of both queries on one case and tallies every
/// disagreement with the oracles.
pub fn check_case(case: &PairCase, out: &mut RegimeCheck) {
    let oracle = oracle_distance(&case.p, &case.q).distance;
    let sat = sat_intersects(&case.p, &case.q);
    let mut failed = false;
    out.cases += 1;
    if !case.verify() {
        out.label_violations += 1;
        failed = true;
    }

    for opts in [QueryOptions::brute_force(), QueryOptions::hill_climbing()] {
        let (d, trace) = distance_traced(&case.p, &case.q, &opts);
        let err = (d.distance - oracle).abs();
        out.worst_abs_error = out.worst_abs_error.max(err);
        if err > distance_tolerance(oracle) {
            out.distance_failures += 1;
            failed = true;
        }
        if trace.norms.windows(2).any(|w| w[1] > w[0] + DESCENT_SLACK) {
            out.descent_violations += 1;
            failed = true;
        }

        let c = intersects(&case.p, &case.q, &opts);
        if c.colliding != sat {
            if case.regime == Regime::Touching {
                out.touching_binary_mismatches += 1;
            } else {
                out.binary_failures += 1;
                failed = true;
            }
        }
        match c.exit {
            CollisionExit::SeparatingHyperplane if sat => {
                out.separating_false_negatives += 1;
                failed = true;
            }
            CollisionExit::VerticalAngleEnclosure if !sat => {
                out.vertical_angle_false_positives += 1;
                failed = true;
            }
            _ => {}
        }
        if c.support_calls > distance(&case.p, &case.q, &opts).support_calls {
            out.work_bound_violations += 1;
            failed = true;
        }
    }
    if failed {
        out.failing_seeds.push(case.seed);
    }
}

pub fn check_dataset(dataset: &Dataset) -> CheckReport {
    let mut report = CheckReport::default();
    for case in &dataset.cases {
        check_case(case, report.regimes.entry(case.regime).or_default());
    }
    report
}
