//! Cross-check GJK against the separating-axis and brute-force baselines.
//!
//! cargo run --example sat_vs_gjk

use gjk2d::baseline::{oracle_distance, sat_intersects};
use gjk2d::check::check_dataset;
use gjk2d::datasets::{generate_dataset, DatasetSpec};
use gjk2d::{distance, intersects, QueryOptions};

fn main() {
    let (dataset, _) = generate_dataset(&DatasetSpec::new(12, 200, 3)).unwrap();
    let opts = QueryOptions::default();

    let case = &dataset.cases[0];
    let oracle = oracle_distance(&case.p, &case.q);
    println!(
        "first case ({}): gjk {:.9}, oracle {:.9} via {:?}; gjk colliding {}, sat {}",
        case.regime,
        distance(&case.p, &case.q, &opts).distance,
        oracle.distance,
        oracle.closest_feature,
        intersects(&case.p, &case.q, &opts).colliding,
        sat_intersects(&case.p, &case.q)
    );

    let report = check_dataset(&dataset);
    for (regime, r) in &report.regimes {
        println!(
            "{regime:>8}: {} cases, {} failures, worst error {:.2e}, touching mismatches {}",
            r.cases,
            r.failures(),
            r.worst_abs_error,
            r.touching_binary_mismatches
        );
    }
    println!("{}", if report.passed() { "PASS" } else { "FAIL" });
}
