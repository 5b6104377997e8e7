//! Generate a seeded pair dataset, save it and read it back.
//!
//! cargo run --example dataset_generation

use gjk2d::datasets::{generate_dataset, read_dataset, write_dataset, DatasetSpec, Regime};
use gjk2d::distance;
use gjk2d::QueryOptions;

fn main() {
    let spec = DatasetSpec::new(8, 50, 7);
    let (dataset, report) = generate_dataset(&spec).expect("generation");
    println!(
        "{} cases; touching first-try success {:.1}%",
        dataset.cases.len(),
        100.0 * report.touching_success_rate()
    );

    let path = std::env::temp_dir().join("gjk2d_example_pairs.jsonl");
    write_dataset(&path, &dataset).expect("write");
    let back = read_dataset(&path).expect("read");
    assert_eq!(back.cases, dataset.cases);
    println!("round trip through {} ok", path.display());

    for regime in Regime::ALL {
        let ds: Vec<f64> = back
            .regime(regime)
            .map(|c| distance(&c.p, &c.q, &QueryOptions::default()).distance)
            .collect();
        let max = ds.iter().cloned().fold(0.0, f64::max);
        println!("{regime:>8}: {} pairs, max distance {max:.3e}", ds.len());
    }
    let _ = std::fs::remove_file(&path);
}
