//! Time every algorithm on every regime and print the CSV table.
//!
//! cargo run --release --example benchmark -- [vertex_count]

use std::io;

use gjk2d::bench::{run_bench, write_csv, Algorithm};
use gjk2d::datasets::{generate_dataset, DatasetSpec};

fn main() {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(16);
    let (dataset, _) = generate_dataset(&DatasetSpec::new(n, 1000, 42)).unwrap();
    let records = run_bench(&dataset, &Algorithm::ALL, 20);
    write_csv(io::stdout().lock(), &records).unwrap();
}
