//! Timing harness producing per-call nanosecond statistics as CSV.

use std::fmt;
use std::hint::black_box;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::Instant;

use crate::baseline::sat_intersects;
use crate::datasets::{Dataset, PairCase, Regime};
use crate::gjk::{distance, intersects, QueryOptions};

pub const MIN_WARMUP: usize = 5;
pub const MIN_REPETITIONS: usize = 20;

pub const CSV_HEADER: &str =
    "algorithm,regime,vertex_count,mean_ns,p50_ns,p99_ns,mean_iterations,mean_support_calls";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    DistanceGjk,
    DistanceGjkHcs,
    BinaryGjk,
    BinaryGjkHcs,
    Sat,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::DistanceGjk,
        Algorithm::DistanceGjkHcs,
        Algorithm::BinaryGjk,
        Algorithm::BinaryGjkHcs,
        Algorithm::Sat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::DistanceGjk => "DistanceGjk",
            Algorithm::DistanceGjkHcs => "DistanceGjkHcs",
            Algorithm::BinaryGjk => "BinaryGjk",
            Algorithm::BinaryGjkHcs => "BinaryGjkHcs",
            Algorithm::Sat => "Sat",
        }
    }

    fn options(self) -> QueryOptions {
        match self {
            Algorithm::DistanceGjkHcs | Algorithm::BinaryGjkHcs => QueryOptions::hill_climbing(),
            _ => QueryOptions::brute_force(),
        }
    }

    /// Runs one query and returns `(iterations, support_calls)`.
    #[inline]
    fn run(self, case: &PairCase, opts: &QueryOptions) -> (u32, u32) {
        match self {
            Algorithm::DistanceGjk | Algorithm::DistanceGjkHcs => {
                let r = distance(black_box(&case.p), black_box(&case.q), opts);
                black_box(r.distance);
                black_box(r.witness_p);
                (r.iterations, r.support_calls)
            }
            Algorithm::BinaryGjk | Algorithm::BinaryGjkHcs => {
                let r = intersects(black_box(&case.p), black_box(&case.q), opts);
                black_box(r.colliding);
                (r.iterations, r.support_calls)
            }
            Algorithm::Sat => {
                black_box(sat_intersects(black_box(&case.p), black_box(&case.q)));
                (0, 0)
            }
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<_> = Algorithm::ALL.iter().map(|a| a.name()).collect();
                format!(
                    "unknown algorithm `{s}` (expected one of {})",
                    names.join(", ")
                )
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub regime: Regime,
    pub vertex_count: usize,
    pub mean_ns: f64,
    pub p50_ns: f64,
    pub p99_ns: f64,
    pub mean_iterations: f64,
    pub mean_support_calls: f64,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{:.3},{:.3},{:.3},{:.4},{:.4}",
            self.algorithm,
            self.regime,
            self.vertex_count,
            self.mean_ns,
            self.p50_ns,
            self.p99_ns,
            self.mean_iterations,
            self.mean_support_calls
        )
    }
}

/// Nearest-rank percentile of an ascending slice.
fn percentile(sorted: &[f64], pct: f64) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let rank = ((pct / 100.0) * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

/// Times one algorithm over a slice of cases.
///
/// Each timed pass runs every case once; the pass time divided by the case
/// count is one per-call sample. Mean, median and 99th percentile are over
/// those samples.
pub fn bench_cell(
    algorithm: Algorithm,
    regime: Regime,
    vertex_count: usize,
    cases: &[&PairCase],
    repetitions: usize,
) -> BenchRecord {
    let opts = algorithm.options();
    let mut iterations = 0u64;
    let mut calls = 0u64;
    for case in cases {
        let (it, sc) = algorithm.run(case, &opts);
        iterations += it as u64;
        calls += sc as u64;
    }
    if cases.is_empty() {
        return BenchRecord {
            algorithm,
            regime,
            vertex_count,
            mean_ns: 0.0,
            p50_ns: 0.0,
            p99_ns: 0.0,
            mean_iterations: 0.0,
            mean_support_calls: 0.0,
        };
    }
    for _ in 0..MIN_WARMUP {
        for case in cases {
            black_box(algorithm.run(case, &opts));
        }
    }
    let reps = repetitions.max(MIN_REPETITIONS);
    let mut samples = Vec::with_capacity(reps);
    for _ in 0..reps {
        let start = Instant::now();
        for case in cases {
            black_box(algorithm.run(case, &opts));
        }
        samples.push(start.elapsed().as_nanos() as f64 / cases.len() as f64);
    }
    let mean_ns = samples.iter().sum::<f64>() / samples.len() as f64;
    samples.sort_by(f64::total_cmp);
    let n = cases.len() as f64;
    BenchRecord {
        algorithm,
        regime,
        vertex_count,
        mean_ns,
        p50_ns: percentile(&samples, 50.0),
        p99_ns: percentile(&samples, 99.0),
        mean_iterations: iterations as f64 / n,
        mean_support_calls: calls as f64 / n,
    }
}

/// Benchmarks every (algorithm, regime) cell present in the dataset. Rows are
/// sorted by algorithm, then regime.
pub fn run_bench(
    dataset: &Dataset,
    algorithms: &[Algorithm],
    repetitions: usize,
) -> Vec<BenchRecord> {
    let mut algorithms = algorithms.to_vec();
    algorithms.sort();
    algorithms.dedup();
    let vertex_count = dataset.vertex_count().unwrap_or(0);
    let mut records = Vec::new();
    for &algorithm in &algorithms {
        for regime in Regime::ALL {
            let cases: Vec<&PairCase> = dataset.regime(regime).collect();
            if cases.is_empty() {
                continue;
            }
            records.push(bench_cell(
                algorithm,
                regime,
                vertex_count,
                &cases,
                repetitions,
            ));
        }
    }
    records
}

pub fn write_csv<W: Write>(mut out: W, records: &[BenchRecord]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(out, "{}", r.csv_row())?;
    }
    Ok(())
}

/// A gnuplot script drawing mean time per algorithm and regime from the CSV
/// written by [`write_csv`].
pub fn gnuplot_script(csv_path: &str) -> String {
    format!(
        r#"set datafile separator ","
set terminal pngcairo size 900,500
set output "{csv_path}.png"
set style data histograms
set style histogram clustered
set style fill solid 0.8
set ylabel "mean time per call (ns)"
set key top left
plot "{csv_path}" every ::1 using 4:xtic(stringcolumn(1)."/".stringcolumn(2)) title "mean_ns"
"#
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("Quickhull".parse::<Algorithm>().is_err());
    }

    #[test]
    fn percentile_nearest_rank() {
        let v: Vec<f64> = (1..=100).map(f64::from).collect();
        assert_eq!(percentile(&v, 50.0), 50.0);
        assert_eq!(percentile(&v, 99.0), 99.0);
        assert_eq!(percentile(&[3.0], 99.0), 3.0);
    }

    #[test]
    fn empty_dataset_yields_no_rows() {
        let rows = run_bench(&Dataset::default(), &Algorithm::ALL, 1);
        assert!(rows.is_empty());
        let mut out = Vec::new();
        write_csv(&mut out, &rows).unwrap();
        assert_eq!(String::from_utf8(out).unwrap().trim(), CSV_HEADER);
    }
}
