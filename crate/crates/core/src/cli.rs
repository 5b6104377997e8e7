//! Subcommand implementations behind the `gjk2d` binary.
//!
//! Each command writes its report to the given writer and returns an
//! [`Outcome`]; the binary maps that to the process exit code (0 success,
//! 1 mismatch or validation failure, 2 usage error).

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde_json::json;
use thiserror::Error;

use crate::bench::{gnuplot_script, run_bench, write_csv, Algorithm};
use crate::check::check_dataset;
use crate::datasets::{generate_dataset, read_dataset, write_dataset, DatasetError, DatasetSpec};
use crate::geometry::ConvexPolygon;
use crate::gjk::{distance, intersects, QueryOptions};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Dataset(#[from] DatasetError),
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Failure,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::Failure => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryMode {
    Distance,
    Binary,
}

pub fn cmd_gen(
    spec: &DatasetSpec,
    out_path: &Path,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    if spec.vertex_count < 3 {
        return Err(CliError::Usage(format!(
            "--vertices must be at least 3, got {}",
            spec.vertex_count
        )));
    }
    if spec.cases_per_regime < 1 {
        return Err(CliError::Usage("--cases must be at least 1".into()));
    }
    let (dataset, report) = generate_dataset(spec)?;
    write_dataset(out_path, &dataset)?;
    writeln!(
        out,
        "wrote {} cases to {}",
        dataset.cases.len(),
        out_path.display()
    )?;
    writeln!(out, "distant: {}", report.distant)?;
    writeln!(
        out,
        "touching: {} ({} attempts, {} regenerated)",
        report.touching,
        report.touching_attempts,
        report.touching_regenerated.len()
    )?;
    for seed in &report.touching_regenerated {
        writeln!(out, "  regenerated touching case seed {seed}")?;
    }
    writeln!(out, "overlap: {}", report.overlap)?;
    Ok(Outcome::Success)
}

pub fn cmd_check(path: &Path, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let dataset = read_dataset(path)?;
    let report = check_dataset(&dataset);
    writeln!(out, "checked {} cases", report.total_cases())?;
    for (regime, r) in &report.regimes {
        writeln!(
            out,
            "{regime}: {} cases, {} pass, {} fail, worst abs error {:.3e}, touching binary mismatches {}",
            r.cases,
            r.cases - r.failing_seeds.len(),
            r.failing_seeds.len(),
            r.worst_abs_error,
            r.touching_binary_mismatches
        )?;
        if !r.passed() {
            writeln!(
                out,
                "  label {} distance {} binary {} separating-exit {} vertical-angle-exit {} work-bound {} descent {}",
                r.label_violations,
                r.distance_failures,
                r.binary_failures,
                r.separating_false_negatives,
                r.vertical_angle_false_positives,
                r.work_bound_violations,
                r.descent_violations
            )?;
        }
        for seed in &r.failing_seeds {
            writeln!(out, "  FAIL {regime} seed {seed}")?;
        }
    }
    Ok(if report.passed() {
        writeln!(out, "PASS")?;
        Outcome::Success
    } else {
        writeln!(out, "FAIL")?;
        Outcome::Failure
    })
}

/// Parses a comma-separated algorithm list; empty means all.
pub fn parse_algorithms(list: &str) -> Result<Vec<Algorithm>, CliError> {
    if list.trim().is_empty() {
        return Ok(Algorithm::ALL.to_vec());
    }
    list.split(',')
        .map(|s| s.trim().parse::<Algorithm>().map_err(CliError::Usage))
        .collect()
}

pub fn cmd_bench(
    path: &Path,
    algorithms: &[Algorithm],
    repetitions: usize,
    gnuplot: Option<&Path>,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let dataset = read_dataset(path)?;
    let records = run_bench(&dataset, algorithms, repetitions);
    write_csv(&mut *out, &records)?;
    if let Some(script) = gnuplot {
        // the script plots a copy of the CSV stored next to it
        let csv_path = script.with_extension("csv");
        let mut csv = Vec::new();
        write_csv(&mut csv, &records)?;
        fs::write(&csv_path, csv)?;
        fs::write(script, gnuplot_script(&csv_path.display().to_string()))?;
    }
    Ok(Outcome::Success)
}

fn read_polygon(path: &Path) -> Result<ConvexPolygon, CliError> {
    let input_err = |message: String| CliError::Input {
        path: path.display().to_string(),
        message,
    };
    let text = fs::read_to_string(path).map_err(|e| input_err(e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| input_err(e.to_string()))
}

pub fn cmd_query(
    p_path: &Path,
    q_path: &Path,
    mode: QueryMode,
    opts: &QueryOptions,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let p = read_polygon(p_path)?;
    let q = read_polygon(q_path)?;
    match mode {
        QueryMode::Distance => {
            let r = distance(&p, &q, opts);
            writeln!(out, "distance: {}", r.distance)?;
            writeln!(out, "witness p: ({}, {})", r.witness_p.x, r.witness_p.y)?;
            writeln!(out, "witness q: ({}, {})", r.witness_q.x, r.witness_q.y)?;
            writeln!(
                out,
                "iterations: {}, support calls: {}, termination: {:?}",
                r.iterations, r.support_calls, r.termination
            )?;
            let doc = json!({
                "distance": r.distance,
                "witness_p": [r.witness_p.x, r.witness_p.y],
                "witness_q": [r.witness_q.x, r.witness_q.y],
                "separating_vector": [r.separating_vector.x, r.separating_vector.y],
                "iterations": r.iterations,
                "support_calls": r.support_calls,
                "termination": format!("{:?}", r.termination),
            });
            writeln!(out, "{doc}")?;
        }
        QueryMode::Binary => {
            let r = intersects(&p, &q, opts);
            if r.colliding {
                writeln!(out, "collision ({:?})", r.exit)?;
            } else {
                writeln!(out, "no collision ({:?})", r.exit)?;
            }
            let doc = json!({
                "colliding": r.colliding,
                "exit": format!("{:?}", r.exit),
                "iterations": r.iterations,
                "support_calls": r.support_calls,
            });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(Outcome::Success)
}
