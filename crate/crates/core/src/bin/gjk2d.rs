use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gjk2d::cli::{self, CliError, QueryMode};
use gjk2d::datasets::DatasetSpec;
use gjk2d::QueryOptions;

#[derive(Parser)]
#[command(
    name = "gjk2d",
    version,
    about = "2D GJK distance and collision benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a distant/touching/overlap pair dataset
    Gen {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        vertices: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        cases: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Compare queries against the brute-force oracles
    Check { dataset: PathBuf },
    /// Time algorithms over a dataset and print CSV
    Bench {
        dataset: PathBuf,
        /// Comma-separated list; default is all algorithms
        #[arg(long, default_value = "")]
        algorithms: String,
        #[arg(long, default_value_t = 20)]
        repetitions: usize,
        /// Also write a gnuplot script for the CSV
        #[arg(long)]
        gnuplot: Option<PathBuf>,
    },
    /// Run one query on two polygon JSON files
    Query {
        p: PathBuf,
        q: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Distance)]
        mode: Mode,
        #[arg(long)]
        no_hill_climbing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Distance,
    Binary,
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<cli::Outcome, CliError> {
    match cli.command {
        Command::Gen {
            vertices,
            cases,
            seed,
            out: path,
        } => {
            let spec = DatasetSpec::new(vertices as usize, cases as usize, seed);
            cli::cmd_gen(&spec, &path, out)
        }
        Command::Check { dataset } => cli::cmd_check(&dataset, out),
        Command::Bench {
            dataset,
            algorithms,
            repetitions,
            gnuplot,
        } => {
            let algorithms = cli::parse_algorithms(&algorithms)?;
            cli::cmd_bench(&dataset, &algorithms, repetitions, gnuplot.as_deref(), out)
        }
        Command::Query {
            p,
            q,
            mode,
            no_hill_climbing,
        } => {
            let mode = match mode {
                Mode::Distance => QueryMode::Distance,
                Mode::Binary => QueryMode::Binary,
            };
            let opts = QueryOptions {
                use_hill_climbing: !no_hill_climbing,
                ..QueryOptions::default()
            };
            cli::cmd_query(&p, &q, mode, &opts, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli, &mut out) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            let _ = out.flush();
            eprintln!("gjk2d: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
