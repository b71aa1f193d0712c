//! Thin command-line front end; all logic lives in the library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hardcut::harness::{self, CertifyMode, MincutMethod, ScalingConfig};
use hardcut::{Multigraph, DEFAULT_EPSILON};

#[derive(Parser)]
#[command(name = "hardcut", version, about = "Expander handlebodies and their balanced cut costs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Spectral,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Exact,
    Sweep,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded d-regular graph.
    Generate {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify the edge expansion of a graph file.
    Certify {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
    },
    /// Search for a minimum-area volume-balanced cut.
    Mincut {
        graph: PathBuf,
        /// Scale parameter of the handlebody.
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        eps: f64,
        #[arg(long, value_enum, default_value_t = MethodArg::Random)]
        method: MethodArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        restarts: usize,
        /// Treat the model as one half of the doubled sphere.
        #[arg(long)]
        sphere: bool,
    },
    /// Best-cut area versus scale, as CSV rows plus a slope summary.
    Scaling {
        /// Comma-separated even scales, e.g. 2,4,6,8.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u32>,
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        eps: f64,
        /// Number of seeds per scale; seeds run 0..count.
        #[arg(long, default_value_t = 5)]
        seeds: u64,
        #[arg(long, default_value_t = 50)]
        restarts: usize,
        #[arg(long)]
        sphere: bool,
        /// CSV output path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Closed-form quantities and the constant-chain report.
    Formulas {
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        eps: f64,
    },
}

fn read_graph(path: &PathBuf) -> hardcut::Result<Multigraph> {
    Multigraph::from_text(&std::fs::read_to_string(path)?)
}

fn run(cli: Cli) -> hardcut::Result<()> {
    match cli.command {
        Command::Generate { m, d, seed, out } => {
            let text = harness::generate_text(m, d, seed)?;
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
        }
        Command::Certify { graph, mode } => {
            let g = read_graph(&graph)?;
            let mode = match mode {
                ModeArg::Exact => CertifyMode::Exact,
                ModeArg::Spectral => CertifyMode::Spectral,
            };
            print!("{}", harness::certify_report(&g, mode)?);
        }
        Command::Mincut { graph, n, eps, method, seed, restarts, sphere } => {
            let g = read_graph(&graph)?;
            let method = match method {
                MethodArg::Exact => MincutMethod::Exact,
                MethodArg::Sweep => MincutMethod::Sweep,
                MethodArg::Random => MincutMethod::Random,
            };
            print!("{}", harness::mincut_report(&g, n, eps, method, seed, restarts, sphere)?);
        }
        Command::Scaling { n, eps, seeds, restarts, sphere, out } => {
            let cfg = ScalingConfig {
                n_values: n,
                eps,
                seed_count: seeds,
                restarts,
                sphere,
            };
            let outcome = harness::run_scaling(&cfg)?;
            std::fs::write(out, &outcome.csv)?;
            print!("{}", outcome.summary);
            if let Some(failed) = outcome.records.iter().find(|r| r.error.is_some()) {
                return Err(hardcut::Error::InvalidArgument(format!(
                    "row n={} seed={} failed: {}",
                    failed.n,
                    failed.seed,
                    failed.error.clone().unwrap_or_default()
                )));
            }
        }
        Command::Formulas { n, eps } => {
            print!("{}", harness::formulas_report(n, eps)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {} ({})", e, e.token());
            ExitCode::FAILURE
        }
    }
}
