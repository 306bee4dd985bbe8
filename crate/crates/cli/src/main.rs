//! `qwalk`: run quantumness sweeps of discrete-time quantum walks and write
//! the per-step results as CSV.

mod angle;
mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use qwalk_core::harness::{self, PRESET_NAMES};

#[derive(Parser)]
#[command(name = "qwalk", version, about = "Quantum walk MID and discord sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one (theta, lambda) sweep.
    Run(RunArgs),
    /// Run the preset experiments behind one figure.
    Figure(FigureArgs),
}

#[derive(Args, Debug)]
pub struct RunArgs {
    /// TOML file with the same keys as the flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Experiment id written to every row.
    #[arg(long)]
    pub id: Option<String>,
    /// `line` or `cycle`.
    #[arg(long)]
    pub topology: Option<String>,
    /// Cycle length.
    #[arg(long)]
    pub n: Option<usize>,
    /// Half-width of the line; defaults to the step count.
    #[arg(long)]
    pub tmax: Option<usize>,
    /// Coin angle in radians, e.g. 0.3 or pi/4. Repeatable.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Vec<String>,
    /// Amplitude damping strength. Repeatable.
    #[arg(long)]
    pub lambda: Vec<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub record_every: Option<usize>,
    /// Output CSV; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
struct FigureArgs {
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(PRESET_NAMES))]
    name: String,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    /// Replace the preset coin angles.
    #[arg(long, allow_hyphen_values = true)]
    theta: Vec<String>,
    /// Replace the preset recording cadence.
    #[arg(long)]
    record_every: Option<usize>,
}

fn run(args: RunArgs) -> Result<()> {
    let file = match &args.config {
        Some(path) => config::RunFile::load(path)?,
        None => Default::default(),
    };
    let spec = config::build_spec(&args, file)?;
    let rows = harness::run(&spec)?;
    match &spec.output_path {
        Some(path) => {
            harness::write_csv_file(path, &rows)?;
            eprintln!("wrote {} rows to {}", rows.len(), path.display());
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            harness::write_csv(&mut lock, &rows)?;
            lock.flush()?;
        }
    }
    Ok(())
}

fn figure(args: FigureArgs) -> Result<()> {
    let thetas = args
        .theta
        .iter()
        .map(|t| angle::parse_angle(t))
        .collect::<Result<Vec<_>>>()?;
    for mut spec in harness::preset(&args.name)? {
        if !thetas.is_empty() {
            spec.thetas = thetas.clone();
        }
        if let Some(every) = args.record_every {
            spec.record_every = every;
        }
        let path = args.out_dir.join(format!("{}.csv", spec.id));
        spec.output_path = Some(path.clone());
        let rows = harness::run_to_file(&spec).with_context(|| format!("experiment {}", spec.id))?;
        eprintln!("wrote {} rows to {}", rows.len(), path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => run(args),
        Command::Figure(args) => figure(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
