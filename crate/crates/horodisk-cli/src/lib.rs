//! Command-line verification harness for the horodisk library.
//!
//! Three subcommands: `calibrate` measures the normalization constants and
//! certifies their stability, `verify SUITE` runs one verification suite or
//! the full battery, and `emit-plot WHAT` writes tabular views of the
//! central objects. Reports are byte-deterministic for a fixed
//! configuration; exit codes are 0 when every check passes, 1 when any
//! check fails, and 2 for configuration or tail-certificate errors.

pub mod calibrate;
pub mod config;
pub mod plots;
pub mod report;
pub mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use config::{ConfigError, OutputFormat, RunConfig, CONFIG_ENV_VAR};
use plots::PlotKind;
use report::VerificationReport;
use suites::{Suite, SuiteError};

#[derive(Parser)]
#[command(
    name = "horodisk",
    version,
    about = "Verification harness and plot emitter for the horodisk library",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Measure the normalization constants and their refinement stability.
    Calibrate {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run one verification suite, or the full battery with `all`.
    Verify {
        /// Suite to run.
        suite: Suite,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Write plot data for one precomputed view.
    EmitPlot {
        /// View to emit.
        what: PlotKind,
        #[command(flatten)]
        common: CommonArgs,
    },
}

/// Flags shared by every subcommand. Each mirrors a config file key with
/// the same spelling; flags override the file, the file overrides defaults.
#[derive(Args)]
struct CommonArgs {
    /// Config file path; the HORODISK_CONFIG environment variable is
    /// consulted when this flag is absent.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Seed for every randomized draw.
    #[arg(long, value_name = "N")]
    seed: Option<u64>,
    /// Boundary node count override.
    #[arg(long, value_name = "N")]
    grid_beta: Option<usize>,
    /// Height node count override.
    #[arg(long, value_name = "N")]
    grid_tau: Option<usize>,
    /// Frequency node count override.
    #[arg(long, value_name = "N")]
    grid_lambda: Option<usize>,
    /// Shear truncation window for the measure calibration.
    #[arg(long, value_name = "X")]
    shear_truncation: Option<f64>,
    /// Tolerance override for the structure suite's reassembly checks.
    #[arg(long, value_name = "X")]
    tol_structure: Option<f64>,
    /// Tolerance override for the geometry suite's distance checks.
    #[arg(long, value_name = "X")]
    tol_geometry: Option<f64>,
    /// Tolerance override for the slice suite's working resolution.
    #[arg(long, value_name = "X")]
    tol_slice: Option<f64>,
    /// Tolerance override for the Plancherel identity checks.
    #[arg(long, value_name = "X")]
    tol_plancherel: Option<f64>,
    /// Tolerance override for the unitarity norm checks.
    #[arg(long, value_name = "X")]
    tol_unitarity: Option<f64>,
    /// Tolerance override for the intertwining checks.
    #[arg(long, value_name = "X")]
    tol_intertwine: Option<f64>,
    /// Tolerance override for the evenness checks.
    #[arg(long, value_name = "X")]
    tol_properties: Option<f64>,
    /// Tolerance override for the positive-definite suite's residuals.
    #[arg(long, value_name = "X")]
    tol_spd: Option<f64>,
    /// Output path; reports print to stdout when absent.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Output encoding.
    #[arg(long, value_enum, value_name = "FORMAT")]
    format: Option<OutputFormat>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Suite(#[from] SuiteError),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
}

/// Layers defaults, config file and flags into the working configuration.
fn resolve(common: &CommonArgs) -> Result<RunConfig, ConfigError> {
    let mut cfg = RunConfig::default();
    let path = common
        .config
        .clone()
        .or_else(|| std::env::var_os(CONFIG_ENV_VAR).map(PathBuf::from));
    if let Some(path) = path {
        cfg.apply_file(&path)?;
    }
    if let Some(seed) = common.seed {
        cfg.seed = seed;
    }
    if common.grid_beta.is_some() {
        cfg.grid_beta = common.grid_beta;
    }
    if common.grid_tau.is_some() {
        cfg.grid_tau = common.grid_tau;
    }
    if common.grid_lambda.is_some() {
        cfg.grid_lambda = common.grid_lambda;
    }
    if let Some(value) = common.shear_truncation {
        cfg.shear_truncation = value;
    }
    if common.tol_structure.is_some() {
        cfg.tol_structure = common.tol_structure;
    }
    if common.tol_geometry.is_some() {
        cfg.tol_geometry = common.tol_geometry;
    }
    if common.tol_slice.is_some() {
        cfg.tol_slice = common.tol_slice;
    }
    if common.tol_plancherel.is_some() {
        cfg.tol_plancherel = common.tol_plancherel;
    }
    if common.tol_unitarity.is_some() {
        cfg.tol_unitarity = common.tol_unitarity;
    }
    if common.tol_intertwine.is_some() {
        cfg.tol_intertwine = common.tol_intertwine;
    }
    if common.tol_properties.is_some() {
        cfg.tol_properties = common.tol_properties;
    }
    if common.tol_spd.is_some() {
        cfg.tol_spd = common.tol_spd;
    }
    if common.out.is_some() {
        cfg.out = common.out.clone();
    }
    if let Some(format) = common.format {
        cfg.format = format;
    }
    Ok(cfg)
}

/// Writes the report to the configured destination and prints a one-line
/// summary per check on stderr, keeping stdout machine-clean.
fn deliver(report: &VerificationReport, cfg: &RunConfig) -> Result<(), CliError> {
    for check in &report.checks {
        let status = if check.pass { "  ok" } else { "FAIL" };
        eprintln!(
            "{status} {:<44} residual {:>12.3e}  tolerance {:>9.1e}",
            check.name, check.residual, check.tolerance
        );
    }
    eprintln!(
        "suite {}: {} checks, {} failed",
        report.suite,
        report.checks.len(),
        report.checks.iter().filter(|c| !c.pass).count()
    );
    let text = report.render(cfg.format);
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn execute(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Calibrate { common } => {
            let cfg = resolve(&common)?;
            let outcome = calibrate::run(&cfg)?;
            deliver(&outcome.report, &cfg)?;
            Ok(if outcome.tail_error {
                ExitCode::from(2)
            } else if outcome.report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Verify { suite, common } => {
            let cfg = resolve(&common)?;
            let report = suites::run_suite(suite, &cfg)?;
            deliver(&report, &cfg)?;
            Ok(if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::EmitPlot { what, common } => {
            let cfg = resolve(&common)?;
            let out = cfg
                .out
                .clone()
                .ok_or(ConfigError::MissingOut("emit-plot"))?;
            let data = plots::emit(what, &cfg)?;
            std::fs::write(&out, data.render(cfg.format)).map_err(|source| CliError::Write {
                path: out.clone(),
                source,
            })?;
            eprintln!("wrote {} rows to {}", data.rows.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
