//! Verification suites, one per cluster of library guarantees.
//!
//! Every suite turns its identities into [`CheckRecord`]s; failures are
//! recorded, never thrown. Errors from this module mean the suite could not
//! run at all (bad grids, calibration breakdown) and map to the
//! configuration exit code.

pub mod geometry;
pub mod intertwine;
pub mod plancherel;
pub mod properties;
pub mod slice;
pub mod spd;
pub mod structure;
pub mod unitarity;

use clap::ValueEnum;
use horodisk::lie::LieError;
use horodisk::spd::SpdError;
use horodisk::transforms::{
    calibrate_height_scale, calibrate_shear_mass_with_truncation, spectral_norm_sq,
    spectral_transform, x_norm_sq, MeasureNormalization, SpectralWeight, TestFunction,
    TransformError, TransformGrids,
};
use thiserror::Error;

use crate::config::{RunConfig, DEFAULT_GRID_BETA};
use crate::report::{Calibration, CheckRecord, Environment, VerificationReport};

/// Which suite to run; `all` is the full battery.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Structure,
    Geometry,
    Slice,
    Plancherel,
    Unitarity,
    Intertwine,
    Properties,
    Spd,
    All,
}

impl Suite {
    pub const BATTERY: [Suite; 8] = [
        Suite::Structure,
        Suite::Geometry,
        Suite::Slice,
        Suite::Plancherel,
        Suite::Unitarity,
        Suite::Intertwine,
        Suite::Properties,
        Suite::Spd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Structure => "structure",
            Suite::Geometry => "geometry",
            Suite::Slice => "slice",
            Suite::Plancherel => "plancherel",
            Suite::Unitarity => "unitarity",
            Suite::Intertwine => "intertwine",
            Suite::Properties => "properties",
            Suite::Spd => "spd",
            Suite::All => "all",
        }
    }
}

/// Failure that prevents a suite from producing records at all.
#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Spd(#[from] SpdError),
}

impl From<horodisk::numerics::NumericsError> for SuiteError {
    fn from(err: horodisk::numerics::NumericsError) -> Self {
        Self::Transform(TransformError::from(err))
    }
}

/// Whether the error is the shear-tail certificate failing, which callers
/// surface as a failed record rather than a plain abort.
pub fn is_tail_error(err: &SuiteError) -> bool {
    matches!(
        err,
        SuiteError::Transform(TransformError::Numerics(
            horodisk::numerics::NumericsError::TailToleranceExceeded { .. }
        ))
    )
}

/// Records plus the environment and constants they were evaluated under.
pub struct SuiteRun {
    pub environment: Environment,
    pub calibration: Calibration,
    pub records: Vec<CheckRecord>,
}

pub fn environment(cfg: &RunConfig, grids: &TransformGrids) -> Environment {
    Environment {
        seed: cfg.seed,
        grid_beta: grids.beta().len(),
        grid_tau: grids.tau().len(),
        grid_lambda: grids.lambda().len(),
    }
}

pub fn calibration_stanza(norms: &MeasureNormalization) -> Calibration {
    Calibration {
        c_n: norms.c_n(),
        c_a: norms.c_a(),
        kappa: norms.kappa(),
    }
}

/// Shear and height constants at the configured truncation, with the
/// spectral norm constant left at one. Enough for every identity that never
/// compares disk norms against multiplier-weighted spectral norms.
pub fn base_normalization(cfg: &RunConfig) -> Result<MeasureNormalization, SuiteError> {
    let c_n = calibrate_shear_mass_with_truncation(cfg.shear_truncation)?;
    let c_a = calibrate_height_scale();
    Ok(MeasureNormalization::new(c_n, c_a, 1.0)?)
}

/// Full normalization including the spectral norm constant, measured on the
/// reference bump at the given grids.
pub fn full_normalization(
    cfg: &RunConfig,
    grids: &TransformGrids,
) -> Result<MeasureNormalization, SuiteError> {
    let partial = base_normalization(cfg)?;
    let bump = TestFunction::reference_bump();
    let spectral = spectral_transform(&bump, grids, &partial)?;
    let spectral_side = spectral_norm_sq(&spectral, &partial, SpectralWeight::Multiplier);
    let space_side = x_norm_sq(&bump, &partial, grids)?;
    Ok(MeasureNormalization::new(
        partial.c_n(),
        partial.c_a(),
        spectral_side / space_side,
    )?)
}

/// Memo for the full normalization, so the battery measures the spectral
/// constant once per distinct grid shape.
pub struct CalibrationCache {
    entries: Vec<((usize, usize, usize, u32), MeasureNormalization)>,
}

impl CalibrationCache {
    pub fn new() -> Self {
        Self {
            entries: Vec::new(),
        }
    }

    pub fn full(
        &mut self,
        cfg: &RunConfig,
        grids: &TransformGrids,
    ) -> Result<MeasureNormalization, SuiteError> {
        let key = (
            grids.beta().len(),
            grids.tau().len(),
            grids.lambda().len(),
            grids.refine_level(),
        );
        if let Some((_, norms)) = self.entries.iter().find(|(k, _)| *k == key) {
            return Ok(norms.clone());
        }
        let norms = full_normalization(cfg, grids)?;
        self.entries.push((key, norms.clone()));
        Ok(norms)
    }
}

impl Default for CalibrationCache {
    fn default() -> Self {
        Self::new()
    }
}

fn dispatch(
    suite: Suite,
    cfg: &RunConfig,
    cache: &mut CalibrationCache,
) -> Result<SuiteRun, SuiteError> {
    match suite {
        Suite::Structure => structure::run(cfg),
        Suite::Geometry => geometry::run(cfg),
        Suite::Slice => slice::run(cfg),
        Suite::Plancherel => plancherel::run(cfg, cache),
        Suite::Unitarity => unitarity::run(cfg, cache),
        Suite::Intertwine => intertwine::run(cfg),
        Suite::Properties => properties::run(cfg),
        Suite::Spd => spd::run(cfg),
        Suite::All => unreachable!("the battery is expanded by run_suite"),
    }
}

/// Runs one suite, or the whole battery for [`Suite::All`], and assembles
/// the report.
pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<VerificationReport, SuiteError> {
    let mut cache = CalibrationCache::new();
    match suite {
        Suite::All => {
            let mut records = Vec::new();
            let mut calibration = None;
            for member in Suite::BATTERY {
                let run = dispatch(member, cfg, &mut cache)?;
                records.extend(run.records);
                // The battery-level stanza shows the measured constants; the
                // first suite that calibrates the spectral norm provides them.
                if calibration.is_none() && run.calibration.kappa != 1.0 {
                    calibration = Some(run.calibration);
                }
            }
            let environment = Environment {
                seed: cfg.seed,
                grid_beta: cfg.resolved_beta(DEFAULT_GRID_BETA),
                grid_tau: cfg.resolved_tau(),
                grid_lambda: cfg.resolved_lambda(),
            };
            let calibration = match calibration {
                Some(c) => c,
                None => calibration_stanza(&base_normalization(cfg)?),
            };
            Ok(VerificationReport::assemble(
                Suite::All.name(),
                environment,
                calibration,
                records,
            ))
        }
        one => {
            let run = dispatch(one, cfg, &mut cache)?;
            Ok(VerificationReport::assemble(
                one.name(),
                run.environment,
                run.calibration,
                run.records,
            ))
        }
    }
}
