//! Plancherel suite: the multiplier-weighted frequency norm matches the
//! disk norm on functions the constant was never calibrated on, the
//! per-function constants agree with each other, and the meromorphic route
//! to the spectral density matches its closed form.
//!
//! The boundary average in the norm needs enough nodes to resolve the
//! angular oscillation of off-center functions; thirty-two resolve it to a
//! few parts in ten thousand, well under the identity tolerance.

use horodisk::transforms::{
    harish_chandra_c, plancherel_density, spectral_norm_sq, spectral_transform, SpectralWeight,
    TestFunction,
};

use crate::config::RunConfig;
use crate::report::CheckRecord;
use crate::suites::{calibration_stanza, CalibrationCache, SuiteError, SuiteRun};

const SUITE: &str = "plancherel";
/// Relative defect of the norm identity per function.
const IDENTITY_TOL: f64 = 1e-3;
/// Relative spread of the per-function norm constants.
const SPREAD_TOL: f64 = 1e-3;
/// Agreement of the two spectral density routes.
const DENSITY_TOL: f64 = 1e-9;
const BETA_DEFAULT: usize = 32;
const BUMPS: usize = 5;
/// Sweep for the density comparison.
const DENSITY_LO: f64 = 0.05;
const DENSITY_HI: f64 = 50.0;
const DENSITY_POINTS: usize = 2000;

/// Gamma-function route against the closed form of the spectral density,
/// swept over the working frequency range.
pub fn density_agreement_record() -> CheckRecord {
    let mut worst: f64 = 0.0;
    for k in 0..DENSITY_POINTS {
        let lambda =
            DENSITY_LO + (DENSITY_HI - DENSITY_LO) * k as f64 / (DENSITY_POINTS - 1) as f64;
        let c = harish_chandra_c(lambda).expect("sweep avoids the pole at zero");
        let gamma_route = 1.0 / c.norm_sqr();
        let closed = plancherel_density(lambda);
        worst = worst.max((gamma_route - closed).abs() / closed);
    }
    CheckRecord::new(
        SUITE,
        "plancherel-spectral-density",
        "spectral-density-closed-form",
        worst,
        0.0,
        worst,
        DENSITY_TOL,
    )
}

pub fn run(cfg: &RunConfig, cache: &mut CalibrationCache) -> Result<SuiteRun, SuiteError> {
    let tol = cfg.tol_plancherel.unwrap_or(IDENTITY_TOL);
    let grids = cfg.transform_grids(BETA_DEFAULT)?;
    let norms = cache.full(cfg, &grids)?;
    let mut records = vec![density_agreement_record()];
    let mut per_function = Vec::new();
    for f in TestFunction::seeded_family(cfg.seed, BUMPS) {
        let spectral = spectral_transform(&f, &grids, &norms)?;
        let lhs = spectral_norm_sq(&spectral, &norms, SpectralWeight::Multiplier);
        let rhs = horodisk::transforms::x_norm_sq(&f, &norms, &grids)?;
        let defect = (lhs / rhs - 1.0).abs();
        per_function.push(norms.kappa() * lhs / rhs);
        records.push(CheckRecord::new(
            SUITE,
            format!("plancherel-identity-{}", f.label()),
            "plancherel-identity",
            lhs,
            rhs,
            defect,
            tol,
        ));
    }
    let max = per_function.iter().cloned().fold(f64::MIN, f64::max);
    let min = per_function.iter().cloned().fold(f64::MAX, f64::min);
    let mean = per_function.iter().sum::<f64>() / per_function.len() as f64;
    let spread = (max - min) / mean;
    records.push(CheckRecord::new(
        SUITE,
        "plancherel-kappa-spread",
        "norm-constant-independence",
        max,
        min,
        spread,
        SPREAD_TOL,
    ));
    Ok(SuiteRun {
        environment: crate::suites::environment(cfg, &grids),
        calibration: calibration_stanza(&norms),
        records,
    })
}
