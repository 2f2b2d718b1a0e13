//! Unitarity suite: the unitarized operator preserves the calibrated norm
//! on a seeded family, and its defect shrinks when the height window and
//! the node counts are refined together.
//!
//! The refinement must widen the height window, not only tighten the
//! spacing: the unitarized tables decay only polynomially in height, so a
//! fixed window leaves a truncation floor that no amount of extra nodes
//! removes.

use horodisk::transforms::{
    radon_transform, unitarize, x_norm_sq, xi_norm_sq, TestFunction, TransformGrids,
};

use crate::config::RunConfig;
use crate::report::CheckRecord;
use crate::suites::{calibration_stanza, CalibrationCache, SuiteError, SuiteRun};

const SUITE: &str = "unitarity";
/// Relative defect of the norm ratio per function.
const NORM_TOL: f64 = 1e-3;
const BETA_DEFAULT: usize = 32;
const BUMPS: usize = 5;
/// Height half-width of the working grids.
const TAU_HALF_WIDTH: f64 = 8.0;
/// Frequency half-width of the working grids.
const LAMBDA_HALF_WIDTH: f64 = 24.0;

/// `|‖Qf‖ / ‖f‖ − 1|` on the given grids.
fn norm_defect(
    f: &TestFunction,
    grids: &TransformGrids,
    norms: &horodisk::transforms::MeasureNormalization,
) -> Result<f64, SuiteError> {
    let bundle = unitarize(&radon_transform(f, grids, norms)?, grids)?;
    let lhs = xi_norm_sq(&bundle, norms).sqrt();
    let rhs = (norms.kappa() * x_norm_sq(f, norms, grids)?).sqrt();
    Ok((lhs / rhs - 1.0).abs())
}

pub fn run(cfg: &RunConfig, cache: &mut CalibrationCache) -> Result<SuiteRun, SuiteError> {
    let tol = cfg.tol_unitarity.unwrap_or(NORM_TOL);
    let grids = cfg.transform_grids(BETA_DEFAULT)?;
    let norms = cache.full(cfg, &grids)?;
    // One refinement step: double the height window at constant spacing and
    // halve the frequency spacing at constant window.
    let beta = grids.beta().len();
    let wide = TransformGrids::with_windows(
        beta,
        2 * grids.tau().len(),
        2.0 * TAU_HALF_WIDTH,
        2 * grids.lambda().len(),
        LAMBDA_HALF_WIDTH,
    )?;
    let mut records = Vec::new();
    for f in TestFunction::seeded_family(cfg.seed, BUMPS) {
        let defect = norm_defect(&f, &grids, &norms)?;
        records.push(CheckRecord::new(
            SUITE,
            format!("unitarity-norm-{}", f.label()),
            "unitary-extension",
            defect,
            0.0,
            defect,
            tol,
        ));
    }
    // Monotonicity under refinement, measured on the calibration subject so
    // the comparison sees only the operator's own truncation error and not
    // the family's boundary-sampling noise, which is identical at both
    // resolutions. The residual is the refined defect minus the working
    // one, nonpositive exactly when refinement helped.
    let subject = TestFunction::reference_bump();
    let default_defect = norm_defect(&subject, &grids, &norms)?;
    let refined_defect = norm_defect(&subject, &wide, &norms)?;
    records.push(CheckRecord::new(
        SUITE,
        "unitarity-refinement-monotone",
        "unitary-extension",
        refined_defect,
        default_defect,
        refined_defect - default_defect,
        0.0,
    ));
    Ok(SuiteRun {
        environment: crate::suites::environment(cfg, &grids),
        calibration: calibration_stanza(&norms),
        records,
    })
}
