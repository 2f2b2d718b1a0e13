//! Slice suite: the frequency table of a function equals the height
//! Fourier transform of its weighted horocycle table, at the working
//! resolution and again at doubled resolution.
//!
//! The identity is independent of the boundary direction, row by row, so
//! the working boundary count stays small and the budget goes into height
//! and frequency resolution.

use horodisk::transforms::{
    radon_transform, spectral_from_radon, spectral_norm_sq, spectral_transform,
    MeasureNormalization, SpectralFunction, SpectralWeight, TestFunction,
};

use crate::config::RunConfig;
use crate::report::CheckRecord;
use crate::suites::{base_normalization, calibration_stanza, SuiteError, SuiteRun};

const SUITE: &str = "slice";
/// Relative table distance at the working resolution.
const DEFAULT_TOL: f64 = 1e-3;
/// Tightening factor after one refinement step.
const REFINED_FACTOR: f64 = 0.1;
/// Boundary rows; the identity is per-row, so few are needed.
const BETA_DEFAULT: usize = 16;
const BUMPS: usize = 5;

/// Relative frequency-side distance between two tables on the same grids.
/// The overall measure constants cancel in the ratio.
fn relative_distance(
    direct: &SpectralFunction,
    via: &SpectralFunction,
    norms: &MeasureNormalization,
) -> f64 {
    let rows = direct
        .rows()
        .iter()
        .zip(via.rows())
        .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
        .collect();
    let diff = SpectralFunction::new(*direct.beta_grid(), direct.lambda_grid().clone(), rows)
        .expect("grids match by construction");
    let num = spectral_norm_sq(&diff, norms, SpectralWeight::Plain);
    let den = spectral_norm_sq(direct, norms, SpectralWeight::Plain);
    (num / den).sqrt()
}

pub fn run(cfg: &RunConfig) -> Result<SuiteRun, SuiteError> {
    let tol = cfg.tol_slice.unwrap_or(DEFAULT_TOL);
    let norms = base_normalization(cfg)?;
    let grids = cfg.transform_grids(BETA_DEFAULT)?;
    let refined = grids.refined();
    let mut records = Vec::new();
    for f in TestFunction::seeded_family(cfg.seed, BUMPS) {
        for (grid, suffix, bound) in [(&grids, "", tol), (&refined, "-refined", tol * REFINED_FACTOR)]
        {
            let direct = spectral_transform(&f, grid, &norms)?;
            let via = spectral_from_radon(&radon_transform(&f, grid, &norms)?, grid, &norms)?;
            let distance = relative_distance(&direct, &via, &norms);
            records.push(CheckRecord::new(
                SUITE,
                format!("slice-identity{}-{}", suffix, f.label()),
                "fourier-slice-identity",
                distance,
                0.0,
                distance,
                bound,
            ));
        }
    }
    Ok(SuiteRun {
        environment: crate::suites::environment(cfg, &grids),
        calibration: calibration_stanza(&norms),
        records,
    })
}
