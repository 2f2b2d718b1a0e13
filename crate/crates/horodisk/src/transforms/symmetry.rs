//! The symmetry characterizing the range of the transforms.
//!
//! A frequency table lies in the range of the boundary transform exactly
//! when its boundary average against the height kernel,
//!
//! ```text
//! I(x, λ) = (1/n_β) Σ_j e^{(1+iλ) A(x, β_j)} S(β_j, λ),
//! ```
//!
//! is an even function of `λ` at every disk point `x`. Genuine transforms
//! pass because the average collapses to a spherical-type function of the
//! single variable `λ²`; an arbitrary table fails. The defect reported
//! here is the worst relative odd part over a fixed probe set, and the
//! horocycle-side defect is the same quantity after the slice route to the
//! frequency picture.

use num_complex::Complex64;

use super::grids::{HorocycleFunction, SpectralFunction, TransformGrids};
use super::measures::MeasureNormalization;
use super::operators::spectral_from_radon;
use super::TransformError;
use crate::disk::{composite_distance_to_origin, point_from_na, BoundaryPoint, DiskPoint};

/// Worst-case odd part of the boundary averages over a probe set.
#[derive(Debug, Clone)]
pub struct RangeDefect {
    per_probe: Vec<f64>,
}

impl RangeDefect {
    /// Largest relative odd part across the probes.
    pub fn worst(&self) -> f64 {
        self.per_probe.iter().copied().fold(0.0, f64::max)
    }

    /// Relative odd part at each probe, in probe order.
    pub fn per_probe(&self) -> &[f64] {
        &self.per_probe
    }
}

/// The origin and four fixed generic points, spread across quadrants and
/// depths so a symmetry failure cannot hide in a special position.
pub fn default_probes() -> Vec<DiskPoint> {
    vec![
        DiskPoint::origin(),
        point_from_na(0.35, 0.2),
        point_from_na(-0.5, -0.35),
        point_from_na(0.8, -0.6),
        point_from_na(-0.15, 0.55),
    ]
}

/// Relative odd part of the boundary average of a frequency table at each
/// probe.
pub fn spectral_range_defect(table: &SpectralFunction, probes: &[DiskPoint]) -> RangeDefect {
    let beta = table.beta_grid();
    let lambda = table.lambda_grid();
    let n_lambda = lambda.len();
    let boundary_weight = 1.0 / beta.len() as f64;
    let per_probe = probes
        .iter()
        .map(|probe| {
            let heights: Vec<f64> = (0..beta.len())
                .map(|j| composite_distance_to_origin(probe, &BoundaryPoint::new(beta.node(j))))
                .collect();
            let averages: Vec<Complex64> = (0..n_lambda)
                .map(|k| {
                    let lam = lambda.node(k);
                    let mut sum = Complex64::new(0.0, 0.0);
                    for (j, &height) in heights.iter().enumerate() {
                        sum += table.value(j, k) * Complex64::from_polar(height.exp(), lam * height);
                    }
                    sum * boundary_weight
                })
                .collect();
            let mut odd = 0.0;
            let mut full = 0.0;
            for k in 0..n_lambda {
                let mirrored = averages[n_lambda - 1 - k];
                odd += (averages[k] - mirrored).norm_sqr();
                full += averages[k].norm_sqr();
            }
            if full == 0.0 {
                0.0
            } else {
                (odd / full).sqrt()
            }
        })
        .collect();
    RangeDefect { per_probe }
}

/// Range defect of a horocycle table: the slice route carries it to the
/// frequency picture, where the same evenness must hold.
pub fn horocycle_range_defect(
    table: &HorocycleFunction,
    grids: &TransformGrids,
    norms: &MeasureNormalization,
    probes: &[DiskPoint],
) -> Result<RangeDefect, TransformError> {
    let spectral = spectral_from_radon(table, grids, norms)?;
    Ok(spectral_range_defect(&spectral, probes))
}
