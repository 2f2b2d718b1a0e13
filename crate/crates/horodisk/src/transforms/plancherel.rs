//! Norms and pairings on the three sides of the transform stack.
//!
//! The disk carries the invariant measure `c_n c_a e^{-2t} ds dt`, the
//! horocycle bundle the weighted product `dν(β) × c_a e^{2τ} dτ` with `ν`
//! the unit boundary measure, and the frequency side the density
//! `c_λ m(λ)² dλ` divided by the measured constant `kappa`. With the
//! calibrated constants the multiplier-weighted frequency norm of a
//! transform equals the disk norm of the function.
//!
//! Disk-side integrals run over the support box of the first argument;
//! frames are removed by moving the integration variable, which the
//! invariant measure permits without a Jacobian.

use num_complex::Complex64;

use super::cfun::multiplier;
use super::grids::{HorocycleFunction, SpectralFunction, TransformGrids};
use super::measures::MeasureNormalization;
use super::test_function::TestFunction;
use super::TransformError;
use crate::disk::{mobius, na_coordinates, point_from_na};

/// Shear node count of the disk-norm grid, before oversampling. Sized so
/// that profiles near the narrowest admitted width stay resolved even after
/// composition with the moderate frames the verification suites use.
const NORM_S_NODES: usize = 768;
/// Height node count of the disk-norm grid, before oversampling.
const NORM_T_NODES: usize = 512;

/// Frequency weighting of the spectral norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralWeight {
    /// Flat weight `c_λ dλ`.
    Plain,
    /// Plancherel weight `c_λ m(λ)² dλ / kappa`, the one that matches disk
    /// norms.
    Multiplier,
}

/// Squared disk norm `∫ |f|² dx`, computed over the support box of the
/// body profile. Frames drop out because the measure is invariant.
pub fn x_norm_sq(
    f: &TestFunction,
    norms: &MeasureNormalization,
    grids: &TransformGrids,
) -> Result<f64, TransformError> {
    f.fits_internal_grids()?;
    let oversample = grids.oversample();
    let n_s = (NORM_S_NODES as f64 * oversample) as usize;
    let n_t = (NORM_T_NODES as f64 * oversample) as usize;
    let h_s = 2.0 * f.s_box() / n_s as f64;
    let h_t = 2.0 * f.t_box() / n_t as f64;
    let mut total = 0.0;
    for i_t in 0..n_t {
        let t = -f.t_box() + (i_t as f64 + 0.5) * h_t;
        let weight = (-2.0 * t).exp() * h_s * h_t;
        let mut row = 0.0;
        for i_s in 0..n_s {
            let s = -f.s_box() + (i_s as f64 + 0.5) * h_s;
            let value = f.eval_na(s, t);
            row += value * value;
        }
        total += weight * row;
    }
    Ok(total * norms.c_n() * norms.c_a())
}

/// Disk pairing `∫ f g dx` for two real test functions with possibly
/// different frames. The integral runs over the box of `f` in its body
/// coordinates; the body of `g` is read through the relative isometry.
pub fn x_inner_product(
    f: &TestFunction,
    g: &TestFunction,
    norms: &MeasureNormalization,
    grids: &TransformGrids,
) -> Result<f64, TransformError> {
    f.fits_internal_grids()?;
    let relative = *g.frame_inverse() * *f.frame();
    let oversample = grids.oversample();
    let n_s = (NORM_S_NODES as f64 * oversample) as usize;
    let n_t = (NORM_T_NODES as f64 * oversample) as usize;
    let h_s = 2.0 * f.s_box() / n_s as f64;
    let h_t = 2.0 * f.t_box() / n_t as f64;
    let mut total = 0.0;
    for i_t in 0..n_t {
        let t = -f.t_box() + (i_t as f64 + 0.5) * h_t;
        let weight = (-2.0 * t).exp() * h_s * h_t;
        let mut row = 0.0;
        for i_s in 0..n_s {
            let s = -f.s_box() + (i_s as f64 + 0.5) * h_s;
            let value = f.eval_na(s, t);
            if value == 0.0 {
                continue;
            }
            let moved = mobius(&relative, &point_from_na(s, t));
            let (ms, mt) = na_coordinates(&moved);
            row += value * g.eval_na(ms, mt);
        }
        total += weight * row;
    }
    Ok(total * norms.c_n() * norms.c_a())
}

/// Squared norm on the horocycle bundle: boundary average of the height
/// integrals against `c_a e^{2τ} dτ`.
pub fn xi_norm_sq(table: &HorocycleFunction, norms: &MeasureNormalization) -> f64 {
    let tau = table.tau_grid();
    let boundary_weight = 1.0 / table.beta_grid().len() as f64;
    let mut total = 0.0;
    for row in table.rows() {
        for (k, value) in row.iter().enumerate() {
            total += value.norm_sqr() * (2.0 * tau.node(k)).exp() * tau.weight(k);
        }
    }
    total * boundary_weight * norms.c_a()
}

/// Squared norm on the frequency side under the chosen weight.
pub fn spectral_norm_sq(
    table: &SpectralFunction,
    norms: &MeasureNormalization,
    weight: SpectralWeight,
) -> f64 {
    let lambda = table.lambda_grid();
    let boundary_weight = 1.0 / table.beta_grid().len() as f64;
    let mut total = 0.0;
    for row in table.rows() {
        for (k, value) in row.iter().enumerate() {
            let w = match weight {
                SpectralWeight::Plain => 1.0,
                SpectralWeight::Multiplier => {
                    let m = multiplier(lambda.node(k));
                    m * m
                }
            };
            total += value.norm_sqr() * w * lambda.weight(k);
        }
    }
    let kappa = match weight {
        SpectralWeight::Plain => 1.0,
        SpectralWeight::Multiplier => norms.kappa(),
    };
    total * boundary_weight * norms.c_lambda() / kappa
}

/// Plancherel pairing of two frequency tables, the polarization of the
/// multiplier-weighted norm.
pub fn spectral_pairing(
    first: &SpectralFunction,
    second: &SpectralFunction,
    norms: &MeasureNormalization,
) -> Result<Complex64, TransformError> {
    if first.beta_grid().len() != second.beta_grid().len()
        || first.lambda_grid().len() != second.lambda_grid().len()
    {
        return Err(TransformError::InvalidSpec(
            "spectral pairing needs matching grids".into(),
        ));
    }
    let lambda = first.lambda_grid();
    let boundary_weight = 1.0 / first.beta_grid().len() as f64;
    let mut total = Complex64::new(0.0, 0.0);
    for (row_a, row_b) in first.rows().iter().zip(second.rows()) {
        for (k, (a, b)) in row_a.iter().zip(row_b).enumerate() {
            let m = multiplier(lambda.node(k));
            total += a * b.conj() * m * m * lambda.weight(k);
        }
    }
    Ok(total * boundary_weight * norms.c_lambda() / norms.kappa())
}
