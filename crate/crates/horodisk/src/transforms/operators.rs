//! Operators moving tables between the horocycle and frequency pictures.
//!
//! The frequency transform of a test function factors through the
//! horocycle picture: weight a horocycle table by `c_a e^{τ}` and take the
//! height Fourier transform, and the result matches the direct double
//! integral row by row. The unitarized transform conjugates the frequency
//! multiplier `m(λ)` by the same weighting,
//!
//! ```text
//! Q = e^{-τ} ∘ ℱ⁻¹ ∘ m(λ) ∘ ℱ ∘ e^{τ},
//! ```
//!
//! and carries the invariant disk norm to the weighted bundle norm up to
//! the measured constant.
//!
//! Isometries act on the bundle by relabeling alone: `g` sends the row at
//! angle `β` to the pulled-back angle `g⁻¹⟨β⟩` with all heights shifted by
//! the horocycle height of `g⁻¹` at that angle. [`pullback_relabels`]
//! tabulates the relabeling over a boundary grid and
//! [`unitarize_pullback`] evaluates a relabeled unitarized transform on the
//! standard grid, reading off-grid heights through the frequency side.

use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::TAU;

use super::cfun::multiplier;
use super::grids::{HorocycleFunction, SpectralFunction, TransformGrids};
use super::measures::MeasureNormalization;
use super::radon::radon_row;
use super::test_function::TestFunction;
use super::TransformError;
use crate::disk::{boundary_action, composite_distance_to_origin, mobius, BoundaryPoint, DiskPoint};
use crate::lie::SU11Element;
use crate::numerics::PeriodicGrid;

fn check_table_grids(
    table: &HorocycleFunction,
    grids: &TransformGrids,
) -> Result<(), TransformError> {
    let tau_matches = table.tau_grid().len() == grids.tau().len()
        && table.tau_grid().lo() == grids.tau().lo()
        && table.tau_grid().hi() == grids.tau().hi();
    if !tau_matches || table.beta_grid().len() != grids.beta().len() {
        return Err(TransformError::InvalidSpec(
            "table grids do not match the working grids".into(),
        ));
    }
    Ok(())
}

/// The height weighting `c_a e^{τ}` that turns horocycle averages into the
/// line picture behind the slice identity.
pub fn abel_normalize(table: &HorocycleFunction, norms: &MeasureNormalization) -> HorocycleFunction {
    let c_a = norms.c_a();
    table.map_height(|tau, value| value * c_a * tau.exp())
}

/// Frequency table of a horocycle table: the slice route through weighting
/// and the height Fourier transform.
pub fn spectral_from_radon(
    table: &HorocycleFunction,
    grids: &TransformGrids,
    norms: &MeasureNormalization,
) -> Result<SpectralFunction, TransformError> {
    check_table_grids(table, grids)?;
    let dft = grids.dft();
    let weighted = abel_normalize(table, norms);
    let rows = weighted.rows().iter().map(|row| dft.forward(row)).collect();
    SpectralFunction::new(*grids.beta(), grids.lambda().clone(), rows)
}

/// The unitarized transform of a horocycle table.
pub fn unitarize(
    table: &HorocycleFunction,
    grids: &TransformGrids,
) -> Result<HorocycleFunction, TransformError> {
    check_table_grids(table, grids)?;
    let dft = grids.dft();
    let lambda = grids.lambda();
    let lifted = table.map_height(|tau, value| value * tau.exp());
    let rows = lifted
        .rows()
        .iter()
        .map(|row| {
            let mut spectrum = dft.forward(row);
            for (k, slot) in spectrum.iter_mut().enumerate() {
                *slot *= multiplier(lambda.node(k));
            }
            dft.inverse(&spectrum)
        })
        .collect();
    let unlifted = HorocycleFunction::new(*grids.beta(), grids.tau().clone(), rows)?;
    Ok(unlifted.map_height(|tau, value| value * (-tau).exp()))
}

/// The boundary relabeling of `g` over a grid: at each angle, the
/// pulled-back angle `g⁻¹⟨β⟩` and the height shift picked up there.
pub fn pullback_relabels(g: &SU11Element, beta: &PeriodicGrid) -> Vec<(BoundaryPoint, f64)> {
    let inverse = g.inverse();
    let base = mobius(&inverse, &DiskPoint::origin());
    (0..beta.len())
        .map(|j| {
            let pulled = boundary_action(&inverse, &BoundaryPoint::new(beta.node(j)));
            let shift = composite_distance_to_origin(&base, &pulled);
            (pulled, shift)
        })
        .collect()
}

/// The unitarized transform of `f` relabeled by `g`, on the standard grid:
/// row `j` holds `(Q f)(g⁻¹⟨β_j⟩, τ_k + shift_j)`. Shifted heights fall off
/// the grid, so rows are evaluated through the frequency side.
pub fn unitarize_pullback(
    f: &TestFunction,
    g: &SU11Element,
    grids: &TransformGrids,
    norms: &MeasureNormalization,
) -> Result<HorocycleFunction, TransformError> {
    let dft = grids.dft();
    let tau = grids.tau();
    let lambda = grids.lambda();
    let relabels = pullback_relabels(g, grids.beta());
    let rows: Vec<Vec<Complex64>> = relabels
        .into_par_iter()
        .map(|(pulled, shift)| {
            let raw = radon_row(f, pulled.angle(), tau, norms);
            let lifted: Vec<Complex64> = raw
                .iter()
                .enumerate()
                .map(|(k, &v)| Complex64::new(v * tau.node(k).exp(), 0.0))
                .collect();
            let mut spectrum = dft.forward(&lifted);
            for (k, slot) in spectrum.iter_mut().enumerate() {
                *slot *= multiplier(lambda.node(k));
            }
            let scale = lambda.spacing() / TAU;
            (0..tau.len())
                .map(|k| {
                    let target = tau.node(k) + shift;
                    let sum: Complex64 = spectrum
                        .iter()
                        .enumerate()
                        .map(|(j, &value)| value * Complex64::cis(lambda.node(j) * target))
                        .sum();
                    sum * scale * (-target).exp()
                })
                .collect()
        })
        .collect();
    HorocycleFunction::new(*grids.beta(), tau.clone(), rows)
}
