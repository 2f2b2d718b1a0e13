//! The meromorphic intertwining density, its absolute-square weight and the
//! unitarizing multiplier.
//!
//! ```text
//! c(λ)      = Γ(iλ/2) / (√π · Γ((iλ + 1)/2))
//! |c(λ)|⁻²  = (πλ/2) · tanh(πλ/2)
//! m(λ)      = 1 / (√2 |c(λ)|) = sqrt((πλ/4) · tanh(πλ/2))
//! ```
//!
//! The closed form for `|c(λ)|⁻²` follows from `|Γ(iy)|² = π / (y sinh πy)`
//! and `|Γ(1/2 + iy)|² = π / cosh(πy)`; the gamma-quotient route and the
//! closed form are kept as independent evaluations so each checks the other.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::TransformError;
use crate::numerics::complex_gamma;

/// The meromorphic density `c(λ)`. Real `λ = 0` is a pole of the numerator,
/// reported as [`TransformError::PoleAtZero`].
pub fn harish_chandra_c(lambda: f64) -> Result<Complex64, TransformError> {
    if lambda == 0.0 {
        return Err(TransformError::PoleAtZero);
    }
    let numerator = complex_gamma(Complex64::new(0.0, lambda / 2.0))?;
    let denominator = complex_gamma(Complex64::new(0.5, lambda / 2.0))?;
    Ok(numerator / denominator / PI.sqrt())
}

/// The absolute-square weight `|c(λ)|⁻²` in closed form. Even, nonnegative
/// and quadratic near zero, so the pole of `c` itself is invisible here.
pub fn plancherel_density(lambda: f64) -> f64 {
    let half = 0.5 * PI * lambda;
    half * half.tanh()
}

/// The unitarizing multiplier `m(λ) = 1/(√2 |c(λ)|)`. Even, vanishing
/// linearly at zero.
pub fn multiplier(lambda: f64) -> f64 {
    (plancherel_density(lambda) / 2.0).sqrt()
}
