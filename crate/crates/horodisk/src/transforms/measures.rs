//! Normalization constants for the measures behind the transform stack.
//!
//! Three constants tie the pictures together:
//!
//! * `c_n` scales the shear-direction measure `c_n ds` so that the boundary
//!   density seen from the origin has total mass one.
//! * `c_a` scales the height-direction measure `c_a dt` to the length
//!   normalization induced by the trace form of the isometry algebra.
//! * `kappa` is the measured constant in the spectral norm identity; with
//!   the two scales above it comes out at one up to quadrature error.
//!
//! [`MeasureNormalization::reference`] holds the closed-form values; the
//! `calibrate_*` routines re-derive each constant from scratch and are what
//! the verification harness actually runs.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::grids::TransformGrids;
use super::plancherel::{spectral_norm_sq, x_norm_sq, SpectralWeight};
use super::spectral::spectral_transform;
use super::test_function::TestFunction;
use super::TransformError;
use crate::lie::{iwasawa_kan_su11, SU11Element};
use crate::numerics::{integrate_panels, NumericsError, PanelRule, QuadRule};

/// Shear truncation radius for the mass calibration. The raw integrand at
/// this radius sits just below the tail tolerance, so the truncated integral
/// carries a quantified bias of about 4.5e-6 relative.
pub const SHEAR_TRUNCATION: f64 = 7e4;
/// Tail tolerance for the shear mass integrand.
pub const SHEAR_TAIL_TOLERANCE: f64 = 1e-10;
/// Two-resolution agreement demanded of the calibration quadrature.
const SHEAR_AGREEMENT: f64 = 1e-8;

/// The three measured constants. Immutable once built; the derived
/// frequency weight `c_lambda` is exposed alongside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureNormalization {
    c_n: f64,
    c_a: f64,
    kappa: f64,
}

impl MeasureNormalization {
    pub fn new(c_n: f64, c_a: f64, kappa: f64) -> Result<Self, TransformError> {
        if !(c_n > 0.0 && c_a > 0.0 && kappa > 0.0) {
            return Err(TransformError::InvalidSpec(format!(
                "normalization constants ({c_n}, {c_a}, {kappa}) must be positive"
            )));
        }
        Ok(Self { c_n, c_a, kappa })
    }

    /// Closed-form values: `c_n = 2/π`, `c_a = 2/√π`, `kappa = 1`.
    pub fn reference() -> Self {
        Self {
            c_n: 2.0 / PI,
            c_a: 2.0 / PI.sqrt(),
            kappa: 1.0,
        }
    }

    pub fn c_n(&self) -> f64 {
        self.c_n
    }

    pub fn c_a(&self) -> f64 {
        self.c_a
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// Frequency measure weight `1 / (2π c_a)`.
    pub fn c_lambda(&self) -> f64 {
        1.0 / (2.0 * PI * self.c_a)
    }
}

/// Measures `c_n` as the reciprocal mass of the shear-direction boundary
/// density `e^{-2 t_{kan}(Θ(n_s))}`, evaluated group-theoretically.
///
/// The heavy `1/(1+4s²)` tail forces a wide truncation; the integral is
/// computed after the substitution `s = tan(u)/2`, under which the integrand
/// flattens to one half and a modest Gauss grid reaches machine accuracy.
pub fn calibrate_shear_mass() -> Result<f64, TransformError> {
    calibrate_shear_mass_with_truncation(SHEAR_TRUNCATION)
}

pub fn calibrate_shear_mass_with_truncation(truncation: f64) -> Result<f64, TransformError> {
    if !(truncation > 1.0) {
        return Err(TransformError::InvalidSpec(format!(
            "shear truncation {truncation} must exceed 1"
        )));
    }
    let raw = |s: f64| {
        let reflected = SU11Element::shear(s).cartan_involution();
        (-2.0 * iwasawa_kan_su11(&reflected).t).exp()
    };
    for endpoint in [-truncation, truncation] {
        let magnitude = raw(endpoint);
        if magnitude > SHEAR_TAIL_TOLERANCE {
            return Err(TransformError::Numerics(
                NumericsError::TailToleranceExceeded {
                    truncation,
                    magnitude,
                    tolerance: SHEAR_TAIL_TOLERANCE,
                },
            ));
        }
    }
    let u_edge = (2.0 * truncation).atan();
    let substituted = |u: f64| {
        let tan = u.tan();
        Complex64::new(raw(tan / 2.0) * (1.0 + tan * tan) / 2.0, 0.0)
    };
    let rule = PanelRule::new(QuadRule::GaussLegendre, 12);
    let coarse = integrate_panels(&rule, -u_edge, u_edge, 64, substituted).re;
    let fine = integrate_panels(&rule, -u_edge, u_edge, 128, substituted).re;
    if (coarse - fine).abs() > SHEAR_AGREEMENT * fine.abs() {
        return Err(TransformError::QuadratureUnderresolved(format!(
            "shear mass disagrees across resolutions: {coarse:.12e} vs {fine:.12e}"
        )));
    }
    Ok(1.0 / fine)
}

/// Measures `c_a` from the trace form of the isometry algebra: with `H` the
/// unit boost generator, `c_a = sqrt(tr((ad H)²)) / sqrt(2π)`.
///
/// The adjoint matrix is built honestly from matrix commutators of a basis
/// of the algebra, not from tabulated structure constants.
pub fn calibrate_height_scale() -> f64 {
    type M = [[Complex64; 2]; 2];
    let i = Complex64::new(0.0, 1.0);
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    // Basis of the algebra: compact direction, boost, and the remaining
    // off-diagonal direction.
    let basis: [M; 3] = [
        [[i, zero], [zero, -i]],
        [[zero, one], [one, zero]],
        [[zero, i], [-i, zero]],
    ];
    let mul = |x: &M, y: &M| -> M {
        let mut out = [[zero; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = x[r][0] * y[0][c] + x[r][1] * y[1][c];
            }
        }
        out
    };
    let bracket = |x: &M, y: &M| -> M {
        let xy = mul(x, y);
        let yx = mul(y, x);
        [
            [xy[0][0] - yx[0][0], xy[0][1] - yx[0][1]],
            [xy[1][0] - yx[1][0], xy[1][1] - yx[1][1]],
        ]
    };
    // Coordinates of an algebra element in the basis above.
    let project = |y: &M| -> [f64; 3] { [y[0][0].im, y[0][1].re, y[0][1].im] };
    let boost = &basis[1];
    let mut ad = [[0.0; 3]; 3];
    for (j, direction) in basis.iter().enumerate() {
        let image = project(&bracket(boost, direction));
        for (r, row) in ad.iter_mut().enumerate() {
            row[j] = image[r];
        }
    }
    let mut trace = 0.0;
    for r in 0..3 {
        for k in 0..3 {
            trace += ad[r][k] * ad[k][r];
        }
    }
    (trace / (2.0 * PI)).sqrt()
}

/// Runs the full calibration chain: shear mass, height scale, then the
/// spectral norm constant `kappa` measured on the reference bump at the
/// given grids.
pub fn calibrate_measures(grids: &TransformGrids) -> Result<MeasureNormalization, TransformError> {
    let c_n = calibrate_shear_mass()?;
    let c_a = calibrate_height_scale();
    let partial = MeasureNormalization::new(c_n, c_a, 1.0)?;
    let bump = TestFunction::reference_bump();
    let spectral = spectral_transform(&bump, grids, &partial)?;
    let spectral_side = spectral_norm_sq(&spectral, &partial, SpectralWeight::Multiplier);
    let space_side = x_norm_sq(&bump, &partial, grids)?;
    MeasureNormalization::new(c_n, c_a, spectral_side / space_side)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_constants_match_closed_forms() {
        let norms = MeasureNormalization::reference();
        assert!((norms.c_n() - 0.636_619_772_367_581_4).abs() < 1e-15);
        assert!((norms.c_a() - 1.128_379_167_095_512_6).abs() < 1e-15);
        assert!((norms.c_lambda() - 0.141_047_395_886_939_07).abs() < 1e-15);
        assert_eq!(norms.kappa(), 1.0);
    }

    /// The measured shear mass sits a hair above `2/π`: the heavy tail cut
    /// at the default truncation biases the mass low by about 4.5e-6
    /// relative, and the reciprocal high by the same amount.
    #[test]
    fn shear_mass_reproduces_its_closed_form_with_documented_bias() {
        let c_n = calibrate_shear_mass().unwrap();
        let reference = 2.0 / PI;
        let rel = c_n / reference - 1.0;
        assert!(rel > 0.0, "truncation bias must push the mass reciprocal up");
        assert!(rel < 1e-5, "bias {rel:.3e} out of budget");
        assert!((rel - 4.55e-6).abs() < 5e-7, "bias {rel:.3e} moved");
    }

    /// Halving the truncation leaves the integrand tail above tolerance and
    /// must be reported, not silently absorbed.
    #[test]
    fn undersized_truncation_fails_the_tail_check() {
        let err = calibrate_shear_mass_with_truncation(SHEAR_TRUNCATION / 2.0);
        match err {
            Err(TransformError::Numerics(NumericsError::TailToleranceExceeded {
                magnitude,
                tolerance,
                ..
            })) => {
                assert!(magnitude > tolerance);
            }
            other => panic!("expected a tail failure, got {other:?}"),
        }
    }

    #[test]
    fn height_scale_matches_the_trace_form_value() {
        let c_a = calibrate_height_scale();
        assert!(
            (c_a - 2.0 / PI.sqrt()).abs() < 1e-14,
            "c_a = {c_a:.16}, want 2/sqrt(pi)"
        );
    }

    #[test]
    fn constants_must_be_positive() {
        assert!(MeasureNormalization::new(0.0, 1.0, 1.0).is_err());
        assert!(MeasureNormalization::new(1.0, -1.0, 1.0).is_err());
        assert!(MeasureNormalization::new(1.0, 1.0, f64::NAN).is_err());
    }
}
