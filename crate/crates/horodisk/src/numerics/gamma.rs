//! Complex gamma function via the Lanczos approximation.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::NumericsError;

/// Lanczos coefficients for g = 7, 9 terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFICIENTS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function on the complex plane.
///
/// Uses the reflection formula `Γ(z) Γ(1-z) = π / sin(πz)` for `Re z < 1/2`
/// and the Lanczos series elsewhere. Relative accuracy is better than 1e-12
/// over the moderate range exercised by the transform stack (`|z| ≤ 50`).
///
/// Fails with [`NumericsError::PoleError`] at the poles, i.e. the nonpositive
/// integers.
pub fn complex_gamma(z: Complex64) -> Result<Complex64, NumericsError> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor() {
        return Err(NumericsError::PoleError { re: z.re, im: z.im });
    }
    Ok(gamma_unchecked(z))
}

fn gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Reflection: Γ(z) = π / (sin(πz) Γ(1 - z)).
        let pi_z = z * PI;
        return PI / (pi_z.sin() * gamma_unchecked(Complex64::new(1.0, 0.0) - z));
    }
    let z = z - Complex64::new(1.0, 0.0);
    let mut acc = Complex64::new(LANCZOS_COEFFICIENTS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFICIENTS.iter().enumerate().skip(1) {
        acc += c / (z + Complex64::new(i as f64, 0.0));
    }
    let t = z + Complex64::new(LANCZOS_G + 0.5, 0.0);
    let sqrt_two_pi = (2.0 * PI).sqrt();
    sqrt_two_pi * t.powc(z + Complex64::new(0.5, 0.0)) * (-t).exp() * acc
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Factorials give exact reference values on the positive integers.
    #[test]
    fn matches_factorials_on_positive_integers() {
        let mut factorial = 1.0f64;
        for n in 1..=20u32 {
            if n > 1 {
                factorial *= (n - 1) as f64;
            }
            let got = complex_gamma(Complex64::new(n as f64, 0.0)).unwrap();
            let rel = (got.re - factorial).abs() / factorial;
            assert!(
                rel < 1e-13,
                "Γ({n}) = {:.15e}, want {factorial:.15e} (rel err {rel:.3e})",
                got.re
            );
            assert!(got.im.abs() < 1e-12 * factorial);
        }
    }

    #[test]
    fn matches_half_integer_closed_forms() {
        let sqrt_pi = std::f64::consts::PI.sqrt();
        // Γ(1/2) = √π, Γ(3/2) = √π/2, Γ(5/2) = 3√π/4, Γ(-1/2) = -2√π.
        let cases = [
            (0.5, sqrt_pi),
            (1.5, sqrt_pi / 2.0),
            (2.5, 3.0 * sqrt_pi / 4.0),
            (-0.5, -2.0 * sqrt_pi),
            (-1.5, 4.0 * sqrt_pi / 3.0),
        ];
        for (x, want) in cases {
            let got = complex_gamma(Complex64::new(x, 0.0)).unwrap();
            let rel = (got.re - want).abs() / want.abs();
            assert!(rel < 1e-13, "Γ({x}) = {:.15e}, want {want:.15e}", got.re);
        }
    }

    /// `|Γ(iy)|^2 = π / (y sinh(πy))` for real `y ≠ 0`.
    #[test]
    fn imaginary_axis_modulus_matches_sinh_identity() {
        for &y in &[0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0] {
            let got = complex_gamma(Complex64::new(0.0, y)).unwrap().norm_sqr();
            let want = PI / (y * (PI * y).sinh());
            let rel = (got - want).abs() / want;
            assert!(
                rel < 1e-12,
                "|Γ({y}i)|^2 = {got:.15e}, want {want:.15e} (rel err {rel:.3e})"
            );
        }
    }

    /// `|Γ(1/2 + iy)|^2 = π / cosh(πy)` for real `y`.
    #[test]
    fn critical_line_modulus_matches_cosh_identity() {
        for &y in &[0.0, 0.3, 1.0, 3.0, 8.0, 20.0] {
            let got = complex_gamma(Complex64::new(0.5, y)).unwrap().norm_sqr();
            let want = PI / (PI * y).cosh();
            let rel = (got - want).abs() / want;
            assert!(
                rel < 1e-12,
                "|Γ(1/2 + {y}i)|^2 = {got:.15e}, want {want:.15e} (rel err {rel:.3e})"
            );
        }
    }

    /// Functional equation Γ(z+1) = z Γ(z) across a sweep of the region used
    /// by the transform stack.
    #[test]
    fn functional_equation_holds_over_working_region() {
        let mut worst: f64 = 0.0;
        for i in -20..=20 {
            for j in -20..=20 {
                let z = Complex64::new(i as f64 * 1.3 + 0.37, j as f64 * 1.7 + 0.11);
                if z.norm() < 0.5 || z.norm() > 50.0 {
                    continue;
                }
                let lhs = complex_gamma(z + Complex64::new(1.0, 0.0)).unwrap();
                let rhs = z * complex_gamma(z).unwrap();
                worst = worst.max((lhs - rhs).norm() / rhs.norm());
            }
        }
        assert!(
            worst < 1e-12,
            "worst functional-equation residual {worst:.3e} over working region"
        );
    }

    #[test]
    fn poles_are_rejected() {
        for &x in &[0.0, -1.0, -2.0, -7.0] {
            let err = complex_gamma(Complex64::new(x, 0.0)).unwrap_err();
            assert!(
                matches!(err, NumericsError::PoleError { .. }),
                "Γ({x}) should report a pole, got {err:?}"
            );
        }
        // Near-pole but non-integer arguments stay evaluable.
        assert!(complex_gamma(Complex64::new(-1.0 + 1e-6, 0.0)).is_ok());
        assert!(complex_gamma(Complex64::new(-3.0, 1e-8)).is_ok());
    }
}
