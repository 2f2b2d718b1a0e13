//! Boundary densities: harmonic measures seen from interior points.
//!
//! The boundary circle carries the normalized angular measure `ν^o`; the
//! measure seen from `x` has density `dν^x/dν^o(b) = e^{2 A_o(x, b)}` with
//! respect to it. Isometries permute this family: the pushforward of `ν^o`
//! under `g` is `ν^{g[o]}`.

use super::point::{BoundaryPoint, DiskPoint};
use super::section::composite_distance_to_origin;

/// `dν^x/dν^o(b) = e^{2 A_o(x, b)}`.
pub fn boundary_density(x: &DiskPoint, b: &BoundaryPoint) -> f64 {
    (2.0 * composite_distance_to_origin(x, b)).exp()
}

/// Density of the pushforward `g_* ν^o` with respect to `ν^o`, which equals
/// the density of `ν^{g[o]}`.
pub fn boundary_measure_pushforward_density(image_of_origin: &DiskPoint, b: &BoundaryPoint) -> f64 {
    boundary_density(image_of_origin, b)
}

/// Non-failing diagnostic: the density against the classical ratio form
/// `(1 - |z|^2) / |z - e^{iβ}|^2`. Returns (group-theoretic value, ratio
/// form) so callers can log the spread without gating on it.
pub fn poisson_kernel_diagnostic(x: &DiskPoint, b: &BoundaryPoint) -> (f64, f64) {
    let z = x.z();
    let ratio = (1.0 - z.norm_sqr()) / (z - b.unit()).norm_sqr();
    (boundary_density(x, b), ratio)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::{boundary_action, mobius, point_from_na};
    use crate::lie::SU11Element;
    use crate::numerics::{seeded_rng, PeriodicGrid};
    use num_complex::Complex64;
    use rand::Rng;
    use std::f64::consts::TAU;

    fn random_point(rng: &mut impl Rng) -> DiskPoint {
        let r = rng.random_range(0.0..0.8);
        let phi = rng.random_range(0.0..TAU);
        DiskPoint::new(Complex64::from_polar(r, phi)).unwrap()
    }

    fn random_element(rng: &mut impl Rng) -> SU11Element {
        SU11Element::rotation(rng.random_range(0.0..TAU))
            * SU11Element::boost(rng.random_range(-1.0..1.0))
            * SU11Element::shear(rng.random_range(-1.5..1.5))
    }

    /// A trigonometric polynomial with seeded coefficients, smooth enough
    /// for the periodic rectangle rule to integrate spectrally.
    fn trig_polynomial(rng: &mut impl Rng) -> impl Fn(f64) -> f64 {
        let coeffs: Vec<(f64, f64)> = (0..5)
            .map(|_| (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        move |beta: f64| {
            let mut v = 1.0;
            for (k, (c, s)) in coeffs.iter().enumerate() {
                let freq = (k + 1) as f64;
                v += c * (freq * beta).cos() + s * (freq * beta).sin();
            }
            v
        }
    }

    #[test]
    fn density_at_origin_is_identically_one() {
        let o = DiskPoint::origin();
        for k in 0..12 {
            let b = BoundaryPoint::new(TAU * k as f64 / 12.0);
            assert!((boundary_density(&o, &b) - 1.0).abs() < 1e-14);
        }
    }

    /// Total mass of every `ν^x` is one.
    #[test]
    fn densities_integrate_to_unit_mass() {
        let grid = PeriodicGrid::new(256).unwrap();
        let mut rng = seeded_rng(601);
        let mut points = vec![
            DiskPoint::origin(),
            point_from_na(0.0, 0.9),
            point_from_na(-1.2, -0.4),
        ];
        for _ in 0..5 {
            points.push(random_point(&mut rng));
        }
        for x in &points {
            let mut mass = 0.0;
            for i in 0..grid.len() {
                let b = BoundaryPoint::new(grid.node(i));
                mass += boundary_density(x, &b) * grid.normalized_weight();
            }
            assert!(
                (mass - 1.0).abs() < 1e-8,
                "mass of ν^x at {} is {mass:.12}",
                x.z()
            );
        }
    }

    /// Change of variables on the boundary:
    /// `∫ F(g⟨b⟩) dν^o(b) = ∫ F(b) e^{2 A_o(g[o], b)} dν^o(b)`.
    #[test]
    fn pushforward_density_satisfies_change_of_variables() {
        // The integrand's Fourier decay rate is 1/|g[o]| per mode, so the
        // node count must comfortably exceed the worst contraction drawn
        // below (hyperbolic distance up to about 2.2, decay 0.976 per mode).
        let grid = PeriodicGrid::new(4096).unwrap();
        let mut rng = seeded_rng(602);
        for _ in 0..10 {
            let g = random_element(&mut rng);
            let f = trig_polynomial(&mut rng);
            let g_o = mobius(&g, &DiskPoint::origin());
            let mut lhs = 0.0;
            let mut rhs = 0.0;
            for i in 0..grid.len() {
                let b = BoundaryPoint::new(grid.node(i));
                lhs += f(boundary_action(&g, &b).angle()) * grid.normalized_weight();
                rhs += f(b.angle()) * boundary_density(&g_o, &b) * grid.normalized_weight();
            }
            assert!(
                (lhs - rhs).abs() < 1e-8,
                "change of variables residual {:.3e}",
                (lhs - rhs).abs()
            );
        }
    }

    /// Dual relation mixing a second observation point:
    /// `∫ F(g⟨b⟩) dν^x(b) = ∫ F(b) dν^{g[x]}(b)`.
    #[test]
    fn pushforward_of_observed_measures_rebases_the_observer() {
        // Two observation points compound the contraction, so the draws stay
        // a bit tighter than elsewhere (distance sum below about 2.6) and
        // the grid is dense enough for ten digits even in the worst case.
        let grid = PeriodicGrid::new(4096).unwrap();
        let mut rng = seeded_rng(603);
        for _ in 0..10 {
            let g = SU11Element::rotation(rng.random_range(0.0..TAU))
                * SU11Element::boost(rng.random_range(-0.8..0.8))
                * SU11Element::shear(rng.random_range(-1.2..1.2));
            let x = DiskPoint::new(Complex64::from_polar(
                rng.random_range(0.0..0.6),
                rng.random_range(0.0..TAU),
            ))
            .unwrap();
            let f = trig_polynomial(&mut rng);
            let g_x = mobius(&g, &x);
            let mut lhs = 0.0;
            let mut rhs = 0.0;
            for i in 0..grid.len() {
                let b = BoundaryPoint::new(grid.node(i));
                lhs += f(boundary_action(&g, &b).angle())
                    * boundary_density(&x, &b)
                    * grid.normalized_weight();
                rhs += f(b.angle()) * boundary_density(&g_x, &b) * grid.normalized_weight();
            }
            assert!(
                (lhs - rhs).abs() < 1e-8,
                "dual change of variables residual {:.3e}",
                (lhs - rhs).abs()
            );
        }
    }

    /// The diagnostic ratio form should agree closely away from the
    /// boundary; log-only elsewhere, so the assertion here stays loose and
    /// the comparison is informational.
    #[test]
    fn ratio_form_diagnostic_tracks_the_group_theoretic_density() {
        let mut rng = seeded_rng(604);
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let x = random_point(&mut rng);
            let b = BoundaryPoint::new(rng.random_range(0.0..TAU));
            let (group_value, ratio_value) = poisson_kernel_diagnostic(&x, &b);
            worst = worst.max((group_value - ratio_value).abs() / ratio_value);
        }
        assert!(
            worst < 1e-9,
            "diagnostic spread {worst:.3e} unexpectedly large on interior points"
        );
    }
}
