//! The solvable section of the disk and the composite distance.
//!
//! Every disk point `x` is reached from the origin by a unique element of the
//! solvable subgroup `NA`: `x = n_s a_t [o]`. In terms of the half-plane
//! coordinate `w = (1 + z) / (1 - z)` (which has positive real part on the
//! disk) the parameters are
//!
//! ```text
//! w = e^{2t} - 2is,     t = ln(Re w) / 2,     s = -Im w / 2,
//! ```
//!
//! an exact closed form that stays well conditioned on the whole open disk.
//!
//! The composite distance `A_x(y, b)` is the signed distance from `x` to the
//! horocycle through `y` at the boundary point `b`, positive when the
//! horocycle separates `x` from `b`. It is computed group-theoretically: in
//! the Iwasawa order `n a k` based at `x`, it is the boost component of
//! `κ_x(k_b)^{-1} s_x(y)`, where `s_x` is the section based at `x` and `κ_x`
//! the rotation part based at `x`.

use num_complex::Complex64;

use super::mobius::mobius;
use super::point::{BoundaryPoint, DiskPoint};
use crate::lie::{iwasawa_kan_su11, iwasawa_nak_su11, SU11Element};

/// The unique `n_s a_t` with `n_s a_t [o] = x`.
///
/// Its `k a n` rotation component is zero: the section lands in the solvable
/// subgroup, which meets the rotation subgroup only at the identity.
pub fn borel_section(x: &DiskPoint) -> SU11Element {
    let (s, t) = na_coordinates(x);
    SU11Element::shear(s) * SU11Element::boost(t)
}

/// Solvable coordinates `(s, t)` of a disk point: `x = n_s a_t [o]`.
pub fn na_coordinates(x: &DiskPoint) -> (f64, f64) {
    let z = x.z();
    let w = (Complex64::new(1.0, 0.0) + z) / (Complex64::new(1.0, 0.0) - z);
    let t = w.re.ln() / 2.0;
    let s = -w.im / 2.0;
    (s, t)
}

/// Inverse of [`na_coordinates`]: the point `n_s a_t [o]`.
pub fn point_from_na(s: f64, t: f64) -> DiskPoint {
    mobius(
        &(SU11Element::shear(s) * SU11Element::boost(t)),
        &DiskPoint::origin(),
    )
}

/// `d(o, x) = atanh |z|`, the hyperbolic distance to the origin.
pub fn hyperbolic_distance_to_origin(x: &DiskPoint) -> f64 {
    x.z().norm().atanh()
}

/// Hyperbolic distance between two points, computed by moving the first to
/// the origin with its section.
pub fn hyperbolic_distance(x: &DiskPoint, y: &DiskPoint) -> f64 {
    let moved = mobius(&borel_section(x).inverse(), y);
    hyperbolic_distance_to_origin(&moved)
}

/// Composite distance `A_x(y, b)` from the base point `x` to the horocycle
/// at `b` through `y`.
///
/// With `σ = s_o(x)` the section of the base point, the `x`-based Iwasawa
/// factorizations reduce to origin-based ones by conjugation, and the boost
/// component evaluates as the `n a k` boost of
/// `κ_o(σ^{-1} k_b σ)^{-1} · σ^{-1} · s_o(y)`.
pub fn composite_distance(x: &DiskPoint, y: &DiskPoint, b: &BoundaryPoint) -> f64 {
    let sigma = borel_section(x);
    let sigma_inv = sigma.inverse();
    let conjugated_rotation = sigma_inv * b.rotation_representative() * sigma;
    let kappa = SU11Element::rotation(iwasawa_kan_su11(&conjugated_rotation).theta);
    iwasawa_nak_su11(&(kappa.inverse() * sigma_inv * borel_section(y))).t
}

/// `A_o(y, b)`: the origin-based composite distance, the common fast path.
pub fn composite_distance_to_origin(y: &DiskPoint, b: &BoundaryPoint) -> f64 {
    let g = b.rotation_representative().inverse() * borel_section(y);
    iwasawa_nak_su11(&g).t
}

/// The boundary action `g⟨β⟩`: the rotation component of `g k_{β/2}` in
/// `k a n` order, with the angle doubled back onto the boundary coordinate.
pub fn boundary_action(g: &SU11Element, b: &BoundaryPoint) -> BoundaryPoint {
    let theta = iwasawa_kan_su11(&(*g * b.rotation_representative())).theta;
    BoundaryPoint::new(2.0 * theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::mobius_boundary;
    use crate::numerics::seeded_rng;
    use rand::Rng;
    use std::f64::consts::TAU;

    fn random_element(rng: &mut impl Rng) -> SU11Element {
        SU11Element::rotation(rng.random_range(0.0..TAU))
            * SU11Element::boost(rng.random_range(-1.5..1.5))
            * SU11Element::shear(rng.random_range(-2.0..2.0))
    }

    fn random_point(rng: &mut impl Rng) -> DiskPoint {
        let r = rng.random_range(0.0..0.9);
        let phi = rng.random_range(0.0..TAU);
        DiskPoint::new(Complex64::from_polar(r, phi)).unwrap()
    }

    #[test]
    fn section_reaches_its_point_with_zero_rotation_component() {
        let mut rng = seeded_rng(401);
        for _ in 0..100 {
            let x = random_point(&mut rng);
            let section = borel_section(&x);
            let image = mobius(&section, &DiskPoint::origin());
            assert!(
                (image.z() - x.z()).norm() < 1e-12,
                "section image {} vs point {}",
                image.z(),
                x.z()
            );
            let theta = iwasawa_kan_su11(&section).theta;
            let wrapped = theta.min(TAU - theta);
            assert!(
                wrapped < 1e-12,
                "section rotation component should vanish, got {theta}"
            );
        }
    }

    /// Worked example: `z = 1/(1+i) = (1-i)/2` has solvable coordinates
    /// `(s, t) = (1, 0)`.
    #[test]
    fn na_coordinates_match_worked_example()  {
        let z = Complex64::new(1.0, 0.0) / Complex64::new(1.0, 1.0);
        let (s, t) = na_coordinates(&DiskPoint::new(z).unwrap());
        assert!((s - 1.0).abs() < 1e-15, "s = {s}, want 1");
        assert!(t.abs() < 1e-15, "t = {t}, want 0");
    }

    #[test]
    fn na_coordinates_round_trip() {
        let mut rng = seeded_rng(402);
        for _ in 0..100 {
            let s = rng.random_range(-4.0..4.0);
            let t = rng.random_range(-3.0..3.0);
            let x = point_from_na(s, t);
            let (s2, t2) = na_coordinates(&x);
            assert!(
                (s - s2).abs() < 1e-12 && (t - t2).abs() < 1e-12,
                "({s}, {t}) round-tripped to ({s2}, {t2})"
            );
        }
    }

    #[test]
    fn distance_to_origin_matches_log_formula() {
        let x = DiskPoint::new(Complex64::new(0.5, 0.0)).unwrap();
        let d = hyperbolic_distance_to_origin(&x);
        // atanh(1/2) = (1/2) ln 3.
        let expected = 0.5 * 3.0f64.ln();
        assert!((d - expected).abs() < 1e-12, "d = {d:.12}, want {expected:.12}");
        assert!((d - 0.549306).abs() < 1e-6);
    }

    #[test]
    fn distance_is_symmetric_and_invariant() {
        let mut rng = seeded_rng(403);
        for _ in 0..50 {
            let x = random_point(&mut rng);
            let y = random_point(&mut rng);
            let g = random_element(&mut rng);
            let d = hyperbolic_distance(&x, &y);
            assert!(
                (d - hyperbolic_distance(&y, &x)).abs() < 1e-12,
                "distance asymmetry"
            );
            let d_moved = hyperbolic_distance(&mobius(&g, &x), &mobius(&g, &y));
            assert!(
                (d - d_moved).abs() < 1e-11,
                "isometry violated: {d} vs {d_moved}"
            );
        }
    }

    /// Along the geodesic toward `b = 1`, the composite distance to the
    /// origin is the boost parameter itself.
    #[test]
    fn composite_distance_on_axis_is_the_boost_parameter() {
        let b = BoundaryPoint::new(0.0);
        for &t in &[-1.0, 0.3, 2.0] {
            let y = mobius(&SU11Element::boost(t), &DiskPoint::origin());
            let a = composite_distance_to_origin(&y, &b);
            assert!(
                (a - t).abs() < 1e-13,
                "A_o(a_t[o], 1) = {a}, want t = {t}"
            );
        }
    }

    #[test]
    fn composite_distance_general_form_agrees_with_origin_fast_path() {
        let mut rng = seeded_rng(404);
        let o = DiskPoint::origin();
        for _ in 0..100 {
            let y = random_point(&mut rng);
            let b = BoundaryPoint::new(rng.random_range(0.0..TAU));
            let general = composite_distance(&o, &y, &b);
            let fast = composite_distance_to_origin(&y, &b);
            assert!(
                (general - fast).abs() < 1e-13,
                "origin-based paths disagree: {general} vs {fast}"
            );
        }
    }

    /// Cocycle identity `A_x(z, b) = A_x(y, b) + A_y(z, b)` over seeded
    /// triples.
    #[test]
    fn composite_distance_satisfies_the_cocycle_identity() {
        let mut rng = seeded_rng(405);
        for _ in 0..50 {
            let x = random_point(&mut rng);
            let y = random_point(&mut rng);
            let z = random_point(&mut rng);
            let b = BoundaryPoint::new(rng.random_range(0.0..TAU));
            let direct = composite_distance(&x, &z, &b);
            let through = composite_distance(&x, &y, &b) + composite_distance(&y, &z, &b);
            assert!(
                (direct - through).abs() < 1e-10,
                "cocycle residual {:.3e}",
                (direct - through).abs()
            );
        }
    }

    /// Full isometry invariance `A_{g[x]}(g[y], g⟨b⟩) = A_x(y, b)`.
    #[test]
    fn composite_distance_is_isometry_invariant() {
        let mut rng = seeded_rng(406);
        for _ in 0..50 {
            let x = random_point(&mut rng);
            let y = random_point(&mut rng);
            let b = BoundaryPoint::new(rng.random_range(0.0..TAU));
            let g = random_element(&mut rng);
            let before = composite_distance(&x, &y, &b);
            let after = composite_distance(
                &mobius(&g, &x),
                &mobius(&g, &y),
                &boundary_action(&g, &b),
            );
            assert!(
                (before - after).abs() < 1e-10,
                "invariance residual {:.3e}",
                (before - after).abs()
            );
        }
    }

    #[test]
    fn vanishing_cases_of_the_composite_distance() {
        let mut rng = seeded_rng(407);
        for _ in 0..20 {
            let x = random_point(&mut rng);
            let b = BoundaryPoint::new(rng.random_range(0.0..TAU));
            assert!(
                composite_distance(&x, &x, &b).abs() < 1e-13,
                "A_x(x, b) must vanish"
            );
        }
    }

    #[test]
    fn boundary_action_fixes_the_base_boundary_point_under_na() {
        let mut rng = seeded_rng(408);
        let b0 = BoundaryPoint::new(0.0);
        for _ in 0..50 {
            let g = SU11Element::shear(rng.random_range(-3.0..3.0))
                * SU11Element::boost(rng.random_range(-2.0..2.0));
            let moved = boundary_action(&g, &b0);
            let gap = moved.angle().min(TAU - moved.angle());
            assert!(gap < 1e-12, "NA moved β = 0 to {}", moved.angle());
        }
    }

    #[test]
    fn boundary_action_of_rotations_doubles_the_angle() {
        let b = BoundaryPoint::new(0.0);
        let moved = boundary_action(&SU11Element::rotation(0.6), &b);
        assert!((moved.angle() - 1.2).abs() < 1e-13);
        let b2 = BoundaryPoint::new(2.0);
        let moved2 = boundary_action(&SU11Element::rotation(0.6), &b2);
        assert!((moved2.angle() - 3.2).abs() < 1e-13);
    }

    #[test]
    fn boundary_action_matches_fractional_linear_action_on_the_circle() {
        let mut rng = seeded_rng(409);
        for _ in 0..100 {
            let g = random_element(&mut rng);
            let b = BoundaryPoint::new(rng.random_range(0.0..TAU));
            let via_iwasawa = boundary_action(&g, &b);
            let via_mobius = mobius_boundary(&g, &b);
            let gap = (via_iwasawa.angle() - via_mobius.angle()).abs();
            let wrapped = gap.min(TAU - gap);
            assert!(
                wrapped < 1e-12,
                "boundary actions disagree: {} vs {}",
                via_iwasawa.angle(),
                via_mobius.angle()
            );
        }
    }

    #[test]
    fn boundary_action_composes() {
        let mut rng = seeded_rng(410);
        for _ in 0..50 {
            let g1 = random_element(&mut rng);
            let g2 = random_element(&mut rng);
            let b = BoundaryPoint::new(rng.random_range(0.0..TAU));
            let composed = boundary_action(&(g1 * g2), &b);
            let stepwise = boundary_action(&g1, &boundary_action(&g2, &b));
            let gap = (composed.angle() - stepwise.angle()).abs();
            assert!(gap.min(TAU - gap) < 1e-12, "boundary action not a group action");
        }
    }
}
