//! Unit-determinant positive-definite matrices as the higher-rank model
//! space.
//!
//! `SL(d, R)` acts transitively by congruence `g · p = g p g^T`, with
//! stabilizer `SO(d)` at the identity; the trace metric
//! `⟨X, Y⟩_p = tr(p^{-1} X p^{-1} Y)` on symmetric tangents is invariant.
//! The flats through the identity are the images of the diagonal torus, and
//! the horocyclic level data of a point is read off its UDU factorization
//! (unit upper-triangular times diagonal times transpose), the congruence
//! analogue of the Iwasawa decomposition.

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use crate::lie::SLMatrix;

/// Errors produced by the matrix-model layer.
#[derive(Debug, Error)]
pub enum SpdError {
    #[error("matrix is not symmetric: max asymmetry {0:.3e}")]
    NotSymmetric(f64),
    #[error("matrix is not positive definite: {0}")]
    NotPositiveDefinite(String),
    #[error("determinant {det} is not 1 within {tolerance:.1e}")]
    NonUnimodular { det: f64, tolerance: f64 },
    #[error("tangent vector is not symmetric: max asymmetry {0:.3e}")]
    NonSymmetricTangent(f64),
    #[error("rotation factor is not special orthogonal: {0}")]
    InvalidRotation(String),
    #[error("torus logarithm does not sum to zero: {0:.3e}")]
    TraceNotZero(f64),
    #[error("matrix dimension {0} too small, need at least 2")]
    BadDimension(usize),
}

const SYMMETRY_TOL: f64 = 1e-12;
const DET_TOL: f64 = 1e-10;
/// Relative floor on the smallest eigenvalue, keeping points away from the
/// boundary of the cone.
const EIGEN_RATIO_FLOOR: f64 = 1e-10;

fn max_asymmetry(m: &DMatrix<f64>) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in (i + 1)..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    worst
}

/// A symmetric positive-definite matrix with determinant 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SPDPoint {
    p: DMatrix<f64>,
}

impl SPDPoint {
    /// Admits symmetric matrices (within 1e-12) whose eigenvalues are
    /// positive with `λ_min > 1e-10 λ_max`, and whose determinant is 1
    /// within 1e-10.
    pub fn new(p: DMatrix<f64>) -> Result<Self, SpdError> {
        if !p.is_square() || p.nrows() < 2 {
            return Err(SpdError::BadDimension(p.nrows()));
        }
        let asym = max_asymmetry(&p);
        if asym > SYMMETRY_TOL {
            return Err(SpdError::NotSymmetric(asym));
        }
        let eigen = p.clone().symmetric_eigen();
        let min = eigen.eigenvalues.min();
        let max = eigen.eigenvalues.max();
        if !(min > 0.0) || min <= EIGEN_RATIO_FLOOR * max {
            return Err(SpdError::NotPositiveDefinite(format!(
                "eigenvalue range [{min:.3e}, {max:.3e}]"
            )));
        }
        let det: f64 = eigen.eigenvalues.iter().product();
        if (det - 1.0).abs() > DET_TOL {
            return Err(SpdError::NonUnimodular {
                det,
                tolerance: DET_TOL,
            });
        }
        Ok(Self { p })
    }

    pub(crate) fn new_unchecked(p: DMatrix<f64>) -> Self {
        Self { p }
    }

    pub fn identity(d: usize) -> Self {
        Self {
            p: DMatrix::identity(d, d),
        }
    }

    pub fn dim(&self) -> usize {
        self.p.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.p
    }

    pub fn eigenvalues(&self) -> DVector<f64> {
        let mut v = self.p.clone().symmetric_eigen().eigenvalues;
        v.as_mut_slice()
            .sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
        v
    }

    /// The unique symmetric square root, itself in `SL(d, R)`; it moves the
    /// identity to this point under congruence.
    pub fn sqrt_witness(&self) -> SLMatrix {
        let eigen = self.p.clone().symmetric_eigen();
        let q = &eigen.eigenvectors;
        let sqrt_diag = DMatrix::from_diagonal(&eigen.eigenvalues.map(f64::sqrt));
        let root = q * sqrt_diag * q.transpose();
        SLMatrix::renormalized(root).expect("square root of a unit-determinant point")
    }
}

/// UDU factors of a point: `p = u · diag(d) · u^T` with `u` unit
/// upper-triangular and `d` positive.
#[derive(Debug, Clone)]
pub struct UDUFactors {
    pub u: DMatrix<f64>,
    pub diag: DVector<f64>,
}

impl UDUFactors {
    pub fn reassemble(&self) -> DMatrix<f64> {
        &self.u * DMatrix::from_diagonal(&self.diag) * self.u.transpose()
    }
}

/// Congruence action `g · p = g p g^T`.
///
/// The result is again symmetric positive definite with determinant 1, so no
/// re-validation is performed; a light symmetrization removes rounding skew.
pub fn congruence_action(g: &SLMatrix, p: &SPDPoint) -> SPDPoint {
    let m = g.matrix() * p.matrix() * g.matrix().transpose();
    SPDPoint::new_unchecked(0.5 * (&m + m.transpose()))
}

/// Invariant metric on symmetric tangents at `p`:
/// `⟨X, Y⟩_p = tr(p^{-1} X p^{-1} Y)`.
pub fn trace_metric(p: &SPDPoint, x: &DMatrix<f64>, y: &DMatrix<f64>) -> Result<f64, SpdError> {
    for tangent in [x, y] {
        let asym = max_asymmetry(tangent);
        if asym > SYMMETRY_TOL {
            return Err(SpdError::NonSymmetricTangent(asym));
        }
    }
    let p_inv = p
        .matrix()
        .clone()
        .try_inverse()
        .expect("positive definite matrices are invertible");
    Ok((&p_inv * x * &p_inv * y).trace())
}

/// Geodesic symmetry of the space at `p`: `q ↦ p q^{-1} p`.
pub fn geodesic_symmetry(p: &SPDPoint, q: &SPDPoint) -> SPDPoint {
    let q_inv = q
        .matrix()
        .clone()
        .try_inverse()
        .expect("positive definite matrices are invertible");
    let m = p.matrix() * q_inv * p.matrix();
    SPDPoint::new_unchecked(0.5 * (&m + m.transpose()))
}

/// UDU factorization `p = u diag u^T` with `u` unit upper-triangular.
///
/// Obtained from the Cholesky factorization of the index-reversed matrix:
/// if `J` is the reversal permutation and `J p J = L̃ L̃^T`, then splitting
/// `L̃` into a unit lower factor and a diagonal and reversing back yields the
/// upper-triangular factorization.
pub fn udu_decompose(p: &SPDPoint) -> Result<UDUFactors, SpdError> {
    let d = p.dim();
    let reversed = DMatrix::from_fn(d, d, |i, j| p.matrix()[(d - 1 - i, d - 1 - j)]);
    let chol = reversed
        .cholesky()
        .ok_or_else(|| SpdError::NotPositiveDefinite("Cholesky factorization failed".into()))?;
    let l = chol.l();
    // Unit lower factor and its diagonal: L̃ = L_unit · diag(ℓ).
    let mut u = DMatrix::zeros(d, d);
    let mut diag = DVector::zeros(d);
    for i in 0..d {
        let pivot = l[(i, i)];
        diag[d - 1 - i] = pivot * pivot;
        for j in 0..=i {
            // Reverse both indices to return to the original ordering; the
            // lower triangle maps onto the upper one.
            u[(d - 1 - i, d - 1 - j)] = l[(i, j)] / l[(j, j)];
        }
    }
    Ok(UDUFactors { u, diag })
}

/// Whether `p` lies on the flat level set with rotation frame `k` and torus
/// logarithm `a_log`: the UDU diagonal of `k^T p k` must equal
/// `exp(2 a_log)` componentwise.
pub fn horocycle_membership_spd(
    p: &SPDPoint,
    k: &DMatrix<f64>,
    a_log: &DVector<f64>,
    tol: f64,
) -> Result<bool, SpdError> {
    let d = p.dim();
    if k.nrows() != d || k.ncols() != d {
        return Err(SpdError::BadDimension(k.nrows()));
    }
    let orth_defect = (k * k.transpose() - DMatrix::identity(d, d)).amax();
    if orth_defect > 1e-9 || (k.determinant() - 1.0).abs() > 1e-9 {
        return Err(SpdError::InvalidRotation(format!(
            "orthogonality defect {orth_defect:.3e}, det {}",
            k.determinant()
        )));
    }
    let trace: f64 = a_log.iter().sum();
    if trace.abs() > 1e-10 {
        return Err(SpdError::TraceNotZero(trace));
    }
    let rotated_m = k.transpose() * p.matrix() * k;
    let rotated = SPDPoint::new_unchecked(0.5 * (&rotated_m + rotated_m.transpose()));
    let factors = udu_decompose(&rotated)?;
    let ok = (0..d).all(|i| {
        let expected = (2.0 * a_log[i]).exp();
        (factors.diag[i] / expected - 1.0).abs() <= tol
    });
    Ok(ok)
}

/// The orbit point `(a n) (a n)^T` for torus logarithm `a_log` and unit
/// upper-triangular `n`, in closed form:
/// entry `(i, j)` is `e^{a_i + a_j} Σ_{k ≥ max(i,j)} n_{ik} n_{jk}`.
pub fn n_orbit_point(a_log: &DVector<f64>, n: &DMatrix<f64>) -> Result<SPDPoint, SpdError> {
    let d = a_log.len();
    if d < 2 {
        return Err(SpdError::BadDimension(d));
    }
    if n.nrows() != d || n.ncols() != d {
        return Err(SpdError::BadDimension(n.nrows()));
    }
    for i in 0..d {
        if (n[(i, i)] - 1.0).abs() > 1e-14 {
            return Err(SpdError::NotPositiveDefinite(
                "upper factor must have unit diagonal".into(),
            ));
        }
        for j in 0..i {
            if n[(i, j)] != 0.0 {
                return Err(SpdError::NotPositiveDefinite(
                    "upper factor must be upper-triangular".into(),
                ));
            }
        }
    }
    let trace: f64 = a_log.iter().sum();
    if trace.abs() > 1e-10 {
        return Err(SpdError::TraceNotZero(trace));
    }
    let p = DMatrix::from_fn(d, d, |i, j| {
        let start = i.max(j);
        let mut sum = 0.0;
        for k in start..d {
            sum += n[(i, k)] * n[(j, k)];
        }
        (a_log[i] + a_log[j]).exp() * sum
    });
    Ok(SPDPoint::new_unchecked(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::seeded_rng;
    use rand::Rng;
    use rand_chacha::ChaCha8Rng;

    fn random_spd(rng: &mut ChaCha8Rng, d: usize) -> SPDPoint {
        let a_log = random_a_log(rng, d);
        let n = random_unit_upper(rng, d);
        n_orbit_point(&a_log, &n).unwrap()
    }

    fn random_a_log(rng: &mut ChaCha8Rng, d: usize) -> DVector<f64> {
        let mut v = DVector::from_fn(d, |_, _| rng.random_range(-0.8..0.8));
        let mean = v.iter().sum::<f64>() / d as f64;
        for x in v.iter_mut() {
            *x -= mean;
        }
        v
    }

    fn random_unit_upper(rng: &mut ChaCha8Rng, d: usize) -> DMatrix<f64> {
        let mut n = DMatrix::identity(d, d);
        for i in 0..d {
            for j in (i + 1)..d {
                n[(i, j)] = rng.random_range(-1.0..1.0);
            }
        }
        n
    }

    fn random_rotation(rng: &mut ChaCha8Rng, d: usize) -> DMatrix<f64> {
        let gauss = DMatrix::from_fn(d, d, |_, _| {
            let u: f64 = rng.random_range(1e-12..1.0);
            let v: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            (-2.0 * u.ln()).sqrt() * v.cos()
        });
        let qr = gauss.qr();
        let mut q = qr.q();
        let r = qr.r();
        for i in 0..d {
            if r[(i, i)] < 0.0 {
                for row in 0..d {
                    q[(row, i)] = -q[(row, i)];
                }
            }
        }
        if q.determinant() < 0.0 {
            for row in 0..d {
                q[(row, 0)] = -q[(row, 0)];
            }
        }
        q
    }

    #[test]
    fn admission_rejects_each_invariant_violation() {
        // Asymmetric.
        let mut m = DMatrix::identity(3, 3);
        m[(0, 1)] = 1e-6;
        assert!(matches!(SPDPoint::new(m), Err(SpdError::NotSymmetric(_))));
        // Indefinite.
        let ind = DMatrix::from_diagonal(&DVector::from_vec(vec![2.0, -0.5, -1.0]));
        assert!(matches!(
            SPDPoint::new(ind),
            Err(SpdError::NotPositiveDefinite(_))
        ));
        // Wrong determinant.
        let scaled = DMatrix::from_diagonal(&DVector::from_vec(vec![2.0, 1.0, 1.0]));
        assert!(matches!(
            SPDPoint::new(scaled),
            Err(SpdError::NonUnimodular { .. })
        ));
        // Valid.
        let good = DMatrix::from_diagonal(&DVector::from_vec(vec![2.0, 1.0, 0.5]));
        assert!(SPDPoint::new(good).is_ok());
    }

    #[test]
    fn congruence_action_is_transitive_via_the_square_root_witness() {
        let mut rng = seeded_rng(701);
        for d in [2usize, 3, 5] {
            for _ in 0..20 {
                let p = random_spd(&mut rng, d);
                let g = p.sqrt_witness();
                let moved = congruence_action(&g, &SPDPoint::identity(d));
                let residual = (moved.matrix() - p.matrix()).amax();
                assert!(
                    residual < 1e-10,
                    "d={d}: sqrt witness misses the point by {residual:.3e}"
                );
            }
        }
    }

    #[test]
    fn congruence_action_composes_and_preserves_determinant() {
        let mut rng = seeded_rng(702);
        let d = 4;
        for _ in 0..20 {
            let p = random_spd(&mut rng, d);
            let g1 = SLMatrix::renormalized(
                random_unit_upper(&mut rng, d)
                    * DMatrix::from_diagonal(&random_a_log(&mut rng, d).map(f64::exp)),
            )
            .unwrap();
            let g2 = SLMatrix::new(random_rotation(&mut rng, d)).unwrap();
            let stepwise = congruence_action(&g1, &congruence_action(&g2, &p));
            let composed = congruence_action(&g1.mul(&g2), &p);
            assert!(
                (stepwise.matrix() - composed.matrix()).amax() < 1e-10,
                "congruence action fails to compose"
            );
            let det = composed.matrix().determinant();
            assert!((det - 1.0).abs() < 1e-10, "determinant drifted to {det}");
        }
    }

    #[test]
    fn trace_metric_is_congruence_invariant() {
        let mut rng = seeded_rng(703);
        let d = 3;
        for _ in 0..20 {
            let p = random_spd(&mut rng, d);
            let x_raw = DMatrix::from_fn(d, d, |_, _| rng.random_range(-1.0..1.0));
            let y_raw = DMatrix::from_fn(d, d, |_, _| rng.random_range(-1.0..1.0));
            let x = 0.5 * (&x_raw + x_raw.transpose());
            let y = 0.5 * (&y_raw + y_raw.transpose());
            let g = SLMatrix::renormalized(
                random_unit_upper(&mut rng, d)
                    * DMatrix::from_diagonal(&random_a_log(&mut rng, d).map(f64::exp))
                    * random_rotation(&mut rng, d),
            )
            .unwrap();
            let before = trace_metric(&p, &x, &y).unwrap();
            let gx = g.matrix() * &x * g.matrix().transpose();
            let gy = g.matrix() * &y * g.matrix().transpose();
            let after = trace_metric(&congruence_action(&g, &p), &gx, &gy).unwrap();
            assert!(
                (before - after).abs() < 1e-10 * before.abs().max(1.0),
                "metric invariance residual {:.3e}",
                (before - after).abs()
            );
        }
    }

    #[test]
    fn trace_metric_rejects_non_symmetric_tangents() {
        let p = SPDPoint::identity(3);
        let mut x = DMatrix::zeros(3, 3);
        x[(0, 1)] = 1.0;
        let y = DMatrix::identity(3, 3);
        assert!(matches!(
            trace_metric(&p, &x, &y),
            Err(SpdError::NonSymmetricTangent(_))
        ));
    }

    #[test]
    fn geodesic_symmetry_is_an_involution_fixing_its_center() {
        let mut rng = seeded_rng(704);
        for d in [2usize, 3, 5] {
            for _ in 0..10 {
                let p = random_spd(&mut rng, d);
                let q = random_spd(&mut rng, d);
                let fixed = geodesic_symmetry(&p, &p);
                assert!((fixed.matrix() - p.matrix()).amax() < 1e-10);
                let twice = geodesic_symmetry(&p, &geodesic_symmetry(&p, &q));
                assert!(
                    (twice.matrix() - q.matrix()).amax() < 1e-10,
                    "d={d}: symmetry applied twice moved the point"
                );
            }
        }
    }

    /// The geodesic symmetry at the identity inverts eigenvalues, hence is
    /// an isometry of the trace metric; checked by finite differences along
    /// a curve.
    #[test]
    fn geodesic_symmetry_preserves_lengths_to_finite_difference_accuracy() {
        let mut rng = seeded_rng(705);
        let d = 3;
        let p = random_spd(&mut rng, d);
        let q = random_spd(&mut rng, d);
        let x_raw = DMatrix::from_fn(d, d, |_, _| rng.random_range(-0.5..0.5));
        let x = 0.5 * (&x_raw + x_raw.transpose());
        let eps = 1e-5;
        // Curve through q with velocity x, pushed through the symmetry at p.
        let curve = |h: f64| {
            let m: DMatrix<f64> = q.matrix() + &x * h;
            SPDPoint::new_unchecked((&m + m.transpose()) * 0.5)
        };
        let plus = geodesic_symmetry(&p, &curve(eps));
        let minus = geodesic_symmetry(&p, &curve(-eps));
        let velocity = (plus.matrix() - minus.matrix()) / (2.0 * eps);
        let image = geodesic_symmetry(&p, &q);
        let speed_before = trace_metric(&q, &x, &x).unwrap();
        let speed_after = trace_metric(&image, &velocity, &velocity).unwrap();
        let rel = (speed_before - speed_after).abs() / speed_before;
        assert!(
            rel < 1e-6,
            "finite-difference isometry residual {rel:.3e} (speeds {speed_before} vs {speed_after})"
        );
    }

    #[test]
    fn udu_factors_reassemble_and_have_the_right_shape() {
        let mut rng = seeded_rng(706);
        for d in [2usize, 3, 5, 8] {
            for _ in 0..10 {
                let p = random_spd(&mut rng, d);
                let factors = udu_decompose(&p).unwrap();
                let residual = (factors.reassemble() - p.matrix()).amax();
                assert!(
                    residual < 1e-10,
                    "d={d}: UDU reassembly residual {residual:.3e}"
                );
                for i in 0..d {
                    assert!((factors.u[(i, i)] - 1.0).abs() < 1e-14);
                    assert!(factors.diag[i] > 0.0);
                    for j in 0..i {
                        assert_eq!(factors.u[(i, j)], 0.0);
                    }
                }
            }
        }
    }

    /// For `p = (a n)(a n)^T` the UDU diagonal is exactly `a^2`: conjugating
    /// the torus factor through the upper factor leaves the diagonal alone.
    #[test]
    fn udu_diagonal_reads_off_the_torus_coordinates() {
        let mut rng = seeded_rng(707);
        for d in [2usize, 3, 5] {
            for _ in 0..20 {
                let a_log = random_a_log(&mut rng, d);
                let n = random_unit_upper(&mut rng, d);
                let a = DMatrix::from_diagonal(&a_log.map(f64::exp));
                let an = &a * &n;
                let p = SPDPoint::new_unchecked(&an * an.transpose());
                let factors = udu_decompose(&p).unwrap();
                for i in 0..d {
                    let expected = (2.0 * a_log[i]).exp();
                    let rel = (factors.diag[i] / expected - 1.0).abs();
                    assert!(
                        rel < 1e-10,
                        "d={d}: diagonal {i} off by rel {rel:.3e}"
                    );
                }
            }
        }
    }

    #[test]
    fn membership_accepts_orbit_points_and_rejects_perturbations() {
        let mut rng = seeded_rng(708);
        for d in [2usize, 3, 5] {
            for _ in 0..20 {
                let a_log = random_a_log(&mut rng, d);
                let n = random_unit_upper(&mut rng, d);
                let k = random_rotation(&mut rng, d);
                let p_flat = n_orbit_point(&a_log, &n).unwrap();
                // Rotate the whole picture by k: p = k p_flat k^T lies on the
                // level set with frame k.
                let k_sl = SLMatrix::new(k.clone()).unwrap();
                let p = congruence_action(&k_sl, &p_flat);
                assert!(
                    horocycle_membership_spd(&p, &k, &a_log, 1e-8).unwrap(),
                    "d={d}: orbit point rejected"
                );
                // Any visible diagonal perturbation must break membership.
                let mut bumped = a_log.clone();
                bumped[0] += 1e-3;
                bumped[d - 1] -= 1e-3;
                assert!(
                    !horocycle_membership_spd(&p, &k, &bumped, 1e-8).unwrap(),
                    "d={d}: perturbed level set accepted"
                );
            }
        }
    }

    /// Worked closed form in dimension 2: the orbit point of `(u, -u)` and
    /// shear `v` is `[[e^{2u}(1 + v^2), v], [v, e^{-2u}]]`.
    #[test]
    fn two_dimensional_orbit_point_matches_hand_computation() {
        let u = 0.3f64;
        let v = -0.7f64;
        let a_log = DVector::from_vec(vec![u, -u]);
        let mut n = DMatrix::identity(2, 2);
        n[(0, 1)] = v;
        let p = n_orbit_point(&a_log, &n).unwrap();
        let expected = DMatrix::from_row_slice(
            2,
            2,
            &[
                (2.0 * u).exp() * (1.0 + v * v),
                v,
                v,
                (-2.0 * u).exp(),
            ],
        );
        assert!(
            (p.matrix() - &expected).amax() < 1e-14,
            "orbit point {:?} vs hand computation {:?}",
            p.matrix(),
            expected
        );
    }

    #[test]
    fn n_orbit_point_agrees_with_direct_congruence() {
        let mut rng = seeded_rng(709);
        for d in [2usize, 3, 5, 8] {
            for _ in 0..10 {
                let a_log = random_a_log(&mut rng, d);
                let n = random_unit_upper(&mut rng, d);
                let closed = n_orbit_point(&a_log, &n).unwrap();
                let a = DMatrix::from_diagonal(&a_log.map(f64::exp));
                let an = &a * &n;
                let direct = &an * an.transpose();
                assert!(
                    (closed.matrix() - &direct).amax() < 1e-12,
                    "d={d}: closed form deviates from (an)(an)^T"
                );
            }
        }
    }

    /// Rotating a point preserves its spectrum (iso-spectrality of the
    /// rotation orbit).
    #[test]
    fn rotation_orbits_are_iso_spectral() {
        let mut rng = seeded_rng(710);
        for d in [2usize, 3, 5] {
            let p = random_spd(&mut rng, d);
            let spectrum = p.eigenvalues();
            for _ in 0..10 {
                let k = SLMatrix::new(random_rotation(&mut rng, d)).unwrap();
                let rotated = congruence_action(&k, &p);
                let moved_spectrum = rotated.eigenvalues();
                let gap = (&spectrum - &moved_spectrum).amax();
                assert!(
                    gap < 1e-10,
                    "d={d}: spectrum moved by {gap:.3e} under rotation"
                );
            }
        }
    }

    /// The upper and lower shear orbits through a common torus point meet
    /// only near that point (dimension 2): membership in both level sets
    /// pins the point.
    #[test]
    fn opposite_shear_orbits_intersect_only_at_the_torus_point() {
        let u = 0.25f64;
        let a_log = DVector::from_vec(vec![u, -u]);
        let a_sq = DMatrix::from_diagonal(&(2.0 * a_log.clone()).map(f64::exp));
        // Upper orbit: points with UDU diagonal exp(2 a_log); lower orbit:
        // reverse-ordered diagonal read through the flipped frame. Sampling
        // the upper orbit, only v = 0 should satisfy the lower condition.
        for &v in &[-0.5, -0.1, 0.0, 0.1, 0.5] {
            let mut n = DMatrix::identity(2, 2);
            n[(0, 1)] = v;
            let p = n_orbit_point(&a_log, &n).unwrap();
            // Lower-triangular level data: UDL diagonal = diagonal of the
            // UDU factorization of the index-reversed matrix, reversed back.
            let d = 2;
            let reversed = DMatrix::from_fn(d, d, |i, j| p.matrix()[(d - 1 - i, d - 1 - j)]);
            let rev_point = SPDPoint::new_unchecked(reversed);
            let rev_factors = udu_decompose(&rev_point).unwrap();
            let udl_diag = DVector::from_vec(vec![rev_factors.diag[1], rev_factors.diag[0]]);
            let on_lower = (0..2).all(|i| (udl_diag[i] / a_sq[(i, i)] - 1.0).abs() < 1e-8);
            if v == 0.0 {
                assert!(on_lower, "torus point must lie on both orbits");
            } else {
                assert!(
                    !on_lower,
                    "shear v = {v} lies on both orbits; they should meet only at the torus point"
                );
            }
        }
    }
}
