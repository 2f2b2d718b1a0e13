//! Positive-definite matrix suite: forward-constructed flat-level-set
//! points are recognized, scaled-diagonal impostors are rejected, the UDU
//! factorization reassembles, and rotation orbits preserve spectra.

use horodisk::lie::SLMatrix;
use horodisk::numerics::seeded_rng;
use horodisk::spd::{
    congruence_action, horocycle_membership_spd, n_orbit_point, udu_decompose, SPDPoint,
};
use nalgebra::{DMatrix, DVector};
use rand::Rng;

use crate::config::{RunConfig, DEFAULT_GRID_BETA};
use crate::report::CheckRecord;
use crate::suites::{base_normalization, calibration_stanza, SuiteError, SuiteRun};

const SUITE: &str = "spd";
/// Componentwise tolerance for genuine membership; sits far above float
/// noise and far below the rejected perturbation.
const MEMBERSHIP_TOL: f64 = 1e-6;
/// Reassembly and spectrum agreement.
const RESIDUAL_TOL: f64 = 1e-10;
/// Relative diagonal scaling that must break membership.
const PERTURBATION: f64 = 1e-3;
const DIMS: [usize; 3] = [2, 3, 5];
const MEMBERSHIP_DRAWS: usize = 1000;
const FACTOR_DRAWS: usize = 1000;
const ORBIT_DRAWS: usize = 200;

fn random_torus_log(rng: &mut impl Rng, d: usize) -> DVector<f64> {
    let mut a = DVector::from_fn(d, |_, _| rng.random_range(-0.7..0.7));
    let mean = a.iter().sum::<f64>() / d as f64;
    a.iter_mut().for_each(|x| *x -= mean);
    a
}

fn random_unit_upper(rng: &mut impl Rng, d: usize) -> DMatrix<f64> {
    DMatrix::from_fn(d, d, |i, j| {
        if i == j {
            1.0
        } else if i < j {
            rng.random_range(-1.0..1.0)
        } else {
            0.0
        }
    })
}

/// A seeded special orthogonal matrix from the orthogonal factor of a
/// random decomposition, with the determinant sign folded into a column.
fn random_rotation(rng: &mut impl Rng, d: usize) -> DMatrix<f64> {
    loop {
        let m = DMatrix::<f64>::from_fn(d, d, |_, _| rng.random_range(-1.0..1.0));
        if m.determinant().abs() < 0.05 {
            continue;
        }
        let mut q = m.qr().q();
        if q.determinant() < 0.0 {
            let flipped = -q.column(0).clone_owned();
            q.set_column(0, &flipped);
        }
        return q;
    }
}

/// A seeded well-conditioned point, congruence image of the identity.
fn random_point(rng: &mut impl Rng, d: usize) -> SPDPoint {
    loop {
        let m = DMatrix::<f64>::from_fn(d, d, |_, _| rng.random_range(-1.0..1.0));
        if m.determinant().abs() < 0.05 {
            continue;
        }
        if let Ok(sl) = SLMatrix::renormalized(m) {
            let p = sl.matrix() * sl.matrix().transpose();
            if let Ok(point) = SPDPoint::new(p) {
                return point;
            }
        }
    }
}

/// The diagonal congruence that scales the leading two diagonal entries by
/// `1 + eps` and `1 / (1 + eps)`; unimodular, so the perturbed matrix is
/// still a valid point, but its level-set diagnostic moves by `eps` exactly.
fn perturbed_diagonal(p: &SPDPoint, eps: f64) -> SPDPoint {
    let d = p.dim();
    let mut scale = DMatrix::identity(d, d);
    scale[(0, 0)] = (1.0 + eps).sqrt();
    scale[(1, 1)] = 1.0 / (1.0 + eps).sqrt();
    let m = &scale * p.matrix() * &scale;
    SPDPoint::new(m).expect("unimodular congruence of a point")
}

pub fn run(cfg: &RunConfig) -> Result<SuiteRun, SuiteError> {
    let tol = cfg.tol_spd.unwrap_or(RESIDUAL_TOL);
    let mut rng = seeded_rng(cfg.seed);
    let mut records = Vec::new();
    for d in DIMS {
        let mut accepted = 0usize;
        let mut rejected = 0usize;
        for _ in 0..MEMBERSHIP_DRAWS {
            let a_log = random_torus_log(&mut rng, d);
            let n = random_unit_upper(&mut rng, d);
            let base = n_orbit_point(&a_log, &n)?;
            let k = random_rotation(&mut rng, d);
            let k_sl = SLMatrix::new(k.clone())?;
            let rotated = congruence_action(&k_sl, &base);
            if horocycle_membership_spd(&rotated, &k, &a_log, MEMBERSHIP_TOL)? {
                accepted += 1;
            }
            let identity = DMatrix::identity(d, d);
            let impostor = perturbed_diagonal(&base, PERTURBATION);
            if !horocycle_membership_spd(&impostor, &identity, &a_log, MEMBERSHIP_TOL)? {
                rejected += 1;
            }
        }
        let missed = (MEMBERSHIP_DRAWS - accepted) as f64;
        records.push(CheckRecord::new(
            SUITE,
            format!("spd-membership-forward-sl{d}"),
            "flat-level-set",
            accepted as f64,
            MEMBERSHIP_DRAWS as f64,
            missed,
            0.0,
        ));
        let slipped = (MEMBERSHIP_DRAWS - rejected) as f64;
        records.push(CheckRecord::new(
            SUITE,
            format!("spd-membership-perturbed-sl{d}"),
            "flat-level-set",
            rejected as f64,
            MEMBERSHIP_DRAWS as f64,
            slipped,
            0.0,
        ));

        let mut worst_udu: f64 = 0.0;
        for _ in 0..FACTOR_DRAWS {
            let p = random_point(&mut rng, d);
            let factors = udu_decompose(&p)?;
            worst_udu = worst_udu.max((factors.reassemble() - p.matrix()).amax());
        }
        records.push(CheckRecord::new(
            SUITE,
            format!("spd-udu-reassembly-sl{d}"),
            "udu-factorization",
            worst_udu,
            0.0,
            worst_udu,
            tol,
        ));

        let mut worst_spec: f64 = 0.0;
        for _ in 0..ORBIT_DRAWS {
            let p = random_point(&mut rng, d);
            let k = SLMatrix::new(random_rotation(&mut rng, d))?;
            let moved = congruence_action(&k, &p);
            let before = p.eigenvalues();
            let after = moved.eigenvalues();
            let scale = before.amax();
            worst_spec = worst_spec.max((after - before).amax() / scale);
        }
        records.push(CheckRecord::new(
            SUITE,
            format!("spd-k-orbit-isospectral-sl{d}"),
            "rotation-orbit-spectrum",
            worst_spec,
            0.0,
            worst_spec,
            tol,
        ));
    }
    let grids = cfg.transform_grids(DEFAULT_GRID_BETA)?;
    Ok(SuiteRun {
        environment: crate::suites::environment(cfg, &grids),
        calibration: calibration_stanza(&base_normalization(cfg)?),
        records,
    })
}
