//! Group-structure suite: Iwasawa reassembly for the unimodular groups,
//! the closed-form half-sum functional against the root data, and the
//! modular function as homomorphism and adjoint determinant.

use horodisk::lie::{
    iwasawa_kan_sl, iwasawa_kan_su11, iwasawa_nak_sl, iwasawa_nak_su11, modular_an_sl,
    restricted_roots_sl, rho_sl, SLMatrix, SU11Element,
};
use horodisk::numerics::seeded_rng;
use nalgebra::{DMatrix, DVector};
use rand::Rng;
use std::f64::consts::TAU;

use crate::config::{RunConfig, DEFAULT_GRID_BETA};
use crate::report::CheckRecord;
use crate::suites::{base_normalization, calibration_stanza, SuiteError, SuiteRun};

const SUITE: &str = "structure";
/// Relative reassembly defect allowed per decomposition.
const REASSEMBLY_TOL: f64 = 1e-12;
/// Agreement between the closed-form half-sum and the root half-sum.
const HALF_SUM_TOL: f64 = 1e-12;
/// Modular homomorphism and adjoint determinant agreement.
const MODULAR_TOL: f64 = 1e-10;
const ELEMENTS_PER_GROUP: usize = 1000;
const FUNCTIONAL_DRAWS: usize = 200;
const ADJOINT_DRAWS: usize = 50;
const DIMS: [usize; 4] = [2, 3, 4, 6];

/// A seeded element of `SL(d, R)` with entries of moderate size. Determinants
/// too close to zero are redrawn so the rescaling cannot blow up the entries.
fn random_sl(rng: &mut impl Rng, d: usize) -> SLMatrix {
    loop {
        let m = DMatrix::<f64>::from_fn(d, d, |_, _| rng.random_range(-1.0..1.0));
        if m.determinant().abs() < 0.05 {
            continue;
        }
        if let Ok(sl) = SLMatrix::renormalized(m) {
            return sl;
        }
    }
}

fn random_su11(rng: &mut impl Rng) -> SU11Element {
    SU11Element::rotation(rng.random_range(0.0..TAU))
        * SU11Element::boost(rng.random_range(-1.5..1.5))
        * SU11Element::shear(rng.random_range(-2.0..2.0))
}

/// A seeded torus logarithm: mean-free, entries of order one.
fn random_torus_log(rng: &mut impl Rng, d: usize) -> DVector<f64> {
    let mut h = DVector::from_fn(d, |_, _| rng.random_range(-0.8..0.8));
    let mean = h.iter().sum::<f64>() / d as f64;
    h.iter_mut().for_each(|x| *x -= mean);
    h
}

/// A seeded element of the upper-triangular subgroup, as `diag(exp a) * n`.
fn random_an(rng: &mut impl Rng, d: usize) -> (DVector<f64>, DMatrix<f64>) {
    let a_log = random_torus_log(rng, d);
    let mut g = DMatrix::zeros(d, d);
    for i in 0..d {
        g[(i, i)] = a_log[i].exp();
        for j in i + 1..d {
            g[(i, j)] = g[(i, i)] * rng.random_range(-1.0..1.0);
        }
    }
    (a_log, g)
}

/// The modular function read off a triangular matrix: exponential of twice
/// the half-sum functional at the logarithm of its diagonal.
fn modular_of_triangular(g: &DMatrix<f64>) -> Result<f64, SuiteError> {
    let a_log = DVector::from_fn(g.nrows(), |i, _| g[(i, i)].ln());
    Ok(modular_an_sl(&a_log)?)
}

fn sl_reassembly_records(
    rng: &mut impl Rng,
    tol: f64,
    records: &mut Vec<CheckRecord>,
) -> Result<(), SuiteError> {
    for d in DIMS {
        let mut worst_kan: f64 = 0.0;
        let mut worst_nak: f64 = 0.0;
        for _ in 0..ELEMENTS_PER_GROUP {
            let g = random_sl(rng, d);
            let scale = g.matrix().amax();
            let kan = iwasawa_kan_sl(g.matrix())?;
            worst_kan = worst_kan.max((kan.reassemble() - g.matrix()).amax() / scale);
            let nak = iwasawa_nak_sl(g.matrix())?;
            worst_nak = worst_nak.max((nak.reassemble() - g.matrix()).amax() / scale);
        }
        records.push(CheckRecord::new(
            SUITE,
            format!("structure-iwasawa-kan-sl{d}"),
            "iwasawa-decomposition",
            worst_kan,
            0.0,
            worst_kan,
            tol,
        ));
        records.push(CheckRecord::new(
            SUITE,
            format!("structure-iwasawa-nak-sl{d}"),
            "iwasawa-decomposition",
            worst_nak,
            0.0,
            worst_nak,
            tol,
        ));
    }
    Ok(())
}

fn su11_reassembly_records(rng: &mut impl Rng, tol: f64, records: &mut Vec<CheckRecord>) {
    let mut worst_kan: f64 = 0.0;
    let mut worst_nak: f64 = 0.0;
    for _ in 0..ELEMENTS_PER_GROUP {
        let g = random_su11(rng);
        let defect = |h: SU11Element| (h.a() - g.a()).norm().max((h.b() - g.b()).norm());
        worst_kan = worst_kan.max(defect(iwasawa_kan_su11(&g).reassemble()));
        worst_nak = worst_nak.max(defect(iwasawa_nak_su11(&g).reassemble()));
    }
    records.push(CheckRecord::new(
        SUITE,
        "structure-iwasawa-kan-su11",
        "iwasawa-decomposition",
        worst_kan,
        0.0,
        worst_kan,
        tol,
    ));
    records.push(CheckRecord::new(
        SUITE,
        "structure-iwasawa-nak-su11",
        "iwasawa-decomposition",
        worst_nak,
        0.0,
        worst_nak,
        tol,
    ));
}

fn half_sum_records(
    rng: &mut impl Rng,
    records: &mut Vec<CheckRecord>,
) -> Result<(), SuiteError> {
    for d in DIMS {
        let roots = restricted_roots_sl(d)?;
        let mut worst: f64 = 0.0;
        for _ in 0..FUNCTIONAL_DRAWS {
            let h = random_torus_log(rng, d);
            let closed = rho_sl(&h)?;
            let half_sum: f64 = roots
                .iter()
                .filter(|r| r.is_positive())
                .map(|r| r.multiplicity() as f64 * r.value(&h) / 2.0)
                .sum();
            worst = worst.max((closed - half_sum).abs());
        }
        records.push(CheckRecord::new(
            SUITE,
            format!("structure-rho-half-sum-sl{d}"),
            "half-sum-functional",
            worst,
            0.0,
            worst,
            HALF_SUM_TOL,
        ));
    }
    Ok(())
}

fn modular_records(rng: &mut impl Rng, records: &mut Vec<CheckRecord>) -> Result<(), SuiteError> {
    for d in DIMS {
        let mut worst: f64 = 0.0;
        for _ in 0..FUNCTIONAL_DRAWS {
            let (_, g1) = random_an(rng, d);
            let (_, g2) = random_an(rng, d);
            let product = &g1 * &g2;
            let joint = modular_of_triangular(&product)?;
            let split = modular_of_triangular(&g1)? * modular_of_triangular(&g2)?;
            worst = worst.max((joint - split).abs() / joint.abs());
        }
        records.push(CheckRecord::new(
            SUITE,
            format!("structure-modular-homomorphism-sl{d}"),
            "modular-function",
            worst,
            0.0,
            worst,
            MODULAR_TOL,
        ));
    }
    Ok(())
}

/// Basis of the triangular subalgebra: the simple coroot directions
/// `H_k = e_kk - e_(k+1)(k+1)` followed by the strictly upper positions.
fn triangular_basis(d: usize) -> Vec<DMatrix<f64>> {
    let mut basis = Vec::new();
    for k in 0..d - 1 {
        let mut h = DMatrix::zeros(d, d);
        h[(k, k)] = 1.0;
        h[(k + 1, k + 1)] = -1.0;
        basis.push(h);
    }
    for i in 0..d {
        for j in i + 1..d {
            let mut e = DMatrix::zeros(d, d);
            e[(i, j)] = 1.0;
            basis.push(e);
        }
    }
    basis
}

/// Coordinates of a triangular traceless matrix in [`triangular_basis`]:
/// partial sums of the diagonal recover the coroot coefficients.
fn triangular_coordinates(x: &DMatrix<f64>, d: usize) -> DVector<f64> {
    let dim = (d - 1) + d * (d - 1) / 2;
    let mut coords = DVector::zeros(dim);
    let mut partial = 0.0;
    for k in 0..d - 1 {
        partial += x[(k, k)];
        coords[k] = partial;
    }
    let mut slot = d - 1;
    for i in 0..d {
        for j in i + 1..d {
            coords[slot] = x[(i, j)];
            slot += 1;
        }
    }
    coords
}

fn adjoint_determinant_records(
    rng: &mut impl Rng,
    records: &mut Vec<CheckRecord>,
) -> Result<(), SuiteError> {
    for d in DIMS {
        let basis = triangular_basis(d);
        let dim = basis.len();
        let mut worst: f64 = 0.0;
        for _ in 0..ADJOINT_DRAWS {
            let (a_log, g) = random_an(rng, d);
            let inverse = g.clone().try_inverse().expect("triangular with positive diagonal");
            let mut ad = DMatrix::zeros(dim, dim);
            for (col, direction) in basis.iter().enumerate() {
                let image = &g * direction * &inverse;
                ad.set_column(col, &triangular_coordinates(&image, d));
            }
            let det = ad.determinant();
            // The modular function is the reciprocal of this determinant.
            let expected = modular_an_sl(&a_log)?.recip();
            worst = worst.max((det - expected).abs() / expected.abs());
        }
        records.push(CheckRecord::new(
            SUITE,
            format!("structure-ad-determinant-sl{d}"),
            "adjoint-determinant",
            worst,
            0.0,
            worst,
            MODULAR_TOL,
        ));
    }
    Ok(())
}

pub fn run(cfg: &RunConfig) -> Result<SuiteRun, SuiteError> {
    let tol = cfg.tol_structure.unwrap_or(REASSEMBLY_TOL);
    let mut rng = seeded_rng(cfg.seed);
    let mut records = Vec::new();
    sl_reassembly_records(&mut rng, tol, &mut records)?;
    su11_reassembly_records(&mut rng, tol, &mut records);
    half_sum_records(&mut rng, &mut records)?;
    modular_records(&mut rng, &mut records)?;
    adjoint_determinant_records(&mut rng, &mut records)?;
    let grids = cfg.transform_grids(DEFAULT_GRID_BETA)?;
    Ok(SuiteRun {
        environment: crate::suites::environment(cfg, &grids),
        calibration: calibration_stanza(&base_normalization(cfg)?),
        records,
    })
}
