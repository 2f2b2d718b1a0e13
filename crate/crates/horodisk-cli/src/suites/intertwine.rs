//! Intertwining suite: moving the function by a rotation, boost or shear
//! and transforming equals transforming first and relabeling the horocycle
//! parameters, for both the horocycle transform and its unitarized form.

use horodisk::disk::HorocycleParam;
use horodisk::lie::SU11Element;
use horodisk::transforms::{
    pullback_relabels, radon_profile, radon_transform, unitarize, unitarize_pullback,
    xi_norm_sq, HorocycleFunction, MeasureNormalization, TestFunction, TransformGrids,
};
use num_complex::Complex64;

use crate::config::RunConfig;
use crate::report::CheckRecord;
use crate::suites::{base_normalization, calibration_stanza, SuiteError, SuiteRun};

const SUITE: &str = "intertwine";
/// Relative grid distance between the two evaluation orders.
const TOL: f64 = 1e-3;
/// The relations hold row by row, so few boundary rows suffice.
const BETA_DEFAULT: usize = 16;

/// One generator from each factor of the isometry group.
fn generators() -> [(&'static str, SU11Element); 3] {
    [
        ("rotation", SU11Element::rotation(0.9)),
        ("boost", SU11Element::boost(0.5)),
        ("shear", SU11Element::shear(-0.6)),
    ]
}

/// Relative distance in the invariant grid norm on horocycle tables.
fn relative_distance(
    lhs: &HorocycleFunction,
    rhs: &HorocycleFunction,
    norms: &MeasureNormalization,
) -> f64 {
    let rows = lhs
        .rows()
        .iter()
        .zip(rhs.rows())
        .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
        .collect();
    let diff = HorocycleFunction::new(*lhs.beta_grid(), lhs.tau_grid().clone(), rows)
        .expect("grids match by construction");
    (xi_norm_sq(&diff, norms) / xi_norm_sq(rhs, norms)).sqrt()
}

/// The relabeled horocycle transform `(β, τ) ↦ ℛf(g⁻¹⟨β⟩, τ + shift)`,
/// evaluated exactly at the shifted parameters.
fn relabeled_radon(
    f: &TestFunction,
    g: &SU11Element,
    grids: &TransformGrids,
    norms: &MeasureNormalization,
) -> Result<HorocycleFunction, SuiteError> {
    let tau = grids.tau();
    let rows = pullback_relabels(g, grids.beta())
        .into_iter()
        .map(|(pulled, shift)| {
            (0..tau.len())
                .map(|k| {
                    let h = HorocycleParam::new(pulled, tau.node(k) + shift);
                    Complex64::new(radon_profile(f, &h, norms), 0.0)
                })
                .collect()
        })
        .collect();
    Ok(HorocycleFunction::new(*grids.beta(), tau.clone(), rows)?)
}

pub fn run(cfg: &RunConfig) -> Result<SuiteRun, SuiteError> {
    let tol = cfg.tol_intertwine.unwrap_or(TOL);
    let norms = base_normalization(cfg)?;
    let grids = cfg.transform_grids(BETA_DEFAULT)?;
    let f = TestFunction::reference_bump();
    let mut records = Vec::new();
    for (label, g) in generators() {
        let moved = f.transformed(&g);
        let lhs = radon_transform(&moved, &grids, &norms)?;
        let rhs = relabeled_radon(&f, &g, &grids, &norms)?;
        let distance = relative_distance(&lhs, &rhs, &norms);
        records.push(CheckRecord::new(
            SUITE,
            format!("intertwine-radon-{label}"),
            "radon-equivariance",
            distance,
            0.0,
            distance,
            tol,
        ));

        let unitarized_lhs = unitarize(&lhs, &grids)?;
        let unitarized_rhs = unitarize_pullback(&f, &g, &grids, &norms)?;
        let distance = relative_distance(&unitarized_lhs, &unitarized_rhs, &norms);
        records.push(CheckRecord::new(
            SUITE,
            format!("intertwine-unitarized-{label}"),
            "unitarized-equivariance",
            distance,
            0.0,
            distance,
            tol,
        ));
    }
    Ok(SuiteRun {
        environment: crate::suites::environment(cfg, &grids),
        calibration: calibration_stanza(&norms),
        records,
    })
}
