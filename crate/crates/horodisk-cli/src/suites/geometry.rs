//! Boundary-geometry suite: the cocycle and invariance laws of the
//! composite distance, normalization and transformation of the visual
//! measures, and the Euclidean circle shape of the basic horocycle.

use horodisk::disk::{
    boundary_action, boundary_density, horocycle_params_to_circle, mobius, BoundaryPoint,
    DiskPoint, HorocycleParam,
};
use horodisk::disk::{composite_distance, point_from_na};
use horodisk::lie::SU11Element;
use horodisk::numerics::{seeded_rng, PeriodicGrid};
use num_complex::Complex64;
use rand::Rng;
use std::f64::consts::TAU;

use crate::config::{RunConfig, DEFAULT_GRID_BETA};
use crate::report::CheckRecord;
use crate::suites::{base_normalization, calibration_stanza, SuiteError, SuiteRun};

const SUITE: &str = "geometry";
/// Pointwise identities of the composite distance.
const DISTANCE_TOL: f64 = 1e-10;
/// Quadrature-based measure identities.
const MEASURE_TOL: f64 = 1e-8;
/// Distance of the shear orbit from its Euclidean circle.
const CIRCLE_TOL: f64 = 1e-10;
const DISTANCE_DRAWS: usize = 50;
const MEASURE_DRAWS: usize = 10;
/// Node counts for the boundary quadratures. The integrands are smooth and
/// periodic, so the rectangle rule converges spectrally; the density draws
/// below contract by at most about 0.976 per Fourier mode, which these
/// counts resolve past the tolerance with a wide margin.
const MASS_NODES: usize = 2048;
const DENSITY_NODES: usize = 4096;

fn random_point(rng: &mut impl Rng, max_radius: f64) -> DiskPoint {
    let r = rng.random_range(0.0..max_radius);
    let phi = rng.random_range(0.0..TAU);
    DiskPoint::new(Complex64::from_polar(r, phi)).expect("interior point")
}

fn random_element(rng: &mut impl Rng) -> SU11Element {
    SU11Element::rotation(rng.random_range(0.0..TAU))
        * SU11Element::boost(rng.random_range(-0.8..0.8))
        * SU11Element::shear(rng.random_range(-1.2..1.2))
}

/// A seeded trigonometric polynomial, smooth test content for the boundary
/// quadratures.
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

fn cocycle_record(rng: &mut impl Rng, tol: f64) -> CheckRecord {
    let mut worst: f64 = 0.0;
    for _ in 0..DISTANCE_DRAWS {
        let x = random_point(rng, 0.8);
        let y = random_point(rng, 0.8);
        let z = random_point(rng, 0.8);
        let b = BoundaryPoint::new(rng.random_range(0.0..TAU));
        let direct = composite_distance(&x, &z, &b);
        let through = composite_distance(&x, &y, &b) + composite_distance(&y, &z, &b);
        worst = worst.max((direct - through).abs());
    }
    CheckRecord::new(
        SUITE,
        "geometry-cocycle-identity",
        "composite-distance-cocycle",
        worst,
        0.0,
        worst,
        tol,
    )
}

fn invariance_record(rng: &mut impl Rng, tol: f64) -> CheckRecord {
    let mut worst: f64 = 0.0;
    for _ in 0..DISTANCE_DRAWS {
        let x = random_point(rng, 0.8);
        let y = random_point(rng, 0.8);
        let b = BoundaryPoint::new(rng.random_range(0.0..TAU));
        let g = random_element(rng);
        let before = composite_distance(&x, &y, &b);
        let after = composite_distance(&mobius(&g, &x), &mobius(&g, &y), &boundary_action(&g, &b));
        worst = worst.max((before - after).abs());
    }
    CheckRecord::new(
        SUITE,
        "geometry-isometry-invariance",
        "composite-distance-invariance",
        worst,
        0.0,
        worst,
        tol,
    )
}

fn visual_mass_record(rng: &mut impl Rng) -> CheckRecord {
    let grid = PeriodicGrid::new(MASS_NODES).expect("positive node count");
    let mut points = vec![
        DiskPoint::origin(),
        point_from_na(0.0, 0.9),
        point_from_na(-1.2, -0.4),
    ];
    for _ in 0..MEASURE_DRAWS {
        points.push(random_point(rng, 0.85));
    }
    let mut worst: f64 = 0.0;
    for x in &points {
        let mut mass = 0.0;
        for i in 0..grid.len() {
            let b = BoundaryPoint::new(grid.node(i));
            mass += boundary_density(x, &b) * grid.normalized_weight();
        }
        worst = worst.max((mass - 1.0).abs());
    }
    CheckRecord::new(
        SUITE,
        "geometry-visual-mass",
        "visual-measure-normalization",
        worst,
        0.0,
        worst,
        MEASURE_TOL,
    )
}

/// Change of variables for the base visual measure: integrating a moved
/// observable against it equals integrating the observable against the
/// density of the moved measure.
fn quasi_invariance_record(rng: &mut impl Rng) -> CheckRecord {
    let grid = PeriodicGrid::new(DENSITY_NODES).expect("positive node count");
    let mut worst: f64 = 0.0;
    for _ in 0..MEASURE_DRAWS {
        let g = random_element(rng);
        let f = trig_polynomial(rng);
        let g_o = mobius(&g, &DiskPoint::origin());
        let mut lhs = 0.0;
        let mut rhs = 0.0;
        for i in 0..grid.len() {
            let b = BoundaryPoint::new(grid.node(i));
            lhs += f(boundary_action(&g, &b).angle()) * grid.normalized_weight();
            rhs += f(b.angle()) * boundary_density(&g_o, &b) * grid.normalized_weight();
        }
        worst = worst.max((lhs - rhs).abs());
    }
    CheckRecord::new(
        SUITE,
        "geometry-measure-quasi-invariance",
        "boundary-measure-pushforward",
        worst,
        0.0,
        worst,
        MEASURE_TOL,
    )
}

/// Dual relation with a second observation point: pushing the observable
/// forward under the isometry rebases the observer.
fn dual_relation_record(rng: &mut impl Rng) -> CheckRecord {
    let grid = PeriodicGrid::new(DENSITY_NODES).expect("positive node count");
    let mut worst: f64 = 0.0;
    for _ in 0..MEASURE_DRAWS {
        let g = random_element(rng);
        let x = random_point(rng, 0.6);
        let f = trig_polynomial(rng);
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
        worst = worst.max((lhs - rhs).abs());
    }
    CheckRecord::new(
        SUITE,
        "geometry-dual-relation",
        "observer-rebase",
        worst,
        0.0,
        worst,
        MEASURE_TOL,
    )
}

/// The shear orbit of the origin is the Euclidean circle through the origin
/// tangent at the base boundary point: center one half, squared radius one
/// quarter.
fn horocycle_circle_record() -> CheckRecord {
    let h = HorocycleParam::new(BoundaryPoint::new(0.0), 0.0);
    let circle = horocycle_params_to_circle(&h, &DiskPoint::origin()).expect("unit tangent circle");
    let center_defect = (circle.center() - Complex64::new(0.5, 0.0)).norm();
    let radius_defect = (circle.radius() - 0.5).abs();
    let mut worst = center_defect.max(radius_defect);
    for k in 0..=200 {
        let s = -30.0 + 60.0 * k as f64 / 200.0;
        let z = mobius(&SU11Element::shear(s), &DiskPoint::origin());
        worst = worst.max(circle.deviation(z.z()).abs());
    }
    CheckRecord::new(
        SUITE,
        "geometry-horocycle-circle",
        "basic-horocycle-circle",
        worst,
        0.0,
        worst,
        CIRCLE_TOL,
    )
}

pub fn run(cfg: &RunConfig) -> Result<SuiteRun, SuiteError> {
    let tol = cfg.tol_geometry.unwrap_or(DISTANCE_TOL);
    let mut rng = seeded_rng(cfg.seed);
    let records = vec![
        cocycle_record(&mut rng, tol),
        invariance_record(&mut rng, tol),
        visual_mass_record(&mut rng),
        quasi_invariance_record(&mut rng),
        dual_relation_record(&mut rng),
        horocycle_circle_record(),
    ];
    let grids = cfg.transform_grids(DEFAULT_GRID_BETA)?;
    Ok(SuiteRun {
        environment: crate::suites::environment(cfg, &grids),
        calibration: calibration_stanza(&base_normalization(cfg)?),
        records,
    })
}
