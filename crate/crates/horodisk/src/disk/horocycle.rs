//! Horocycles: level sets of the composite distance.
//!
//! The horocycle with parameters `(b, τ)` relative to a base point `x` is the
//! set `{z : A_x(z, b) = τ}`. As a Euclidean object it is a circle tangent to
//! the unit circle at `b`; relative to the origin, the parameters `(β, τ)`
//! give center `e^{iβ} E / (1 + E)` and radius `1 / (1 + E)` with
//! `E = e^{2τ}`.

use num_complex::Complex64;

use super::point::{BoundaryPoint, DiskPoint};
use super::section::{boundary_action, composite_distance};
use super::GeometryError;
use crate::disk::mobius;
use crate::lie::SU11Element;

/// Default tolerance for horocycle membership tests.
pub const DEFAULT_MEMBERSHIP_TOL: f64 = 1e-9;

/// Tolerance for the boundary-tangency invariant of horocycle circles.
const TANGENCY_TOL: f64 = 1e-10;

/// Horocycle parameters: boundary point and signed height.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HorocycleParam {
    pub b: BoundaryPoint,
    pub tau: f64,
}

impl HorocycleParam {
    pub fn new(b: BoundaryPoint, tau: f64) -> Self {
        Self { b, tau }
    }
}

/// A Euclidean circle inside the closed disk, tangent to the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanCircle {
    center: Complex64,
    radius: f64,
}

impl EuclideanCircle {
    /// Admits circles tangent to the unit circle from inside:
    /// `|center| + radius = 1` within 1e-10.
    pub fn new(center: Complex64, radius: f64) -> Result<Self, GeometryError> {
        if !(radius > 0.0) {
            return Err(GeometryError::InvalidCircle(format!(
                "radius {radius} must be positive"
            )));
        }
        let defect = (center.norm() + radius - 1.0).abs();
        if defect > TANGENCY_TOL {
            return Err(GeometryError::InvalidCircle(format!(
                "|center| + radius = {} is not 1 within {TANGENCY_TOL:.1e}",
                center.norm() + radius
            )));
        }
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> Complex64 {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Distance from `z` to the circle (as a curve).
    pub fn deviation(&self, z: Complex64) -> f64 {
        ((z - self.center).norm() - self.radius).abs()
    }

    pub fn contains(&self, z: Complex64, tol: f64) -> bool {
        self.deviation(z) <= tol
    }
}

/// The Euclidean circle realizing the horocycle `(h.b, h.tau)` relative to
/// the base point `x`.
///
/// The parameters are first re-referenced to the origin (adding
/// `A_o(x, h.b)` to the height), where the circle has the closed form above.
pub fn horocycle_params_to_circle(
    h: &HorocycleParam,
    x: &DiskPoint,
) -> Result<EuclideanCircle, GeometryError> {
    let tau_origin = h.tau + composite_distance(&DiskPoint::origin(), x, &h.b);
    let e = (2.0 * tau_origin).exp();
    let center = h.b.unit() * (e / (1.0 + e));
    let radius = 1.0 / (1.0 + e);
    EuclideanCircle::new(center, radius)
}

/// Whether `z` lies on the horocycle `(h, x)` within the default tolerance,
/// measured on the composite distance.
pub fn horocycle_membership(z: &DiskPoint, h: &HorocycleParam, x: &DiskPoint) -> bool {
    horocycle_membership_with_tol(z, h, x, DEFAULT_MEMBERSHIP_TOL)
}

pub fn horocycle_membership_with_tol(
    z: &DiskPoint,
    h: &HorocycleParam,
    x: &DiskPoint,
    tol: f64,
) -> bool {
    (composite_distance(x, z, &h.b) - h.tau).abs() <= tol
}

/// Pushes a horocycle forward by an isometry: the image of `(h, x)` under
/// `g` is the horocycle with unchanged height, boundary point `g⟨b⟩`, and
/// base point `g[x]`.
pub fn horocycle_group_action(
    g: &SU11Element,
    h: &HorocycleParam,
    x: &DiskPoint,
) -> (HorocycleParam, DiskPoint) {
    (
        HorocycleParam::new(boundary_action(g, &h.b), h.tau),
        mobius(g, x),
    )
}

/// Re-expresses the horocycle `(h, x)` relative to a new base point `y`:
/// the boundary point is unchanged and the height gains `A_y(x, h.b)`.
pub fn rereference_horocycle(
    h: &HorocycleParam,
    x: &DiskPoint,
    y: &DiskPoint,
) -> HorocycleParam {
    HorocycleParam::new(h.b, h.tau + composite_distance(y, x, &h.b))
}
