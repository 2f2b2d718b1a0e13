//! The open unit disk as the homogeneous space of `SU(1, 1)`.
//!
//! Points move by Mobius transformations `g[z] = (a z + b) / (conj(b) z +
//! conj(a))`; the boundary circle carries the angle coordinate `β` with the
//! rotation `k_φ` acting as `β ↦ β + 2φ`. Horocycles are parametrized by a
//! boundary point and a signed height `τ` relative to a base point, measured
//! by the composite distance (the signed length of the geodesic segment from
//! the base point to the horocycle through the other point). Boundary
//! densities give the harmonic measures seen from interior points.

mod density;
mod horocycle;
mod mobius;
mod point;
mod section;

pub use density::{
    boundary_density, boundary_measure_pushforward_density, poisson_kernel_diagnostic,
};
pub use horocycle::{
    horocycle_group_action, horocycle_membership, horocycle_membership_with_tol,
    horocycle_params_to_circle, rereference_horocycle, EuclideanCircle, HorocycleParam,
    DEFAULT_MEMBERSHIP_TOL,
};
pub use mobius::{mobius, mobius_boundary};
pub use point::{BoundaryPoint, DiskPoint};
pub use section::{
    boundary_action, borel_section, composite_distance, composite_distance_to_origin,
    hyperbolic_distance, hyperbolic_distance_to_origin, na_coordinates, point_from_na,
};

use thiserror::Error;

/// Errors produced by the disk-geometry layer.
#[derive(Debug, Error)]
pub enum GeometryError {
    /// A point whose modulus is too close to (or beyond) the boundary.
    #[error("point with |z| = {modulus} is outside the admissible open disk")]
    PointOutsideDisk { modulus: f64 },
    /// A circle description violating the boundary-tangency invariant.
    #[error("invalid horocycle circle: {0}")]
    InvalidCircle(String),
}
