//! Interior and boundary points of the unit disk.

use num_complex::Complex64;
use std::f64::consts::TAU;

use super::GeometryError;
use crate::lie::SU11Element;

/// Margin below 1 required of interior points at construction, so that
/// downstream hyperbolic quantities stay finite.
const BOUNDARY_MARGIN: f64 = 1e-12;

/// A point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    z: Complex64,
}

impl DiskPoint {
    /// Admits points with `|z| < 1 - 1e-12`.
    pub fn new(z: Complex64) -> Result<Self, GeometryError> {
        let modulus = z.norm();
        if modulus >= 1.0 - BOUNDARY_MARGIN {
            return Err(GeometryError::PointOutsideDisk { modulus });
        }
        Ok(Self { z })
    }

    /// Used by group actions, which preserve the open disk exactly; callers
    /// must pass images of admissible points under isometries.
    pub(crate) fn new_unchecked(z: Complex64) -> Self {
        Self { z }
    }

    pub fn origin() -> Self {
        Self {
            z: Complex64::new(0.0, 0.0),
        }
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }
}

/// A boundary point `e^{iβ}`, stored through the normalized angle
/// `β ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    beta: f64,
}

impl BoundaryPoint {
    pub fn new(beta: f64) -> Self {
        let wrapped = beta.rem_euclid(TAU);
        Self {
            beta: if wrapped >= TAU { 0.0 } else { wrapped },
        }
    }

    pub fn angle(&self) -> f64 {
        self.beta
    }

    pub fn unit(&self) -> Complex64 {
        Complex64::cis(self.beta)
    }

    /// The rotation `k_{β/2}` representing this boundary point; the angle
    /// halving reflects that rotations act on the boundary with doubled
    /// angle.
    pub fn rotation_representative(&self) -> SU11Element {
        SU11Element::rotation(self.beta / 2.0)
    }
}
