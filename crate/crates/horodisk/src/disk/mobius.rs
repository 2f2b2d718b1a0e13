//! The Mobius action of `SU(1, 1)` on the disk and its boundary.

use super::point::{BoundaryPoint, DiskPoint};
use crate::lie::SU11Element;

/// `g[z] = (a z + b) / (conj(b) z + conj(a))`.
///
/// Isometries preserve the open disk exactly, so no re-validation is needed
/// on the output.
pub fn mobius(g: &SU11Element, x: &DiskPoint) -> DiskPoint {
    let z = x.z();
    let numerator = g.a() * z + g.b();
    let denominator = g.b().conj() * z + g.a().conj();
    DiskPoint::new_unchecked(numerator / denominator)
}

/// The same fractional-linear map applied to a boundary point `e^{iβ}`.
///
/// The denominator never vanishes on the circle because
/// `|conj(b) z| = |b| < |a|` there.
pub fn mobius_boundary(g: &SU11Element, b: &BoundaryPoint) -> BoundaryPoint {
    let z = b.unit();
    let numerator = g.a() * z + g.b();
    let denominator = g.b().conj() * z + g.a().conj();
    BoundaryPoint::new((numerator / denominator).arg())
}
