//! The transform stack over the disk.
//!
//! Functions on the disk are analyzed along horocycles. The stack links four
//! pictures of the same function and keeps the normalizations between them
//! explicit:
//!
//! * [`radon_transform`] integrates over horocycles, producing a table over
//!   boundary angle `β` and height `τ`.
//! * [`spectral_transform`] pairs against the boundary exponentials
//!   `e^{(1-iλ)A}`, producing a table over `β` and frequency `λ`; composing
//!   the horocycle picture with [`abel_normalize`] and a Fourier transform in
//!   `τ` reaches the same table, which is the sharpest cross-check in the
//!   crate (two very different quadratures, one answer).
//! * [`multiplier`] is the even frequency weight `1/(√2 |c(λ)|)` built from
//!   the meromorphic density [`harish_chandra_c`]; conjugating the horocycle
//!   picture by it gives the unitarized operator [`unitarize`].
//! * [`MeasureNormalization`] carries the three measured constants tying the
//!   pictures together; [`calibrate_measures`] reproduces them from scratch.
//!
//! The test-function class behind every numeric claim is [`TestFunction`]:
//! sums of truncated Gaussians in solvable coordinates, moved around the
//! disk by an isometry frame, so supports are compact and every transform
//! above has a finite, fully resolved quadrature.

mod cfun;
mod grids;
mod measures;
mod operators;
mod plancherel;
mod radon;
mod spectral;
mod symmetry;
mod test_function;

pub use cfun::{harish_chandra_c, multiplier, plancherel_density};
pub use grids::{HorocycleFunction, SpectralFunction, TransformGrids};
pub use measures::{
    calibrate_height_scale, calibrate_measures, calibrate_shear_mass,
    calibrate_shear_mass_with_truncation, MeasureNormalization, SHEAR_TAIL_TOLERANCE,
    SHEAR_TRUNCATION,
};
pub use operators::{
    abel_normalize, pullback_relabels, spectral_from_radon, unitarize, unitarize_pullback,
};
pub use plancherel::{
    spectral_norm_sq, spectral_pairing, x_inner_product, x_norm_sq, xi_norm_sq, SpectralWeight,
};
pub use radon::{radon_at_reference, radon_profile, radon_row, radon_transform};
pub use spectral::{composite_distance_na, spectral_transform};
pub use symmetry::{
    default_probes, horocycle_range_defect, spectral_range_defect, RangeDefect,
};
pub use test_function::{Profile, TestFunction, SUPPORT_RADIUS_SIGMAS};

use thiserror::Error;

use crate::numerics::NumericsError;

/// Errors produced by the transform stack.
#[derive(Debug, Error)]
pub enum TransformError {
    /// A quadrature did not meet its internal agreement or tail criteria.
    #[error("quadrature under-resolved: {0}")]
    QuadratureUnderresolved(String),
    /// The meromorphic intertwining density has a pole at `λ = 0`; the
    /// absolute-square weight stays finite there and should be used instead.
    #[error("intertwining density pole at λ = 0; use the absolute-square weight")]
    PoleAtZero,
    /// Test functions carry different isometry frames and cannot be combined
    /// componentwise.
    #[error("test functions carry different frames; rebase them before combining")]
    MismatchedFrames,
    /// A grid, profile or table description violates its invariants.
    #[error("invalid transform specification: {0}")]
    InvalidSpec(String),
    /// A lower-level numerical kernel failed.
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}
