//! Iwasawa structure for the unimodular groups behind the disk and matrix
//! models.
//!
//! Two families are covered:
//!
//! * [`sl`] — `SL(d, R)` with the maximal compact `SO(d)`, the diagonal
//!   torus and the unit upper-triangular subgroup. Decompositions come from
//!   orthogonal-triangular factorization, and the root-space layer exposes
//!   the restricted roots `α_{ij}(H) = H_i - H_j` with the half-sum used by
//!   modular functions.
//! * [`su11`] — `SU(1, 1)`, the isometry group of the unit disk, with the
//!   rotation, boost and parabolic one-parameter subgroups, both Iwasawa
//!   orders in closed form, and the Cayley transform between the disk and the
//!   upper half plane.

mod sl;
mod su11;

pub use sl::{
    iwasawa_kan_sl, iwasawa_nak_sl, modular_an_sl, restricted_roots_sl, rho_sl, simple_roots_sl,
    RestrictedRoot, SLIwasawaKAN, SLIwasawaNAK, SLMatrix,
};
pub use su11::{
    cayley, iwasawa_kan_su11, iwasawa_nak_su11, CayleyDirection, SU11Element, SU11Iwasawa,
    SU11IwasawaNAK,
};

use thiserror::Error;

/// Errors produced by the group-structure layer.
#[derive(Debug, Error)]
pub enum LieError {
    /// Determinant is not 1 within the admission tolerance.
    #[error("matrix determinant {det} is not 1 within {tolerance:.1e}")]
    NonUnimodular { det: f64, tolerance: f64 },
    /// A torus element whose logarithm does not sum to zero.
    #[error("diagonal logarithms sum to {trace:.3e}, expected 0")]
    TraceNotZero { trace: f64 },
    /// The matrix is not invertible (or too ill-conditioned to decompose).
    #[error("matrix is numerically singular")]
    Singular,
    /// An `SU(1, 1)` element violating `|a|^2 - |b|^2 = 1`.
    #[error("|a|^2 - |b|^2 = {value}, expected 1 within {tolerance:.1e}")]
    NotInGroup { value: f64, tolerance: f64 },
    /// A Cayley-transform argument outside the open source domain.
    #[error("argument outside the open {domain}: {detail}")]
    DomainViolation {
        domain: &'static str,
        detail: String,
    },
    /// Root index out of range or degenerate.
    #[error("invalid root indices ({i}, {j}) for dimension {d}")]
    InvalidRoot { i: usize, j: usize, d: usize },
    /// Dimension not supported by the requested operation.
    #[error("dimension {0} not supported: {1}")]
    BadDimension(usize, &'static str),
}
