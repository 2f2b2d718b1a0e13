//! `SL(d, R)`: Iwasawa decompositions, restricted roots and modular
//! functions.
//!
//! Conventions. `K = SO(d)` (rotations), `A` the positive diagonal torus
//! with unit determinant (stored through its entrywise logarithm, which sums
//! to zero), `N` the unit upper-triangular subgroup. The restricted roots of
//! the diagonal torus acting on strictly-upper matrix entries are
//! `α_{ij}(H) = H_i - H_j`; the positive ones have `i < j`, and the half-sum
//! of positive roots evaluates to `ρ(H) = Σ_j ((d+1)/2 - j) H_j`.

use nalgebra::{DMatrix, DVector};

use super::LieError;

/// Admission tolerance on `|det - 1|` for raw matrices entering the
/// decomposition routines.
const DET_ADMISSION_TOL: f64 = 1e-9;

/// Tolerance for the tighter invariant carried by [`SLMatrix`].
const DET_MEMBER_TOL: f64 = 1e-12;

/// Tolerance on `Σ a_log` for torus logarithms.
const TRACE_TOL: f64 = 1e-12;

/// A square real matrix certified to have determinant 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SLMatrix {
    m: DMatrix<f64>,
}

impl SLMatrix {
    /// Admits a matrix whose determinant is 1 within 1e-12.
    pub fn new(m: DMatrix<f64>) -> Result<Self, LieError> {
        if !m.is_square() || m.nrows() < 2 {
            return Err(LieError::BadDimension(
                m.nrows(),
                "need a square matrix of dimension at least 2",
            ));
        }
        let det = m.determinant();
        if (det - 1.0).abs() > DET_MEMBER_TOL {
            return Err(LieError::NonUnimodular {
                det,
                tolerance: DET_MEMBER_TOL,
            });
        }
        Ok(Self { m })
    }

    /// Rescales a matrix with positive determinant onto the det-1 slice.
    pub fn renormalized(m: DMatrix<f64>) -> Result<Self, LieError> {
        let det = m.determinant();
        if !(det > 0.0) {
            return Err(LieError::NonUnimodular {
                det,
                tolerance: DET_MEMBER_TOL,
            });
        }
        let d = m.nrows() as f64;
        Self::new(m * det.powf(-1.0 / d))
    }

    pub fn identity(d: usize) -> Self {
        Self {
            m: DMatrix::identity(d, d),
        }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.m
    }

    pub fn transpose(&self) -> Self {
        Self {
            m: self.m.transpose(),
        }
    }

    pub fn inverse(&self) -> Result<Self, LieError> {
        let inv = self.m.clone().try_inverse().ok_or(LieError::Singular)?;
        Ok(Self { m: inv })
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            m: &self.m * &other.m,
        }
    }
}

/// Iwasawa factors in `k a n` order: `g = k · exp(diag(a_log)) · n`.
#[derive(Debug, Clone)]
pub struct SLIwasawaKAN {
    /// Rotation factor, orthogonal with determinant 1.
    pub k: DMatrix<f64>,
    /// Logarithms of the positive diagonal factor; they sum to zero.
    pub a_log: DVector<f64>,
    /// Unit upper-triangular factor.
    pub n: DMatrix<f64>,
}

impl SLIwasawaKAN {
    pub fn reassemble(&self) -> DMatrix<f64> {
        let a = DMatrix::from_diagonal(&self.a_log.map(f64::exp));
        &self.k * a * &self.n
    }
}

/// Iwasawa factors in `n a k` order: `g = n · exp(diag(a_log)) · k`.
#[derive(Debug, Clone)]
pub struct SLIwasawaNAK {
    pub n: DMatrix<f64>,
    pub a_log: DVector<f64>,
    pub k: DMatrix<f64>,
}

impl SLIwasawaNAK {
    pub fn reassemble(&self) -> DMatrix<f64> {
        let a = DMatrix::from_diagonal(&self.a_log.map(f64::exp));
        &self.n * a * &self.k
    }
}

fn check_admissible(g: &DMatrix<f64>) -> Result<(), LieError> {
    if !g.is_square() || g.nrows() < 2 {
        return Err(LieError::BadDimension(
            g.nrows(),
            "need a square matrix of dimension at least 2",
        ));
    }
    let det = g.determinant();
    if (det - 1.0).abs() > DET_ADMISSION_TOL {
        return Err(LieError::NonUnimodular {
            det,
            tolerance: DET_ADMISSION_TOL,
        });
    }
    Ok(())
}

/// `g = k a n` via orthogonal-triangular factorization.
///
/// The triangular factor's diagonal is sign-normalized to be positive, which
/// makes the factors the unique Iwasawa ones: `k ∈ SO(d)`, `a` positive
/// diagonal with unit determinant, `n` unit upper-triangular.
pub fn iwasawa_kan_sl(g: &DMatrix<f64>) -> Result<SLIwasawaKAN, LieError> {
    check_admissible(g)?;
    let d = g.nrows();
    let qr = g.clone().qr();
    let mut k = qr.q();
    let mut r = qr.r();
    for i in 0..d {
        if r[(i, i)] < 0.0 {
            for j in 0..d {
                r[(i, j)] = -r[(i, j)];
                k[(j, i)] = -k[(j, i)];
            }
        }
        if !(r[(i, i)] > 0.0) {
            return Err(LieError::Singular);
        }
    }
    let a_log = DVector::from_fn(d, |i, _| r[(i, i)].ln());
    let mut n = r;
    for i in 0..d {
        let scale = (-a_log[i]).exp();
        for j in 0..d {
            n[(i, j)] *= scale;
        }
        n[(i, i)] = 1.0;
    }
    Ok(SLIwasawaKAN { k, a_log, n })
}

/// `g = n a k`, obtained from the `k a n` factorization of `g^{-1}`.
///
/// If `g^{-1} = k' a' n'` then `g = n'^{-1} a'^{-1} k'^T`, which is already
/// in `n a k` form.
pub fn iwasawa_nak_sl(g: &DMatrix<f64>) -> Result<SLIwasawaNAK, LieError> {
    check_admissible(g)?;
    let inv = g.clone().try_inverse().ok_or(LieError::Singular)?;
    let kan = iwasawa_kan_sl(&inv)?;
    Ok(SLIwasawaNAK {
        n: invert_unit_upper(&kan.n),
        a_log: -kan.a_log,
        k: kan.k.transpose(),
    })
}

/// Inverse of a unit upper-triangular matrix by back substitution.
fn invert_unit_upper(n: &DMatrix<f64>) -> DMatrix<f64> {
    let d = n.nrows();
    let mut inv = DMatrix::identity(d, d);
    for col in 0..d {
        for row in (0..col).rev() {
            let mut sum = 0.0;
            for k in (row + 1)..=col {
                sum += n[(row, k)] * inv[(k, col)];
            }
            inv[(row, col)] = -sum;
        }
    }
    inv
}

/// Half-sum of positive roots applied to a torus logarithm:
/// `ρ(H) = Σ_j ((d+1)/2 - j) H_j` for traceless `H`.
pub fn rho_sl(h: &DVector<f64>) -> Result<f64, LieError> {
    let d = h.len();
    if d < 2 {
        return Err(LieError::BadDimension(d, "torus logarithm needs d >= 2"));
    }
    let trace: f64 = h.iter().sum();
    let scale = h.iter().fold(1.0f64, |m, &x| m.max(x.abs()));
    if trace.abs() > TRACE_TOL * scale {
        return Err(LieError::TraceNotZero { trace });
    }
    let mut value = 0.0;
    for (idx, &hj) in h.iter().enumerate() {
        let j = (idx + 1) as f64;
        value += ((d as f64 + 1.0) / 2.0 - j) * hj;
    }
    Ok(value)
}

/// A root `α_{ij}(H) = H_i - H_j` of the diagonal torus (indices 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RestrictedRoot {
    i: usize,
    j: usize,
}

impl RestrictedRoot {
    pub fn new(i: usize, j: usize, d: usize) -> Result<Self, LieError> {
        if i == j || i < 1 || j < 1 || i > d || j > d {
            return Err(LieError::InvalidRoot { i, j, d });
        }
        Ok(Self { i, j })
    }

    pub fn indices(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    /// `α_{ij}(H) = H_i - H_j`.
    pub fn value(&self, h: &DVector<f64>) -> f64 {
        h[self.i - 1] - h[self.j - 1]
    }

    /// Positive roots are those with `i < j` (upper-triangular root spaces).
    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    /// Every root space of `SL(d, R)` is one-dimensional.
    pub fn multiplicity(&self) -> usize {
        1
    }

    /// The elementary matrix spanning the root space.
    pub fn root_space_basis(&self, d: usize) -> DMatrix<f64> {
        let mut e = DMatrix::zeros(d, d);
        e[(self.i - 1, self.j - 1)] = 1.0;
        e
    }
}

/// All `d(d-1)` roots of the diagonal torus of `SL(d, R)`.
pub fn restricted_roots_sl(d: usize) -> Result<Vec<RestrictedRoot>, LieError> {
    if d < 2 {
        return Err(LieError::BadDimension(d, "root system needs d >= 2"));
    }
    let mut roots = Vec::with_capacity(d * (d - 1));
    for i in 1..=d {
        for j in 1..=d {
            if i != j {
                roots.push(RestrictedRoot { i, j });
            }
        }
    }
    Ok(roots)
}

/// The simple roots `α_{j,j+1}`, whose nonnegative integer combinations
/// exhaust the positive roots.
pub fn simple_roots_sl(d: usize) -> Result<Vec<RestrictedRoot>, LieError> {
    if d < 2 {
        return Err(LieError::BadDimension(d, "root system needs d >= 2"));
    }
    Ok((1..d).map(|j| RestrictedRoot { i: j, j: j + 1 }).collect())
}

/// Modular function of the `AN` subgroup evaluated at an element with torus
/// logarithm `a_log`: `Δ(n a) = e^{-2 ρ(log a)}`.
///
/// Its reciprocal is the determinant of the adjoint action of `n a` on the
/// Lie algebra of `AN`.
pub fn modular_an_sl(a_log: &DVector<f64>) -> Result<f64, LieError> {
    Ok((-2.0 * rho_sl(a_log)?).exp())
}
