//! Sampling grids and gridded tables for the transform stack.
//!
//! Every transform output lives on the same product grids: a periodic grid
//! in the boundary angle `β`, a symmetric staggered grid in the horocycle
//! height `τ` and another in the frequency `λ`. Staggering keeps nodes off
//! zero and closed under negation, which the conjugate-symmetry shortcuts
//! rely on.

use num_complex::Complex64;

use super::TransformError;
use crate::numerics::{DftPair, LineGrid, PeriodicGrid};

/// The working grids of the transform stack plus a refinement level that
/// internal quadratures read as an oversampling factor.
#[derive(Debug, Clone)]
pub struct TransformGrids {
    beta: PeriodicGrid,
    tau: LineGrid,
    lambda: LineGrid,
    refine: u32,
}

impl TransformGrids {
    pub const DEFAULT_BETA_NODES: usize = 256;
    pub const DEFAULT_TAU_NODES: usize = 512;
    pub const DEFAULT_LAMBDA_NODES: usize = 512;
    /// Height window. Test-class supports stay inside a ball whose height
    /// reach is below 6.3, so tables decay past machine noise before the
    /// window edge.
    pub const TAU_HALF_WIDTH: f64 = 8.0;
    /// Frequency window. The narrowest admitted profile width 0.32 puts
    /// spectral content at `|λ| = 24` below 2e-13.
    pub const LAMBDA_HALF_WIDTH: f64 = 24.0;

    pub fn standard() -> Self {
        Self::with_counts(
            Self::DEFAULT_BETA_NODES,
            Self::DEFAULT_TAU_NODES,
            Self::DEFAULT_LAMBDA_NODES,
        )
        .expect("default grid counts are valid")
    }

    /// Custom node counts over the standard windows. Height and frequency
    /// counts must be even so the staggered grids stay symmetric.
    pub fn with_counts(beta: usize, tau: usize, lambda: usize) -> Result<Self, TransformError> {
        Self::with_windows(
            beta,
            tau,
            Self::TAU_HALF_WIDTH,
            lambda,
            Self::LAMBDA_HALF_WIDTH,
        )
    }

    /// Custom node counts and window half-widths. Unitarized tables decay
    /// only polynomially in height, so their evaluation sometimes wants a
    /// wider height window than the bump class itself needs.
    pub fn with_windows(
        beta: usize,
        tau: usize,
        tau_half_width: f64,
        lambda: usize,
        lambda_half_width: f64,
    ) -> Result<Self, TransformError> {
        Ok(Self {
            beta: PeriodicGrid::new(beta)?,
            tau: LineGrid::symmetric_staggered(tau_half_width, tau)?,
            lambda: LineGrid::symmetric_staggered(lambda_half_width, lambda)?,
            refine: 0,
        })
    }

    /// Doubles the height and frequency resolutions and bumps the internal
    /// oversampling; the boundary grid is untouched because every identity
    /// checked on these grids is pointwise in `β`.
    pub fn refined(&self) -> Self {
        Self {
            beta: self.beta,
            tau: self.tau.doubled(),
            lambda: self.lambda.doubled(),
            refine: self.refine + 1,
        }
    }

    pub fn beta(&self) -> &PeriodicGrid {
        &self.beta
    }

    pub fn tau(&self) -> &LineGrid {
        &self.tau
    }

    pub fn lambda(&self) -> &LineGrid {
        &self.lambda
    }

    pub fn refine_level(&self) -> u32 {
        self.refine
    }

    /// Factor by which internal quadrature densities exceed their base
    /// settings.
    pub(crate) fn oversample(&self) -> f64 {
        (1u64 << self.refine.min(32)) as f64
    }

    /// The matched Fourier pair between the height and frequency grids.
    pub fn dft(&self) -> DftPair {
        DftPair::new(self.tau.clone(), self.lambda.clone())
    }
}

/// A gridded function on the horocycle bundle: one row per boundary angle,
/// sampled over the height grid.
#[derive(Debug, Clone)]
pub struct HorocycleFunction {
    beta: PeriodicGrid,
    tau: LineGrid,
    rows: Vec<Vec<Complex64>>,
}

impl HorocycleFunction {
    pub fn new(
        beta: PeriodicGrid,
        tau: LineGrid,
        rows: Vec<Vec<Complex64>>,
    ) -> Result<Self, TransformError> {
        if rows.len() != beta.len() || rows.iter().any(|row| row.len() != tau.len()) {
            return Err(TransformError::InvalidSpec(format!(
                "horocycle table must have {} rows of {} samples",
                beta.len(),
                tau.len()
            )));
        }
        Ok(Self { beta, tau, rows })
    }

    pub fn beta_grid(&self) -> &PeriodicGrid {
        &self.beta
    }

    pub fn tau_grid(&self) -> &LineGrid {
        &self.tau
    }

    pub fn rows(&self) -> &[Vec<Complex64>] {
        &self.rows
    }

    pub fn row(&self, j: usize) -> &[Complex64] {
        &self.rows[j]
    }

    pub fn value(&self, j: usize, k: usize) -> Complex64 {
        self.rows[j][k]
    }

    /// Entrywise reweighting by a function of the height alone.
    pub fn map_height(&self, map: impl Fn(f64, Complex64) -> Complex64) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(k, &v)| map(self.tau.node(k), v))
                    .collect()
            })
            .collect();
        Self {
            beta: self.beta,
            tau: self.tau.clone(),
            rows,
        }
    }
}

/// A gridded function on boundary angle and frequency.
#[derive(Debug, Clone)]
pub struct SpectralFunction {
    beta: PeriodicGrid,
    lambda: LineGrid,
    rows: Vec<Vec<Complex64>>,
}

impl SpectralFunction {
    pub fn new(
        beta: PeriodicGrid,
        lambda: LineGrid,
        rows: Vec<Vec<Complex64>>,
    ) -> Result<Self, TransformError> {
        if rows.len() != beta.len() || rows.iter().any(|row| row.len() != lambda.len()) {
            return Err(TransformError::InvalidSpec(format!(
                "spectral table must have {} rows of {} samples",
                beta.len(),
                lambda.len()
            )));
        }
        Ok(Self { beta, lambda, rows })
    }

    pub fn beta_grid(&self) -> &PeriodicGrid {
        &self.beta
    }

    pub fn lambda_grid(&self) -> &LineGrid {
        &self.lambda
    }

    pub fn rows(&self) -> &[Vec<Complex64>] {
        &self.rows
    }

    pub fn row(&self, j: usize) -> &[Complex64] {
        &self.rows[j]
    }

    pub fn value(&self, j: usize, k: usize) -> Complex64 {
        self.rows[j][k]
    }

    /// Entrywise reweighting by a function of the frequency alone.
    pub fn map_frequency(&self, map: impl Fn(f64, Complex64) -> Complex64) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(k, &v)| map(self.lambda.node(k), v))
                    .collect()
            })
            .collect();
        Self {
            beta: self.beta,
            lambda: self.lambda.clone(),
            rows,
        }
    }
}
