//! Sampling grids for the transform stack.
//!
//! Two flavors: uniform grids on an interval (optionally staggered so no node
//! lands on zero, which keeps singular densities evaluable) and uniform
//! periodic grids on the circle.

use super::NumericsError;

/// Uniform grid on `[lo, hi]`.
///
/// With `staggered = true` the `n` nodes sit at panel midpoints
/// `lo + (i + 1/2) h`, `h = (hi - lo)/n`; the associated quadrature weight is
/// `h` for every node (midpoint rule). With `staggered = false` the nodes are
/// the `n` endpoints `lo + i h`, `h = (hi - lo)/(n - 1)`, with trapezoid
/// weights. For a symmetric interval and even `n`, a staggered grid contains
/// no zero node and is closed under negation.
#[derive(Debug, Clone, PartialEq)]
pub struct LineGrid {
    lo: f64,
    hi: f64,
    n: usize,
    staggered: bool,
}

impl LineGrid {
    pub fn new(lo: f64, hi: f64, n: usize, staggered: bool) -> Result<Self, NumericsError> {
        if !(lo < hi) {
            return Err(NumericsError::InvalidGrid(format!(
                "need lo < hi, got [{lo}, {hi}]"
            )));
        }
        if n < 2 {
            return Err(NumericsError::InvalidGrid(format!(
                "need at least 2 nodes, got {n}"
            )));
        }
        let grid = Self { lo, hi, n, staggered };
        if staggered {
            let tol = 1e-14 * grid.spacing();
            if grid.nodes().iter().any(|&x| x.abs() < tol) {
                return Err(NumericsError::InvalidGrid(
                    "staggered grid must not contain a node at zero".into(),
                ));
            }
        }
        Ok(grid)
    }

    /// Symmetric staggered grid on `[-half_width, half_width]` with an even
    /// node count, so nodes come in exact `±` pairs and zero is excluded.
    pub fn symmetric_staggered(half_width: f64, n: usize) -> Result<Self, NumericsError> {
        if n % 2 != 0 {
            return Err(NumericsError::InvalidGrid(format!(
                "symmetric staggered grid needs an even node count, got {n}"
            )));
        }
        Self::new(-half_width, half_width, n, true)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn is_staggered(&self) -> bool {
        self.staggered
    }

    /// Node spacing `h`.
    pub fn spacing(&self) -> f64 {
        if self.staggered {
            (self.hi - self.lo) / self.n as f64
        } else {
            (self.hi - self.lo) / (self.n - 1) as f64
        }
    }

    pub fn node(&self, i: usize) -> f64 {
        debug_assert!(i < self.n);
        if self.staggered {
            self.lo + (i as f64 + 0.5) * self.spacing()
        } else {
            self.lo + i as f64 * self.spacing()
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.node(i)).collect()
    }

    /// Quadrature weight of node `i` (midpoint or trapezoid rule).
    pub fn weight(&self, i: usize) -> f64 {
        let h = self.spacing();
        if self.staggered || (i != 0 && i != self.n - 1) {
            h
        } else {
            h / 2.0
        }
    }

    /// Same interval with twice the nodes.
    pub fn doubled(&self) -> Self {
        Self {
            n: self.n * 2,
            ..*self
        }
    }
}

/// Uniform grid of `n` angles on the circle, `beta_i = 2π i / n`.
///
/// The matching quadrature weight for the normalized circle measure
/// `dβ / (2π)` is `1/n` per node; for smooth periodic integrands this
/// rectangle rule converges spectrally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodicGrid {
    n: usize,
}

impl PeriodicGrid {
    pub fn new(n: usize) -> Result<Self, NumericsError> {
        if n < 2 {
            return Err(NumericsError::InvalidGrid(format!(
                "periodic grid needs at least 2 nodes, got {n}"
            )));
        }
        Ok(Self { n })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn node(&self, i: usize) -> f64 {
        debug_assert!(i < self.n);
        2.0 * std::f64::consts::PI * i as f64 / self.n as f64
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.node(i)).collect()
    }

    /// Weight per node for the normalized measure of total mass one.
    pub fn normalized_weight(&self) -> f64 {
        1.0 / self.n as f64
    }

    pub fn doubled(&self) -> Self {
        Self { n: self.n * 2 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_grid_rejects_degenerate_descriptions() {
        assert!(LineGrid::new(1.0, 1.0, 8, false).is_err());
        assert!(LineGrid::new(2.0, 1.0, 8, false).is_err());
        assert!(LineGrid::new(0.0, 1.0, 1, false).is_err());
    }

    #[test]
    fn staggered_grid_excludes_zero_and_pairs_under_negation() {
        let grid = LineGrid::symmetric_staggered(8.0, 512).unwrap();
        let nodes = grid.nodes();
        assert_eq!(nodes.len(), 512);
        for &x in &nodes {
            assert!(x.abs() > 1e-3, "staggered node {x} too close to zero");
        }
        for i in 0..nodes.len() {
            let mirrored = nodes[nodes.len() - 1 - i];
            assert!(
                (nodes[i] + mirrored).abs() < 1e-12,
                "nodes {i} and its mirror do not negate: {} vs {}",
                nodes[i],
                mirrored
            );
        }
    }

    #[test]
    fn staggered_grid_with_node_at_zero_is_rejected() {
        // Odd count on a symmetric interval puts the middle node exactly at 0.
        assert!(LineGrid::new(-1.0, 1.0, 5, true).is_err());
    }

    #[test]
    fn endpoint_grid_covers_interval_with_trapezoid_weights() {
        let grid = LineGrid::new(0.0, 1.0, 5, false).unwrap();
        assert_eq!(grid.nodes(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let total: f64 = (0..5).map(|i| grid.weight(i)).sum();
        assert!((total - 1.0).abs() < 1e-15, "weights must sum to the length");
    }

    #[test]
    fn midpoint_weights_sum_to_interval_length() {
        let grid = LineGrid::symmetric_staggered(8.0, 512).unwrap();
        let total: f64 = (0..grid.len()).map(|i| grid.weight(i)).sum();
        assert!((total - 16.0).abs() < 1e-12);
    }

    #[test]
    fn periodic_grid_sums_trig_polynomials_exactly() {
        // The n-point rectangle rule integrates e^{ikβ} exactly for 0 < |k| < n.
        let grid = PeriodicGrid::new(16).unwrap();
        for k in 1..16 {
            let mut sum = 0.0;
            for i in 0..grid.len() {
                sum += (k as f64 * grid.node(i)).cos() * grid.normalized_weight();
            }
            assert!(
                sum.abs() < 1e-14,
                "mean of cos({k}β) over the grid = {sum:.3e}, want 0"
            );
        }
    }

    #[test]
    fn doubling_preserves_interval_and_staggering() {
        let grid = LineGrid::symmetric_staggered(24.0, 512).unwrap();
        let fine = grid.doubled();
        assert_eq!(fine.len(), 1024);
        assert_eq!(fine.lo(), -24.0);
        assert_eq!(fine.hi(), 24.0);
        assert!(fine.is_staggered());
        assert!((fine.spacing() - grid.spacing() / 2.0).abs() < 1e-15);
    }
}
