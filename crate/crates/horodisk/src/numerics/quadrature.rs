//! Composite quadrature on finite intervals.
//!
//! The workhorse is composite Gauss-Legendre: the interval is split into
//! equal panels and a fixed-order Gauss rule is applied on each panel.
//! A composite trapezoid rule is available as a cross-check. Error estimates
//! come from comparing against the same rule at half the panel count, so a
//! reported estimate of `e` means the two resolutions differ by `e`.

use num_complex::Complex64;

use super::NumericsError;

/// Base quadrature rule applied on each panel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadRule {
    GaussLegendre,
    Trapezoid,
}

/// Description of a truncated-line quadrature.
///
/// The integral over the whole line is replaced by the integral over
/// `[-truncation, truncation]`, split into `panels` equal panels with
/// `points_per_panel` nodes each. Callers must check that the integrand has
/// decayed below `tail_tolerance` at the truncation points; `integrate_1d`
/// enforces this.
#[derive(Debug, Clone)]
pub struct QuadratureSpec {
    pub rule: QuadRule,
    pub panels: usize,
    pub points_per_panel: usize,
    pub truncation: f64,
    pub tail_tolerance: f64,
}

impl QuadratureSpec {
    pub fn new(
        rule: QuadRule,
        panels: usize,
        points_per_panel: usize,
        truncation: f64,
        tail_tolerance: f64,
    ) -> Result<Self, NumericsError> {
        if panels < 1 {
            return Err(NumericsError::InvalidSpec(
                "panel count must be at least 1".into(),
            ));
        }
        if points_per_panel < 2 {
            return Err(NumericsError::InvalidSpec(
                "points per panel must be at least 2".into(),
            ));
        }
        if !(truncation > 0.0) {
            return Err(NumericsError::InvalidSpec(
                "truncation must be positive".into(),
            ));
        }
        if !(tail_tolerance > 0.0) {
            return Err(NumericsError::InvalidSpec(
                "tail tolerance must be positive".into(),
            ));
        }
        Ok(Self {
            rule,
            panels,
            points_per_panel,
            truncation,
            tail_tolerance,
        })
    }

    /// Same spec with twice the panels (used for refinement studies).
    pub fn refined(&self) -> Self {
        Self {
            panels: self.panels * 2,
            ..self.clone()
        }
    }

    /// Same spec with half the panels (at least one).
    pub fn coarsened(&self) -> Self {
        Self {
            panels: (self.panels / 2).max(1),
            ..self.clone()
        }
    }
}

/// Value of a truncated integral together with a two-resolution error
/// estimate (absolute difference against the half-panel-count result).
#[derive(Debug, Clone, Copy)]
pub struct Integral {
    pub value: Complex64,
    pub error_estimate: f64,
}

/// Nodes and weights of the base rule on the reference interval `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct PanelRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl PanelRule {
    pub fn new(rule: QuadRule, points: usize) -> Self {
        match rule {
            QuadRule::GaussLegendre => {
                let (nodes, weights) = gauss_legendre_reference(points);
                Self { nodes, weights }
            }
            QuadRule::Trapezoid => {
                let h = 2.0 / (points as f64 - 1.0);
                let nodes: Vec<f64> = (0..points).map(|i| -1.0 + i as f64 * h).collect();
                let weights: Vec<f64> = (0..points)
                    .map(|i| if i == 0 || i == points - 1 { h / 2.0 } else { h })
                    .collect();
                Self { nodes, weights }
            }
        }
    }

    pub fn for_spec(spec: &QuadratureSpec) -> Self {
        Self::new(spec.rule, spec.points_per_panel)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Reference nodes in `[-1, 1]` paired with their weights.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
///
/// Nodes are the roots of the Legendre polynomial `P_n`, found by Newton
/// iteration from the Chebyshev-based initial guess; weights are
/// `2 / ((1 - x^2) P_n'(x)^2)`. Accurate to machine precision for the orders
/// used here (up to a few hundred points).
fn gauss_legendre_reference(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2, "Gauss-Legendre rule needs at least 2 points");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Initial guess for the i-th root (descending order).
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                let (_, d2) = legendre_with_derivative(n, x);
                dp = d2;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        // Exact center node for odd orders.
        nodes[n / 2] = 0.0;
        let (_, d) = legendre_with_derivative(n, 0.0);
        weights[n / 2] = 2.0 / (d * d);
    }
    (nodes, weights)
}

/// Evaluates `P_n(x)` and `P_n'(x)` by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let kf = k as f64;
        let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = p_next;
    }
    let d = n as f64 * (p_prev - x * p) / (1.0 - x * x);
    (p, d)
}

/// Composite quadrature of `f` over `[a, b]` with `panels` equal panels.
///
/// Summation order is fixed (panel by panel, node by node), so the result is
/// deterministic for a given rule.
pub fn integrate_panels<F>(rule: &PanelRule, a: f64, b: f64, panels: usize, mut f: F) -> Complex64
where
    F: FnMut(f64) -> Complex64,
{
    let width = (b - a) / panels as f64;
    let half = width / 2.0;
    let mut total = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let center = a + (p as f64 + 0.5) * width;
        let mut panel_sum = Complex64::new(0.0, 0.0);
        for (x, w) in rule.points() {
            panel_sum += f(center + half * x) * w;
        }
        total += panel_sum * half;
    }
    total
}

/// Truncated-line integral `∫_{-T}^{T} f` with tail check and two-resolution
/// error estimate.
///
/// Fails with [`NumericsError::TailToleranceExceeded`] when `|f(±T)|` is not
/// below the spec's tail tolerance, since in that case the truncation error
/// is unquantified.
pub fn integrate_1d<F>(mut f: F, spec: &QuadratureSpec) -> Result<Integral, NumericsError>
where
    F: FnMut(f64) -> Complex64,
{
    let t = spec.truncation;
    for endpoint in [-t, t] {
        let magnitude = f(endpoint).norm();
        if magnitude > spec.tail_tolerance {
            return Err(NumericsError::TailToleranceExceeded {
                truncation: t,
                magnitude,
                tolerance: spec.tail_tolerance,
            });
        }
    }
    let rule = PanelRule::for_spec(spec);
    let fine = integrate_panels(&rule, -t, t, spec.panels, &mut f);
    let coarse_panels = (spec.panels / 2).max(1);
    let coarse = integrate_panels(&rule, -t, t, coarse_panels, &mut f);
    Ok(Integral {
        value: fine,
        error_estimate: (fine - coarse).norm(),
    })
}
