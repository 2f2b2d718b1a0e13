//! The horocycle Radon transform.
//!
//! `ℛf(b, τ)` integrates `f` over the horocycle with boundary point `b` and
//! height `τ`, in the unit-shear parametrization `σ ↦ h n_σ [o]` with
//! `h = k_{β/2} a_τ` (composed with the frame inverse when `f` is framed),
//! against the measure `c_n dσ`. Any other group element reaching the same
//! horocycle differs by a right shear and gives the same integral.
//!
//! Along the orbit the solvable coordinates of the traced point have closed
//! forms. Writing `h = (a, b)` and
//!
//! ```text
//! q(σ) = |(ā - b) - 2 Im(a + b) σ|²            (a real quadratic)
//! p(σ) = Im[((ā + b) - 2i Re(a + b) σ) · conj((ā - b) - 2 Im(a + b) σ)]
//! ```
//!
//! the traced point satisfies `e^{2t} = 1/q(σ)` and `s = -p(σ) / (2 q(σ))`,
//! while `cosh² d(o, ·) = |a + iσ(a + b)|²` is yet another quadratic. The
//! compact support of the test class therefore cuts the line into cells
//! bounded by roots of five quadratics: the metric ball and the four
//! support-box faces. Gauss panels are laid only over the kept cells, with
//! the panel count sized by a sweep of how many profile widths the cell
//! spans.

use num_complex::Complex64;
use rayon::prelude::*;

use super::grids::{HorocycleFunction, TransformGrids};
use super::measures::MeasureNormalization;
use super::test_function::TestFunction;
use super::TransformError;
use crate::disk::{composite_distance, BoundaryPoint, DiskPoint, HorocycleParam};
use crate::lie::SU11Element;
use crate::numerics::{integrate_panels, LineGrid, PanelRule, QuadRule};

/// Gauss order on each panel.
const GAUSS_POINTS: usize = 12;
/// Sample count of the panel-sizing sweep across a kept cell.
const SWEEP_SAMPLES: usize = 33;
/// Panels laid per profile width spanned.
const PANELS_PER_WIDTH: f64 = 1.5;

/// Closed-form orbit coordinates for one group element.
struct Orbit {
    /// `q(σ)` coefficients, constant term first.
    qd: [f64; 3],
    /// `p(σ)` coefficients, constant term first.
    ip: [f64; 3],
}

impl Orbit {
    fn new(h: &SU11Element) -> Self {
        let a = h.a();
        let b = h.b();
        let c = a + b;
        let u0 = a.conj() - b;
        let v0 = a.conj() + b;
        let m = 2.0 * c.im;
        let r = 2.0 * c.re;
        Self {
            qd: [u0.norm_sqr(), -2.0 * m * u0.re, m * m],
            ip: [
                (v0 * u0.conj()).im,
                -(m * v0.im + r * u0.re),
                r * m,
            ],
        }
    }

    /// Solvable coordinates of the point traced at parameter `σ`.
    fn coords(&self, sigma: f64) -> (f64, f64) {
        let q = (self.qd[2] * sigma + self.qd[1]) * sigma + self.qd[0];
        let p = (self.ip[2] * sigma + self.ip[1]) * sigma + self.ip[0];
        (-p / (2.0 * q), -0.5 * q.ln())
    }
}

fn condition_value(c: &[f64; 3], x: f64) -> f64 {
    (c[2] * x + c[1]) * x + c[0]
}

/// Real roots of `c[2] x² + c[1] x + c[0]` strictly inside `(lo, hi)`.
fn push_roots(c: &[f64; 3], lo: f64, hi: f64, out: &mut Vec<f64>) {
    let scale = c[0].abs().max(c[1].abs()).max(c[2].abs());
    if scale == 0.0 {
        return;
    }
    let mut push = |x: f64| {
        if x.is_finite() && x > lo && x < hi {
            out.push(x);
        }
    };
    if c[2].abs() <= 1e-14 * scale {
        if c[1] != 0.0 {
            push(-c[0] / c[1]);
        }
        return;
    }
    let disc = c[1] * c[1] - 4.0 * c[2] * c[0];
    if disc < 0.0 {
        return;
    }
    if disc == 0.0 {
        push(-c[1] / (2.0 * c[2]));
        return;
    }
    let q = -(c[1] + c[1].signum() * disc.sqrt()) / 2.0;
    push(q / c[2]);
    push(c[0] / q);
}

/// Integral of the body profile of `f` along `σ ↦ h n_σ [o]`, without the
/// measure constant. `h` must already account for the frame of `f`.
pub(crate) fn horocycle_integral(f: &TestFunction, h: &SU11Element, rule: &PanelRule) -> f64 {
    let a = h.a();
    let b = h.b();
    let c = a + b;
    let cosh_ball = f.ball_cosh_radius();
    let ball = [
        a.norm_sqr() - cosh_ball * cosh_ball,
        -2.0 * (c * a.conj()).im,
        c.norm_sqr(),
    ];
    let disc = ball[1] * ball[1] - 4.0 * ball[2] * ball[0];
    if disc <= 0.0 {
        return 0.0;
    }
    let q = -(ball[1] + ball[1].signum() * disc.sqrt()) / 2.0;
    let (r1, r2) = (q / ball[2], ball[0] / q);
    let (lo, hi) = (r1.min(r2), r1.max(r2));

    let orbit = Orbit::new(h);
    let e_pos = (2.0 * f.t_box()).exp();
    let e_neg = (-2.0 * f.t_box()).exp();
    let two_s = 2.0 * f.s_box();
    let conditions: [[f64; 3]; 5] = [
        ball,
        [orbit.qd[0] - e_pos, orbit.qd[1], orbit.qd[2]],
        [e_neg - orbit.qd[0], -orbit.qd[1], -orbit.qd[2]],
        [
            -orbit.ip[0] - two_s * orbit.qd[0],
            -orbit.ip[1] - two_s * orbit.qd[1],
            -orbit.ip[2] - two_s * orbit.qd[2],
        ],
        [
            orbit.ip[0] - two_s * orbit.qd[0],
            orbit.ip[1] - two_s * orbit.qd[1],
            orbit.ip[2] - two_s * orbit.qd[2],
        ],
    ];
    let mut cuts = vec![lo, hi];
    for condition in &conditions[1..] {
        push_roots(condition, lo, hi, &mut cuts);
    }
    cuts.sort_by(f64::total_cmp);

    let keep = |sigma: f64| {
        conditions
            .iter()
            .all(|condition| condition_value(condition, sigma) <= 0.0)
    };
    let eval = |sigma: f64| {
        let (s, t) = orbit.coords(sigma);
        f.eval_na(s, t)
    };
    let s_scale = f.min_s_scale();
    let t_scale = f.min_t_scale();
    let mut total = 0.0;
    let mut run_start: Option<f64> = None;
    let flush = |start: f64, end: f64| {
        if end - start < 1e-12 {
            return 0.0;
        }
        debug_assert!(
            eval(start).abs() <= 1e-9 * f.amplitude_scale(),
            "kept cell must open on a vanishing profile"
        );
        debug_assert!(
            eval(end).abs() <= 1e-9 * f.amplitude_scale(),
            "kept cell must close on a vanishing profile"
        );
        // The orbit can cross the profile at a very uneven pace, so each
        // sweep segment gets its own panel budget instead of spreading one
        // uniform budget over the run.
        let step = (end - start) / (SWEEP_SAMPLES - 1) as f64;
        let mut sum = 0.0;
        let mut left = start;
        let mut prev = orbit.coords(start);
        for i in 1..SWEEP_SAMPLES {
            let right = if i == SWEEP_SAMPLES - 1 {
                end
            } else {
                start + i as f64 * step
            };
            let cur = orbit.coords(right);
            let span = ((cur.0 - prev.0).abs() / s_scale).max((cur.1 - prev.1).abs() / t_scale);
            let panels = ((span * PANELS_PER_WIDTH).ceil() as usize).max(1);
            sum += integrate_panels(rule, left, right, panels, |x| Complex64::new(eval(x), 0.0)).re;
            left = right;
            prev = cur;
        }
        sum
    };
    for cell in cuts.windows(2) {
        let mid = (cell[0] + cell[1]) / 2.0;
        if keep(mid) {
            run_start.get_or_insert(cell[0]);
        } else if let Some(start) = run_start.take() {
            total += flush(start, cell[0]);
        }
    }
    if let Some(start) = run_start {
        total += flush(start, hi);
    }
    total
}

fn gauss_rule() -> PanelRule {
    PanelRule::new(QuadRule::GaussLegendre, GAUSS_POINTS)
}

/// `ℛf(b, τ)` at a single origin-based horocycle parameter.
pub fn radon_profile(f: &TestFunction, h: &HorocycleParam, norms: &MeasureNormalization) -> f64 {
    let group =
        *f.frame_inverse() * h.b.rotation_representative() * SU11Element::boost(h.tau);
    norms.c_n() * horocycle_integral(f, &group, &gauss_rule())
}

/// One boundary row of the transform over an arbitrary height grid.
pub fn radon_row(
    f: &TestFunction,
    beta: f64,
    tau: &LineGrid,
    norms: &MeasureNormalization,
) -> Vec<f64> {
    let rule = gauss_rule();
    let lead = *f.frame_inverse() * BoundaryPoint::new(beta).rotation_representative();
    (0..tau.len())
        .map(|k| {
            let h = lead * SU11Element::boost(tau.node(k));
            norms.c_n() * horocycle_integral(f, &h, &rule)
        })
        .collect()
}

/// The full transform over the working grids, rows parallel over the
/// boundary angle.
pub fn radon_transform(
    f: &TestFunction,
    grids: &TransformGrids,
    norms: &MeasureNormalization,
) -> Result<HorocycleFunction, TransformError> {
    let rows: Vec<Vec<Complex64>> = (0..grids.beta().len())
        .into_par_iter()
        .map(|j| {
            radon_row(f, grids.beta().node(j), grids.tau(), norms)
                .into_iter()
                .map(|v| Complex64::new(v, 0.0))
                .collect()
        })
        .collect();
    HorocycleFunction::new(*grids.beta(), grids.tau().clone(), rows)
}

/// `ℛf` at horocycle parameters based at `x`, re-referenced to the origin:
/// the boundary point is unchanged and the height gains `A_o(x, b)`.
pub fn radon_at_reference(
    f: &TestFunction,
    h: &HorocycleParam,
    x: &DiskPoint,
    norms: &MeasureNormalization,
) -> f64 {
    let shifted = HorocycleParam::new(
        h.b,
        h.tau + composite_distance(&DiskPoint::origin(), x, &h.b),
    );
    radon_profile(f, &shifted, norms)
}
