//! The compactly supported function class driving every transform check.
//!
//! A test function is a sum of Gaussian bumps, written in the solvable
//! coordinates `(s, t)` of the disk and cut to zero beyond
//! [`SUPPORT_RADIUS_SIGMAS`] widths, where the bump has already fallen to
//! 1e-14 of its peak. The hard cutoff gives every bump a compact support box
//! and a compact metric ball, so horocycle and boundary-pairing integrals
//! reduce to finite, fully resolved quadratures. A function may in addition
//! carry an isometry frame `g`: the framed function is `x ↦ f₀(g⁻¹ x)`, and
//! transforms exploit the frame through exact group identities instead of
//! resampling.

use rand::Rng;

use super::TransformError;
use crate::disk::{mobius, na_coordinates, DiskPoint};
use crate::lie::SU11Element;
use crate::numerics::seeded_rng;

/// Truncation radius in units of the bump width. At this radius a Gaussian
/// has fallen to `e^{-32.24} ≈ 1e-14` of its peak, so the cutoff is far
/// below every tolerance in the crate.
pub const SUPPORT_RADIUS_SIGMAS: f64 = 8.03;

/// Widest admissible support box in the shear coordinate.
const MAX_S_BOX: f64 = 4.65;
/// Widest admissible support box in the height coordinate.
const MAX_T_BOX: f64 = 4.1;
/// Narrowest admissible bump width; the fixed internal grids resolve this
/// with a wide safety margin.
const MIN_SIGMA: f64 = 0.1;

/// One Gaussian bump.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Profile {
    /// `amp · exp(-(s-s0)²/(2σ_s²) - (t-t0)²/(2σ_t²))` in solvable
    /// coordinates, truncated beyond [`SUPPORT_RADIUS_SIGMAS`] widths in
    /// each coordinate separately.
    Solvable {
        s0: f64,
        t0: f64,
        sigma_s: f64,
        sigma_t: f64,
        amp: f64,
    },
    /// `amp · exp(-d(o, x)²/(2σ²))` in the hyperbolic distance to the
    /// origin, truncated beyond `SUPPORT_RADIUS_SIGMAS · σ`. Rotation
    /// invariant by construction.
    Radial { sigma: f64, amp: f64 },
}

impl Profile {
    fn validate(&self) -> Result<(), TransformError> {
        match *self {
            Profile::Solvable {
                s0,
                t0,
                sigma_s,
                sigma_t,
                amp,
            } => {
                if !(sigma_s >= MIN_SIGMA && sigma_t >= MIN_SIGMA) {
                    return Err(TransformError::InvalidSpec(format!(
                        "bump widths ({sigma_s}, {sigma_t}) must be at least {MIN_SIGMA}"
                    )));
                }
                if !amp.is_finite() || !s0.is_finite() || !t0.is_finite() {
                    return Err(TransformError::InvalidSpec(
                        "bump parameters must be finite".into(),
                    ));
                }
                if s0.abs() + SUPPORT_RADIUS_SIGMAS * sigma_s > MAX_S_BOX {
                    return Err(TransformError::InvalidSpec(format!(
                        "shear support {} exceeds the admissible box {MAX_S_BOX}",
                        s0.abs() + SUPPORT_RADIUS_SIGMAS * sigma_s
                    )));
                }
                if t0.abs() + SUPPORT_RADIUS_SIGMAS * sigma_t > MAX_T_BOX {
                    return Err(TransformError::InvalidSpec(format!(
                        "height support {} exceeds the admissible box {MAX_T_BOX}",
                        t0.abs() + SUPPORT_RADIUS_SIGMAS * sigma_t
                    )));
                }
                Ok(())
            }
            Profile::Radial { sigma, amp } => {
                if !(sigma > 0.0) || !amp.is_finite() {
                    return Err(TransformError::InvalidSpec(
                        "radial bump needs a positive width and finite amplitude".into(),
                    ));
                }
                if SUPPORT_RADIUS_SIGMAS * sigma > MAX_T_BOX {
                    return Err(TransformError::InvalidSpec(format!(
                        "radial support radius {} exceeds the admissible ball {MAX_T_BOX}",
                        SUPPORT_RADIUS_SIGMAS * sigma
                    )));
                }
                Ok(())
            }
        }
    }

    /// Half-width of the support in the shear coordinate. For a radial bump
    /// of metric radius `R` the extreme shear on the ball is `sinh(2R)/2`.
    fn s_extent(&self) -> f64 {
        match *self {
            Profile::Solvable { s0, sigma_s, .. } => s0.abs() + SUPPORT_RADIUS_SIGMAS * sigma_s,
            Profile::Radial { sigma, .. } => (2.0 * SUPPORT_RADIUS_SIGMAS * sigma).sinh() / 2.0,
        }
    }

    /// Half-width of the support in the height coordinate.
    fn t_extent(&self) -> f64 {
        match *self {
            Profile::Solvable { t0, sigma_t, .. } => t0.abs() + SUPPORT_RADIUS_SIGMAS * sigma_t,
            Profile::Radial { sigma, .. } => SUPPORT_RADIUS_SIGMAS * sigma,
        }
    }

    /// `cosh` of the metric radius of a ball containing the support. Over
    /// the support box the extreme of `cosh d = √(cosh²t + s²e^{-2t})` sits
    /// at the corner with the most negative height.
    fn cosh_reach(&self) -> f64 {
        match *self {
            Profile::Solvable { .. } => {
                let s = self.s_extent();
                let t = self.t_extent();
                (t.cosh().powi(2) + s * s * (2.0 * t).exp()).sqrt()
            }
            Profile::Radial { sigma, .. } => (SUPPORT_RADIUS_SIGMAS * sigma).cosh(),
        }
    }

    /// Value at solvable coordinates, truncation included.
    fn eval(&self, s: f64, t: f64) -> f64 {
        match *self {
            Profile::Solvable {
                s0,
                t0,
                sigma_s,
                sigma_t,
                amp,
            } => {
                let us = (s - s0) / sigma_s;
                let ut = (t - t0) / sigma_t;
                if us.abs() > SUPPORT_RADIUS_SIGMAS || ut.abs() > SUPPORT_RADIUS_SIGMAS {
                    return 0.0;
                }
                amp * (-(us * us + ut * ut) / 2.0).exp()
            }
            Profile::Radial { sigma, amp } => {
                let cosh_sq = t.cosh().powi(2) + s * s * (-2.0 * t).exp();
                let d = cosh_sq.sqrt().max(1.0).acosh();
                if d > SUPPORT_RADIUS_SIGMAS * sigma {
                    return 0.0;
                }
                let u = d / sigma;
                amp * (-u * u / 2.0).exp()
            }
        }
    }

    fn scaled(&self, factor: f64) -> Self {
        match *self {
            Profile::Solvable {
                s0,
                t0,
                sigma_s,
                sigma_t,
                amp,
            } => Profile::Solvable {
                s0,
                t0,
                sigma_s,
                sigma_t,
                amp: amp * factor,
            },
            Profile::Radial { sigma, amp } => Profile::Radial {
                sigma,
                amp: amp * factor,
            },
        }
    }

    fn sigma_s(&self) -> f64 {
        match *self {
            Profile::Solvable { sigma_s, .. } => sigma_s,
            Profile::Radial { sigma, .. } => sigma,
        }
    }

    fn sigma_t(&self) -> f64 {
        match *self {
            Profile::Solvable { sigma_t, .. } => sigma_t,
            Profile::Radial { sigma, .. } => sigma,
        }
    }
}

/// A compactly supported test function: a profile sum seen through an
/// isometry frame.
#[derive(Debug, Clone)]
pub struct TestFunction {
    components: Vec<Profile>,
    frame: SU11Element,
    frame_inverse: SU11Element,
    s_box: f64,
    t_box: f64,
    cosh_ball: f64,
    label: String,
}

impl TestFunction {
    pub fn from_profile(label: impl Into<String>, profile: Profile) -> Result<Self, TransformError> {
        Self::from_components(label, vec![profile])
    }

    pub fn from_components(
        label: impl Into<String>,
        components: Vec<Profile>,
    ) -> Result<Self, TransformError> {
        if components.is_empty() {
            return Err(TransformError::InvalidSpec(
                "a test function needs at least one component".into(),
            ));
        }
        for component in &components {
            component.validate()?;
        }
        let s_box = components.iter().map(Profile::s_extent).fold(0.0, f64::max);
        let t_box = components.iter().map(Profile::t_extent).fold(0.0, f64::max);
        let cosh_ball = components
            .iter()
            .map(Profile::cosh_reach)
            .fold(1.0, f64::max);
        Ok(Self {
            components,
            frame: SU11Element::identity(),
            frame_inverse: SU11Element::identity(),
            s_box,
            t_box,
            cosh_ball,
            label: label.into(),
        })
    }

    /// The fixed bump used for calibration and as the first verification
    /// subject.
    pub fn reference_bump() -> Self {
        Self::from_profile(
            "reference-bump",
            Profile::Solvable {
                s0: 0.15,
                t0: -0.1,
                sigma_s: 0.42,
                sigma_t: 0.38,
                amp: 1.0,
            },
        )
        .expect("reference bump parameters are valid")
    }

    /// A reproducible family of distinct single-bump functions.
    pub fn seeded_family(seed: u64, count: usize) -> Vec<Self> {
        let mut rng = seeded_rng(seed);
        (0..count)
            .map(|index| {
                let profile = Profile::Solvable {
                    s0: rng.random_range(-0.6..0.6),
                    t0: rng.random_range(-0.45..0.45),
                    sigma_s: rng.random_range(0.35..0.5),
                    sigma_t: rng.random_range(0.32..0.45),
                    amp: rng.random_range(0.5..2.0),
                };
                Self::from_profile(format!("bump-{seed}-{index}"), profile)
                    .expect("seeded draws stay inside the admissible boxes")
            })
            .collect()
    }

    /// The function carried by the isometry `g`: `x ↦ f(g⁻¹ x)`.
    pub fn transformed(&self, g: &SU11Element) -> Self {
        Self {
            components: self.components.clone(),
            frame: *g * self.frame,
            frame_inverse: self.frame_inverse * g.inverse(),
            s_box: self.s_box,
            t_box: self.t_box,
            cosh_ball: self.cosh_ball,
            label: self.label.clone(),
        }
    }

    /// Componentwise linear combination. All parts must share one frame.
    pub fn linear_combination(
        label: impl Into<String>,
        parts: &[(f64, &TestFunction)],
    ) -> Result<Self, TransformError> {
        let (_, first) = parts.first().ok_or_else(|| {
            TransformError::InvalidSpec("a linear combination needs at least one part".into())
        })?;
        let frame = first.frame;
        let mut components = Vec::new();
        for (coefficient, part) in parts {
            if part.frame != frame {
                return Err(TransformError::MismatchedFrames);
            }
            components.extend(part.components.iter().map(|c| c.scaled(*coefficient)));
        }
        let mut combined = Self::from_components(label, components)?;
        combined.frame = frame;
        combined.frame_inverse = first.frame_inverse;
        Ok(combined)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn frame(&self) -> &SU11Element {
        &self.frame
    }

    pub fn frame_inverse(&self) -> &SU11Element {
        &self.frame_inverse
    }

    pub fn components(&self) -> &[Profile] {
        &self.components
    }

    /// Support half-width in the shear coordinate, before framing.
    pub fn s_box(&self) -> f64 {
        self.s_box
    }

    /// Support half-width in the height coordinate, before framing.
    pub fn t_box(&self) -> f64 {
        self.t_box
    }

    /// `cosh` of the radius of an origin-centered ball containing the
    /// unframed support.
    pub fn ball_cosh_radius(&self) -> f64 {
        self.cosh_ball
    }

    /// Body profile at solvable coordinates, frame ignored.
    pub fn eval_na(&self, s: f64, t: f64) -> f64 {
        self.components.iter().map(|c| c.eval(s, t)).sum()
    }

    /// Value at a disk point, frame applied.
    pub fn eval(&self, x: &DiskPoint) -> f64 {
        let (s, t) = na_coordinates(&mobius(&self.frame_inverse, x));
        self.eval_na(s, t)
    }

    /// Peak amplitude scale, used by the quadrature edge checks.
    pub(crate) fn amplitude_scale(&self) -> f64 {
        self.components
            .iter()
            .map(|c| match *c {
                Profile::Solvable { amp, .. } | Profile::Radial { amp, .. } => amp.abs(),
            })
            .sum()
    }

    /// Finest shear width among the components.
    pub(crate) fn min_s_scale(&self) -> f64 {
        self.components
            .iter()
            .map(Profile::sigma_s)
            .fold(f64::INFINITY, f64::min)
    }

    /// Finest height width among the components.
    pub(crate) fn min_t_scale(&self) -> f64 {
        self.components
            .iter()
            .map(Profile::sigma_t)
            .fold(f64::INFINITY, f64::min)
    }

    /// Whether the support box fits the internal spectral and norm grids.
    pub(crate) fn fits_internal_grids(&self) -> Result<(), TransformError> {
        if self.s_box > MAX_S_BOX || self.t_box > MAX_T_BOX {
            return Err(TransformError::InvalidSpec(format!(
                "support box ({:.3}, {:.3}) exceeds the gridded window ({MAX_S_BOX}, {MAX_T_BOX})",
                self.s_box, self.t_box
            )));
        }
        Ok(())
    }
}
