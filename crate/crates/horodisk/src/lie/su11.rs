//! `SU(1, 1)`: the isometry group of the unit disk.
//!
//! Elements are the matrices `[[a, b], [conj(b), conj(a)]]` with
//! `|a|^2 - |b|^2 = 1`. The three one-parameter subgroups used throughout
//! are
//!
//! ```text
//! k_θ = diag(e^{iθ}, e^{-iθ})                       (rotations, θ ∈ [0, 2π))
//! a_t = [[cosh t, sinh t], [sinh t, cosh t]]        (boosts along the real axis)
//! n_s = [[1 + is, -is], [is, 1 - is]]               (parabolic, fixing the point 1)
//! ```
//!
//! Both Iwasawa orders `g = k a n` and `g = n a k` have closed forms: with
//! `g = [[a, b], [conj(b), conj(a)]]`,
//!
//! ```text
//! k a n:  a + b = e^{iθ} e^{t}            (read θ and t off the sum)
//! n a k:  conj(a) - b = e^{-iθ} e^{-t}    (read θ and t off the difference)
//! ```
//!
//! and the shear parameter follows from one more entry combination. These
//! forms are exact, globally well conditioned, and make identities such as
//! "the `n a k` boost of `g^{-1}` is minus the `k a n` boost of `g`" hold to
//! the last bit.

use num_complex::Complex64;
use std::f64::consts::TAU;
use std::ops::Mul;

use super::LieError;

const GROUP_TOL: f64 = 1e-12;

/// An element of `SU(1, 1)` stored through its first row `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SU11Element {
    a: Complex64,
    b: Complex64,
}

impl SU11Element {
    /// Admits a first row with `|a|^2 - |b|^2 = 1` within 1e-12.
    pub fn new(a: Complex64, b: Complex64) -> Result<Self, LieError> {
        let value = a.norm_sqr() - b.norm_sqr();
        if (value - 1.0).abs() > GROUP_TOL {
            return Err(LieError::NotInGroup {
                value,
                tolerance: GROUP_TOL,
            });
        }
        Ok(Self { a, b })
    }

    pub fn identity() -> Self {
        Self {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
        }
    }

    /// Rotation `k_θ = diag(e^{iθ}, e^{-iθ})`.
    pub fn rotation(theta: f64) -> Self {
        Self {
            a: Complex64::cis(theta),
            b: Complex64::new(0.0, 0.0),
        }
    }

    /// Boost `a_t` along the geodesic through the origin and the point 1.
    pub fn boost(t: f64) -> Self {
        Self {
            a: Complex64::new(t.cosh(), 0.0),
            b: Complex64::new(t.sinh(), 0.0),
        }
    }

    /// Parabolic element `n_s` fixing the boundary point 1.
    pub fn shear(s: f64) -> Self {
        Self {
            a: Complex64::new(1.0, s),
            b: Complex64::new(0.0, -s),
        }
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    /// `g^{-1} = [[conj(a), -b], [-conj(b), a]]`.
    pub fn inverse(&self) -> Self {
        Self {
            a: self.a.conj(),
            b: -self.b,
        }
    }

    /// Deviation of `|a|^2 - |b|^2` from 1 (should stay at rounding level
    /// under composition).
    pub fn det_defect(&self) -> f64 {
        (self.a.norm_sqr() - self.b.norm_sqr() - 1.0).abs()
    }

    /// The group involution fixing the rotation subgroup: `a` stays, `b`
    /// flips sign. On the subgroups: rotations are fixed, boosts and shears
    /// invert.
    pub fn cartan_involution(&self) -> Self {
        Self {
            a: self.a,
            b: -self.b,
        }
    }
}

impl Mul for SU11Element {
    type Output = SU11Element;

    /// First row of the matrix product
    /// `[[a1, b1], [conj(b1), conj(a1)]] · [[a2, b2], [conj(b2), conj(a2)]]`.
    fn mul(self, rhs: SU11Element) -> SU11Element {
        SU11Element {
            a: self.a * rhs.a + self.b * rhs.b.conj(),
            b: self.a * rhs.b + self.b * rhs.a.conj(),
        }
    }
}

impl Mul for &SU11Element {
    type Output = SU11Element;

    fn mul(self, rhs: &SU11Element) -> SU11Element {
        *self * *rhs
    }
}

/// Iwasawa coordinates in `k a n` order: `g = k_θ a_t n_s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SU11Iwasawa {
    /// Rotation angle, normalized to `[0, 2π)`.
    pub theta: f64,
    /// Boost parameter (the horocyclic height coordinate of `g`).
    pub t: f64,
    /// Shear parameter.
    pub s: f64,
}

impl SU11Iwasawa {
    pub fn reassemble(&self) -> SU11Element {
        SU11Element::rotation(self.theta) * SU11Element::boost(self.t) * SU11Element::shear(self.s)
    }
}

/// Iwasawa coordinates in `n a k` order: `g = n_s a_t k_θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SU11IwasawaNAK {
    pub s: f64,
    pub t: f64,
    /// Rotation angle, normalized to `[0, 2π)`.
    pub theta: f64,
}

impl SU11IwasawaNAK {
    pub fn reassemble(&self) -> SU11Element {
        SU11Element::shear(self.s) * SU11Element::boost(self.t) * SU11Element::rotation(self.theta)
    }
}

fn normalize_angle(theta: f64) -> f64 {
    let wrapped = theta.rem_euclid(TAU);
    // rem_euclid can return exactly TAU when theta is a tiny negative number.
    if wrapped >= TAU {
        0.0
    } else {
        wrapped
    }
}

/// Closed-form `k a n` decomposition.
pub fn iwasawa_kan_su11(g: &SU11Element) -> SU11Iwasawa {
    let sum = g.a() + g.b();
    let t = sum.norm().ln();
    let theta = sum.arg();
    let s = (Complex64::cis(-theta) * (g.a() - g.b())).im / (2.0 * t.exp());
    SU11Iwasawa {
        theta: normalize_angle(theta),
        t,
        s,
    }
}

/// Closed-form `n a k` decomposition.
pub fn iwasawa_nak_su11(g: &SU11Element) -> SU11IwasawaNAK {
    let diff = g.a().conj() - g.b();
    let t = -diff.norm().ln();
    let theta = -diff.arg();
    let s = -(Complex64::cis(theta) * (g.a().conj() + g.b())).im * t.exp() / 2.0;
    SU11IwasawaNAK {
        s,
        t,
        theta: normalize_angle(theta),
    }
}

/// Direction of the Cayley transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CayleyDirection {
    DiskToHalfPlane,
    HalfPlaneToDisk,
}

/// Conformal equivalence between the open unit disk and the open upper half
/// plane:
///
/// ```text
/// disk → half plane:  w = (1 - iz) / (z - i)     (0 ↦ i, boundary circle ↦ real line)
/// half plane → disk:  z = (1 + iw) / (w + i)     (i ↦ 0)
/// ```
///
/// Arguments must lie in the open source domain; boundary and exterior points
/// are rejected with [`LieError::DomainViolation`].
pub fn cayley(z: Complex64, direction: CayleyDirection) -> Result<Complex64, LieError> {
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    match direction {
        CayleyDirection::DiskToHalfPlane => {
            if z.norm() >= 1.0 {
                return Err(LieError::DomainViolation {
                    domain: "unit disk",
                    detail: format!("|z| = {} is not < 1", z.norm()),
                });
            }
            Ok((one - i * z) / (z - i))
        }
        CayleyDirection::HalfPlaneToDisk => {
            if z.im <= 0.0 {
                return Err(LieError::DomainViolation {
                    domain: "upper half plane",
                    detail: format!("Im w = {} is not > 0", z.im),
                });
            }
            Ok((one + i * z) / (z + i))
        }
    }
}
