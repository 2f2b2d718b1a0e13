//! Harmonic analysis on the hyperbolic disk through its horocycles.
//!
//! The library is organized in five layers, each usable on its own:
//!
//! * [`numerics`] — quadrature rules, line grids, a complex gamma function,
//!   matched discrete Fourier transform pairs and the seeded PRNG that every
//!   randomized routine draws from.
//! * [`lie`] — Iwasawa decompositions and root-space structure for the
//!   unimodular groups `SL(d, R)` and `SU(1, 1)`, plus the Cayley transform
//!   between the disk and the upper half plane.
//! * [`disk`] — the open unit disk as a homogeneous space of `SU(1, 1)`:
//!   Mobius action, boundary circle, horocycles, the composite distance
//!   (horocyclic signed distance) and boundary densities.
//! * [`spd`] — the positive-definite unimodular matrices as the higher-rank
//!   model space, with congruence action, UDU factorization and flat
//!   (horocyclic) level sets.
//! * [`transforms`] — the transform stack over the disk: horocycle Radon
//!   transform, its Abel normalization, the spectral (boundary) Fourier
//!   transform, the Harish-Chandra density, the intertwining multiplier and
//!   the unitarized Radon operator, together with measure calibration,
//!   Plancherel pairings and the symmetry properties of spectral functions.

pub mod disk;
pub mod lie;
pub mod numerics;
pub mod spd;
pub mod transforms;
