//! Hecke operators on Jacobian tori and their finite-field counterparts.
//!
//! The crate is organised around the abelian (GL₁ and torus) case of the
//! analytic Langlands picture for complex curves:
//!
//! - [`torus_geometry`]: Riemann matrices, canonical points of the Jacobian
//!   `ℂ^g/(ℤ^g + Ωℤ^g)`, and the harmonic one-form attached to an integral
//!   cohomology class.
//! - [`abelian_hecke`]: Hecke operators as translations, the Fourier
//!   harmonic eigenbasis and its eigenvalues.
//! - [`connections`]: flat unitary connections, holonomy, monodromy and
//!   GL₁-opers with split real monodromy.
//! - [`torus_groups`]: the same story for a split torus given by a
//!   character/cocharacter pairing.
//! - [`finite_models`]: the finite Hecke algebra of SL₂ over `F_q` and
//!   Hecke fibers over rank-two bundles on an elliptic curve.
//! - [`fundamental_group`]: exact audit of a candidate map from `ℤ²` to
//!   finite-order characters of `π₁` of an elliptic curve.
//! - [`suites`]: self-contained verification suites producing JSON reports,
//!   driven by the `verify` binary.

pub mod abelian_hecke;
pub mod complex;
pub mod connections;
mod error;
pub mod finite_models;
pub mod fundamental_group;
pub mod suites;
pub mod torus_geometry;
pub mod torus_groups;

pub use error::{Error, Result};
pub use num_complex::Complex64;
