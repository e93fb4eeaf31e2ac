//! Exact symbolic engine for the interpolated multiple zeta algebra 𝔥¹[t].
//!
//! Words in the letters `z_k` carry polynomial coefficients in `t` over ℚ.
//! The crate implements the harmonic, star and t-harmonic products, the
//! interpolating operator `S^t`, the sum and cyclic sum identity families,
//! an exact span-membership reducer, and a truncated-series evaluator for
//! multiple zeta (star) values.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod identities;
pub mod interpolation;
pub mod numeric;
pub mod reduction;

pub use algebra::*;
pub use error::{Error, Result};
