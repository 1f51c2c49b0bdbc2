//! Counting lines on hypersurfaces of degree `2n - 3` in projective `n`-space.
//!
//! The real count `E_n` (expected number of real lines on a random Kostlan
//! hypersurface) and the complex count `C_n` are both an exact prefactor times
//! a moment of a structured random determinant. This crate provides
//!
//! * [`exact`]: big-integer combinatorics, prefactors, closed forms, the
//!   univariate formula for `C_n` and Grassmannian volumes;
//! * [`sampler`]: seeded, stream-splittable Gaussian coefficient vectors;
//! * [`matrix`]: the banded random matrices, their symbolic template and
//!   complex-to-real block embedding;
//! * [`det`]: log-space LU determinants and exact Bareiss determinants;
//! * [`poly`]: exact expansion of the symbolic determinant with Bombieri
//!   norms, Gaussian moments and support checks;
//! * [`mc`]: reproducible parallel Monte Carlo estimators and statistical
//!   tests;
//! * [`cli`]: the command-line front end used by the `hyperlines` binary.


pub mod cli;
pub mod det;
pub mod error;
pub mod exact;
pub mod matrix;
pub mod mc;

pub mod poly;
pub mod sampler;

pub use error::{Error, Result};
pub use exact::ProblemSpec;
