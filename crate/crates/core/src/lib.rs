//! Parabolic cylinder functions, Gauss/Kummer/generalized hypergeometric
//! functions, error functions and a numerical harness that checks inverse
//! Laplace transforms and integral representations built from them.
//!
//! The crate is split into four layers:
//!
//! * [`special`]: gamma, error functions, ₁F₁, ₂F₁, ₂F₂, Appell F₁ and D_ν.
//! * [`quad`]: adaptive Gauss–Kronrod quadrature with endpoint grading for
//!   algebraic singularities, semi-infinite tails and Laplace integrals.
//! * [`catalog`]: every identity as an executable case, evaluated on
//!   parameter grids and reduced to a [`catalog::VerificationReport`].
//! * [`cli`]: the `pcflap` command-line front end and report writers.

// Reference constants keep all the digits they were computed with, and the
// `!(a > b)` form deliberately rejects NaN.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod catalog;
pub mod cli;
mod error;
pub mod quad;
pub mod special;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// The scalar type used throughout: a double-precision complex number.
pub type ComplexValue = Complex64;
