//! Exact computer algebra for quasi-spline modules.
//!
//! A quasi-spline module over a polynomial ring `R` is a submodule of `R^s`
//! that contains the diagonal `(1, …, 1)` and is closed under entrywise
//! multiplication; the classical example is the module of piecewise
//! polynomials on a subdivided domain. This crate computes such modules from
//! ideal difference-conditions, follows them through parameter
//! specialization, homogenizes them by the total-degree filtration, extracts
//! Hilbert series/polynomials and Gotzmann regularity bounds, and stratifies
//! one-parameter families by the exact ranks of their degree-d difference
//! maps.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! all outputs are deterministic (reduced Gröbner bases are canonical).
//!
//! Start with the runnable examples in `examples/`, or feed a JSON job file
//! to the `quasisplines` binary.

pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod homogenize;
mod linalg;
pub mod poly;
pub mod quasispline;
pub mod strata;

pub use error::{Error, Result};
