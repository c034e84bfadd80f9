//! Covariance-regularized linear discriminant analysis for high-dimension,
//! low-sample-size data.
//!
//! The pipeline estimates a sparse precision matrix with the graphical
//! lasso, de-sparsifies it as `T = 2Θ − ΘΣΘ`, and plugs the result into a
//! two-class Fisher discriminant. Closed-form expected error rates and their
//! upper bounds, seeded synthetic data, an EHR visit-log ingestion step and a
//! repeated-trial evaluation harness complete the crate.

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod dataset;
pub mod discriminant;
pub mod ehr;
pub mod error;
pub mod error_theory;
pub mod estimators;
pub mod eval;
pub mod glasso;
pub mod matrix;
pub mod synth;

pub use error::{Error, Result};
pub use matrix::{cholesky, invert_spd, norms, pseudo_inverse, CholeskyFactor, MatrixNorms, SymMatrix};
