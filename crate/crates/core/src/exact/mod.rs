//! Exact arithmetic: scalar fields and dense linear algebra over them.

pub mod linalg;
pub mod scalar;

pub use linalg::{is_feasible, solve_affine, AffineSolveResult, Matrix};
pub use scalar::{GaussianRational, Rational, Scalar};
