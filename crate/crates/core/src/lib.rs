//! Exact decision procedures for the existence of connections on graded
//! maximal Cohen-Macaulay modules.
//!
//! The crate has two computational pillars:
//!
//! * a symbolic solver over weighted-graded polynomial rings, deciding
//!   whether a graded module presented by a matrix factorization admits a
//!   graded (or merely k-linear) connection with respect to a family of
//!   derivations, including integrability checks; and
//! * a combinatorial solver for monomial curve singularities, where the same
//!   question reduces to exact linear algebra indexed by a numerical
//!   semigroup.
//!
//! All arithmetic is exact: coefficients live in the rationals `Q` or the
//! Gaussian rationals `Qi`, and every verdict is a consequence of the
//! feasibility of an explicit linear system. Everything is generic over the
//! [`exact::Scalar`] field; the aliases below fix the two concrete fields
//! used throughout the test suite and the CLI.

pub mod catalog;
pub mod error;
pub mod exact;
pub mod gradconn;
pub mod io;
pub mod matfac;
pub mod semigroup;
pub mod wpoly;

pub use error::{Error, Result};

/// Exact rational scalars.
pub type Q = exact::Rational;
/// Exact Gaussian rational scalars (`Q` adjoined `i`).
pub type Qi = exact::GaussianRational;
/// Dense matrix over the rationals.
pub type QMatrix = exact::Matrix<Q>;
