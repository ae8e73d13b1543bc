//! Exact scalar rings and linear algebra used throughout `cwalg`.
//!
//! Provided rings: arbitrary-precision rationals, prime fields, univariate
//! rational functions over Q, multivariate Laurent polynomials and their
//! (unreduced) fraction field.

mod frac;
mod laurent;
pub mod linalg;
mod poly;
mod prime;
mod rational;
mod scalar;

pub use frac::{Frac, MultiRational};
pub use laurent::{Laurent, Monomial};
pub use linalg::{gram_rank, Accumulator, DenseEchelonFp, RowEchelonBasis, SparseVector};
pub use poly::{Poly, RatFunc};
pub use prime::{Fp, Fp31, Fp61, P31, P61};
pub use rational::Rational;
pub use scalar::{Field, Scalar};

/// A scalar literal that could not be parsed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid scalar literal `{0}`")]
pub struct ParseScalarError(pub String);
