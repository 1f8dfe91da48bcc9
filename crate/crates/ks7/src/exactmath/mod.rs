//! Exact arithmetic primitives: arbitrary-precision rationals, residues in
//! Q/Z, symmetric 2x2 integer matrices, and linear algebra over the
//! two-element field.
//!
//! Everything here is exact. There is no floating point anywhere in this
//! crate; equality of invariants always means equality of reduced fractions.

mod f2;
mod mat2;
mod qmodz;
mod rational;

pub use f2::F2Matrix;
pub use mat2::SymMat2;
pub use qmodz::QmodZ;
pub use rational::Rational;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactMathError {
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("matrix is not unimodular: det = {det}")]
    NonUnimodular { det: BigInt },
}
