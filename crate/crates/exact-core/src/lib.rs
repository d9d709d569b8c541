//! Exact arithmetic substrate: big rationals, integer matrices, permutations,
//! integer polynomials with Sturm-based real root isolation, real algebraic
//! numbers, and arithmetic in number fields Q(alpha).
//!
//! Everything here is exact; no floating point participates in any verdict.
//! Values are immutable after construction, so all operations are safe to use
//! from concurrent tasks.

pub mod algebraic;
pub mod error;
pub mod field;
pub mod matrix;
pub mod perm;
pub mod poly;
pub mod rational;
pub mod scalar;

pub use algebraic::AlgebraicReal;
pub use error::CoreError;
pub use field::{FieldGenerator, NumberFieldElement};
pub use matrix::IntMatrix;
pub use perm::Permutation;
pub use poly::IntPolynomial;
pub use rational::{format_rational, parse_rational, Rational};
pub use scalar::Scalar;

pub use num_bigint::BigInt;
