//! Exact arithmetic substrate: rationals, Laurent polynomials, polynomial
//! matrices and exact nullspaces.

mod laurent;
mod matrix;
pub mod nullspace;
pub mod rational;

pub use laurent::{Alphabet, Bindings, Exponents, LaurentPoly, MAX_VARS};
pub use matrix::PolyMatrix;
pub use nullspace::{exact_nullspace, rank, RatMatrix, SparseRatMatrix};
pub use rational::{format_rational, int, parse_rational, rat, Rational};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },
    #[error("unknown variable {name} in alphabet {alphabet}")]
    UnknownVariable { name: String, alphabet: String },
    #[error("variable {name} may not carry negative exponent {exponent}")]
    NegativeExponent { name: String, exponent: i32 },
    #[error("not invertible: {what}")]
    NotInvertible { what: String },
    #[error("variable {0} listed twice")]
    DuplicateVariable(String),
    #[error("shape error: {0}")]
    Shape(String),
}
