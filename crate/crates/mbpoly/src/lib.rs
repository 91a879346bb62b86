//! Sparse multivariate Laurent polynomials viewed as a multi-basis algebra.
//!
//! The crate provides exact coefficient arithmetic (big rationals, rational
//! functions in named parameters, nested polynomial coefficients), divided
//! difference operators of types A/B/C/D, linear bases defined by recursive
//! reduction rules (Schubert, Key, Grothendieck, nonsymmetric Macdonald,
//! double Schubert/Grothendieck), triangular conversion between bases, and
//! two worked applications: projective degrees of Schubert varieties and
//! Schur-determinant evaluation.

pub mod bases;
pub mod basis;
pub mod coeff;
pub mod degrees;
pub mod double;
mod modgcd;
pub mod param;
pub mod poly;
pub mod schur;
pub mod weyl;

pub use basis::{Basis, Domain, Expansion, Order, Outcome, PolyOp, Registry, Step};
pub use coeff::{Coefficient, Rational};
pub use double::{DoubleExpansion, DoublePolynomial, YPolynomial};
pub use param::{ParamFraction, ParamPolynomial, ParamRing};
pub use poly::Polynomial;
pub use weyl::Family;

use thiserror::Error;

/// Errors surfaced by fallible engine operations.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not invertible: {0}")]
    NotInvertible(String),
    #[error("exact division failed: {0}")]
    NotDivisible(String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("cannot shrink to {target} variables: exponent vector {vector:?} is nonzero beyond position {target}")]
    ShrinkDropsExponent { target: usize, vector: Vec<i64> },
    #[error("negative power {exponent} of variable x{index} requires an invertible substitution value")]
    NonInvertibleSubstitution { index: usize, exponent: i64 },
    #[error("operator index {index} out of range for type {family} with {nvars} variables")]
    IndexOutOfRange {
        family: weyl::Family,
        index: usize,
        nvars: usize,
    },
    #[error("basis `{0}` is already registered")]
    DuplicateBasis(String),
    #[error("display prefix `{0}` is already registered")]
    DuplicatePrefix(String),
    #[error("unknown basis `{0}`")]
    UnknownBasis(String),
    #[error("index {index:?} is outside the domain of basis `{basis}`")]
    IndexOutsideDomain { basis: String, index: Vec<i64> },
    #[error("recursion depth bound {bound} exceeded while expanding {index:?} in basis `{basis}`")]
    DepthExceeded {
        basis: String,
        index: Vec<i64>,
        bound: usize,
    },
    #[error("basis `{basis}` is not triangular here: leading vector {next:?} does not strictly advance past {prev:?}")]
    NotTriangular {
        basis: String,
        prev: Vec<i64>,
        next: Vec<i64>,
    },
    #[error("expansions live in different bases: `{0}` vs `{1}`")]
    BasisMismatch(String, String),
    #[error("not a valid permutation of 1..{0}")]
    BadPermutation(usize),
    #[error("specialization did not reduce to a scalar: residual support {0:?}")]
    NotScalar(Vec<i64>),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
