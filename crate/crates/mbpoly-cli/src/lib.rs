//! Command-line interface to the mbpoly engine: a small expression language
//! over basis elements, with subcommands for monomial expansion, basis
//! conversion, operator application, projective degrees, and Schur
//! determinants.

pub mod eval;
pub mod expr;
