//! Exact power sums of Coxeter exponents and root heights.
//!
//! Every irreducible finite Coxeter type has exponents `m_1 <= ... <= m_r`
//! whose power sums can be written uniformly as
//!
//! ```text
//! sum_i m_i^n = n! * r * Td_n(gamma_1, ..., gamma_n)
//! ```
//!
//! where `Td_n` is the n-th Todd polynomial and the `gamma_k` come from a
//! small rational generating function in the type's parameters. This crate
//! evaluates that formula with exact rational arithmetic, compares it against
//! direct summation and the known closed forms, and checks the surrounding
//! identities (cyclotomic factorisation of `sum q^{m_i}`, the parameter
//! tables, the transformation `f(t) -> sqrt(f(2t))`, ...).
//!
//! Layout:
//! - [`arith`]: rationals, integer polynomials in `q`, truncated series in `t`
//! - [`catalog`]: Coxeter types, exponents and parameter tables
//! - [`todd`]: gamma series, Todd values, Bernoulli and Faulhaber
//! - [`powersum`]: exponent and height power sums by several methods
//! - [`verify`]: identity suites producing [`verify::CheckReport`]s

pub mod arith;
pub mod catalog;
mod error;
pub mod powersum;
pub mod todd;
pub mod verify;

pub use arith::{IntPolynomial, Rational, TruncatedSeries};
pub use catalog::{CoxeterType, Family, ParameterSet, Profile};
pub use error::{Error, Result};
