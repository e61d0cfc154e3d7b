//! Exact scalars, polynomials in `q` and truncated power series in `t`.

mod poly;
mod rational;
mod series;

pub use poly::{poly_from_factors, IntPolynomial};
pub use rational::{binomial, factorial, int, is_reduced, parse_rational, rat, Rational};
pub use series::TruncatedSeries;
