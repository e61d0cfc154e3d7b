//! Dense integer polynomials in one variable `q`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Coefficients indexed by power of `q`, with no trailing zeros.
/// The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `q^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// `1 - q^v`
    pub fn one_minus_q_pow(v: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); v + 1];
        coeffs[0] += 1;
        coeffs[v] -= 1;
        Self::new(coeffs)
    }

    /// `sum_i q^{e_i}` over a multiset of exponents.
    pub fn sum_of_monomials(exponents: &[u64]) -> Self {
        let len = exponents.iter().max().map_or(0, |&m| m as usize + 1);
        let mut coeffs = vec![BigInt::zero(); len];
        for &e in exponents {
            coeffs[e as usize] += 1;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a IntPolynomial>) -> Self {
        factors.into_iter().fold(Self::one(), |acc, f| acc.mul(f))
    }

    /// Long division over the integers. Returns `(quotient, remainder)`, or
    /// `None` when some step needs a non-integral quotient coefficient.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let lead = divisor.coeffs.last()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Exact division; any remainder is [`Error::NotAPolynomial`].
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        match self.div_rem(divisor) {
            Some((q, r)) if r.is_zero() => Ok(q),
            _ => Err(Error::NotAPolynomial),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "q".to_string(),
                (1, false) => format!("{mag}q"),
                (_, true) => format!("q^{k}"),
                (_, false) => format!("{mag}q^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// `q^{shift} * prod_{V+} (1 - q^v) / prod_{V-} (1 - q^v)`, which must be a polynomial.
pub fn poly_from_factors(shift: u64, v_plus: &[u64], v_minus: &[u64]) -> Result<IntPolynomial> {
    let numer = v_plus
        .iter()
        .map(|&v| IntPolynomial::one_minus_q_pow(v as usize))
        .fold(IntPolynomial::monomial(shift as usize), |acc, f| acc.mul(&f));
    let denom =
        IntPolynomial::product(&v_minus.iter().map(|&v| IntPolynomial::one_minus_q_pow(v as usize)).collect::<Vec<_>>());
    numer.exact_div(&denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let p = IntPolynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert!(IntPolynomial::from_ints(&[0, 0]).is_zero());
        assert_eq!(IntPolynomial::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn e8_factorisation() {
        let p = poly_from_factors(1, &[20, 24], &[6, 10]).unwrap();
        assert_eq!(p, IntPolynomial::sum_of_monomials(&[1, 7, 11, 13, 17, 19, 23, 29]));
    }

    #[test]
    fn d4_needs_multisets() {
        let p = poly_from_factors(1, &[4, 4], &[2, 2]).unwrap();
        assert_eq!(p, IntPolynomial::from_ints(&[0, 1, 0, 2, 0, 1]));
        assert_eq!(p.to_string(), "q+2q^3+q^5");
    }

    #[test]
    fn non_polynomial_quotient_is_an_error() {
        assert_eq!(poly_from_factors(1, &[3], &[2]), Err(Error::NotAPolynomial));
    }

    #[test]
    fn long_division() {
        // (q^2 - 1) / (q - 1) = q + 1
        let a = IntPolynomial::from_ints(&[-1, 0, 1]);
        let b = IntPolynomial::from_ints(&[-1, 1]);
        assert_eq!(a.exact_div(&b).unwrap(), IntPolynomial::from_ints(&[1, 1]));
        // 2q = 1 * (2q + 1) - 1
        let (q, r) = IntPolynomial::from_ints(&[0, 2]).div_rem(&IntPolynomial::from_ints(&[1, 2])).unwrap();
        assert_eq!(q, IntPolynomial::one());
        assert_eq!(r, IntPolynomial::from_ints(&[-1]));
        assert!(IntPolynomial::from_ints(&[0, 1]).div_rem(&IntPolynomial::from_ints(&[0, 2])).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::one_minus_q_pow(3).to_string(), "1-q^3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
