use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision fraction, always stored reduced with positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Generalised binomial coefficient `C(x, k)` for rational `x`.
pub fn binomial(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc = acc * (x - int(j as i64)) / int(j as i64 + 1);
    }
    acc
}

pub fn is_reduced(x: &Rational) -> bool {
    x.denom().is_positive() && x.numer().gcd(x.denom()).is_one()
        && (!x.numer().is_zero() || x.denom().is_one())
}

/// Parses `"a"`, `"-a"` or `"a/b"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidParameter(format!("not a rational number: {text:?}"));
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let x = rat(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert!(is_reduced(&x));
        let z = rat(0, 7);
        assert!(z.denom().is_one());
        assert!(is_reduced(&z));
    }

    #[test]
    fn parse() {
        assert_eq!(parse_rational("7/2").unwrap(), rat(7, 2));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn generalised_binomial() {
        assert_eq!(binomial(&int(5), 2), int(10));
        assert_eq!(binomial(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(binomial(&int(-1), 3), int(-1));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
