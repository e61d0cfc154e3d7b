//! Truncated formal power series with rational coefficients.
//!
//! A series of order `N` stores exactly the coefficients of `t^0 ..= t^N`.
//! Binary operations truncate to the smaller of the two orders.
//!
//! Logarithm and exponential are computed from the coefficient relations
//! `a' = a * (log a)'` and `(exp a)' = a' * exp a`; inversion and rational
//! powers are then expressed through them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{int, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series of the given order; missing coefficients are zero,
    /// extra ones are dropped.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    /// The order is `coeffs.len() - 1`; an empty vector gives the zero series of order 0.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let order = coeffs.len().saturating_sub(1);
        Self::new(coeffs, order)
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect(), order)
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `1 - c t`
    pub fn one_minus(c: &Rational, order: usize) -> Self {
        Self::new(vec![Rational::one(), -c.clone()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `t^n`; zero beyond the order.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order.min(self.order()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `f(c t)`
    pub fn dilate(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a * &pow;
                pow = &pow * c;
                v
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .filter(|&k| !self.coeffs[k].is_zero())
                    .fold(Rational::zero(), |acc, k| acc + &self.coeffs[k] * &other.coeffs[n - k])
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        // n a_n = sum_{k=1}^{n} k b_k a_{n-k}  =>  b_n = a_n - (1/n) sum_{k<n} k b_k a_{n-k}
        let a = &self.coeffs;
        let mut b = vec![Rational::zero(); a.len()];
        for n in 1..a.len() {
            let acc = (1..n).fold(Rational::zero(), |acc, k| acc + int(k as i64) * &b[k] * &a[n - k]);
            b[n] = &a[n] - acc / int(n as i64);
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Formal exponential of a series with constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // n b_n = sum_{k=1}^{n} k a_k b_{n-k}
        let a = &self.coeffs;
        let mut b = vec![Rational::zero(); a.len()];
        b[0] = Rational::one();
        for n in 1..a.len() {
            let acc = (1..=n).fold(Rational::zero(), |acc, k| acc + int(k as i64) * &a[k] * &b[n - k]);
            b[n] = acc / int(n as i64);
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// `exp(exponent * log(self))`, the branch with constant term 1.
    pub fn pow(&self, exponent: &Rational) -> Result<Self> {
        self.log()?.scale(exponent).exp()
    }

    /// Multiplicative inverse; `a^{-1} = a_0^{-1} exp(-log(a / a_0))`.
    pub fn inv(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let normalised = self.scale(&inv0);
        Ok(normalised.log()?.scale(&int(-1)).exp()?.scale(&inv0))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        TruncatedSeries::from_fn(order, |n| &self.coeffs[n] + &other.coeffs[n])
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        TruncatedSeries::from_fn(order, |n| &self.coeffs[n] - &other.coeffs[n])
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        self.scale(&int(-1))
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, other: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::mul(self, other)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] + O(t^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn s(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_ints(c, c.len() - 1)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, 1, 0])), s(&[1, 2, 1]));
        let f = s(&[3, -1, 4, 1]);
        assert_eq!(TruncatedSeries::one(3).mul(&f), f);
        assert_eq!(s(&[1, 2, 2, 2]).mul(&s(&[1, -1, 0, 0])), s(&[1, 1, 0, 0]));
    }

    #[test]
    fn mixed_orders_truncate_to_shorter() {
        let p = s(&[1, 1, 1, 1, 1]).mul(&s(&[1, 1]));
        assert_eq!(p.order(), 1);
        assert_eq!(p, s(&[1, 2]));
        assert_eq!((&s(&[1, 1, 1]) + &s(&[1, 1])).order(), 1);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(s(&[1, -1, 0, 0]).inv().unwrap(), s(&[1, 1, 1, 1]));
        assert_eq!(s(&[1, -2, 0, 0, 0]).inv().unwrap(), s(&[1, 2, 4, 8, 16]));
        assert_eq!(s(&[2]).inv().unwrap(), TruncatedSeries::constant(rat(1, 2), 0));
        assert_eq!(s(&[0, 1]).inv(), Err(Error::ZeroConstantTerm));
        // non-unit constant term with higher coefficients
        let a = s(&[3, 1, -2, 5]);
        assert_eq!(a.mul(&a.inv().unwrap()), TruncatedSeries::one(3));
    }

    #[test]
    fn log_examples() {
        assert_eq!(TruncatedSeries::one(4).log().unwrap(), TruncatedSeries::zero(4));
        let mercator = TruncatedSeries::new(vec![int(0), int(1), rat(-1, 2), rat(1, 3)], 3);
        assert_eq!(s(&[1, 1, 0, 0]).log().unwrap(), mercator);
        let a = s(&[1, 3, 6, 12]);
        assert_eq!(a.log().unwrap().exp().unwrap(), a);
        assert_eq!(s(&[2, 1]).log(), Err(Error::ConstantTermNotOne));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(TruncatedSeries::zero(3).exp().unwrap(), TruncatedSeries::one(3));
        let e = s(&[0, 1, 0, 0, 0, 0]).exp().unwrap();
        let fact = [1, 1, 2, 6, 24, 120];
        for n in 0..=5 {
            assert_eq!(e.coeff(n), rat(1, fact[n]));
        }
        let e2 = s(&[0, 2, 0, 0, 0, 0]).exp().unwrap();
        for n in 0..=5 {
            assert_eq!(e2.coeff(n), rat(1 << n, fact[n]));
        }
        assert_eq!(s(&[1, 1]).exp(), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(s(&[1, 2, 1, 0, 0]).pow(&rat(1, 2)).unwrap(), s(&[1, 1, 0, 0, 0]));
        let q = s(&[1, 2, 0, 0, 0, 0]).div(&s(&[1, -2, 0, 0, 0, 0])).unwrap();
        assert_eq!(q.pow(&rat(1, 2)).unwrap(), s(&[1, 2, 2, 4, 6, 12]));
        assert_eq!(s(&[1, 5, -3]).pow(&int(0)).unwrap(), TruncatedSeries::one(2));
        assert_eq!(s(&[3, 1]).pow(&int(2)), Err(Error::ConstantTermNotOne));
    }

    #[test]
    fn dilate_and_display() {
        assert_eq!(s(&[1, 1, 1]).dilate(&int(2)), s(&[1, 2, 4]));
        assert_eq!(TruncatedSeries::new(vec![int(1), rat(1, 2)], 1).to_string(), "[1, 1/2] + O(t^2)");
    }
}
