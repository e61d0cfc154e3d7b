//! Gamma series, Todd polynomial values, Bernoulli polynomials and Faulhaber sums.
//!
//! Todd values are never expanded symbolically. Writing the gamma series as
//! `prod_j (1 + x_j t)`, the power sums `P_k = sum_j x_j^k` follow from the
//! coefficients by Newton's identities, and
//!
//! ```text
//! sum_n Td_n t^n = prod_j Q(x_j t) = exp( sum_k lambda_k P_k t^k ),
//! Q(u) = u / (1 - e^{-u}),   log Q(u) = sum_k lambda_k u^k.
//! ```
//!
//! Sign convention: `Q(u) = sum_n B_n^+ u^n / n!` uses `B_1^+ = +1/2`, while
//! [`bernoulli_numbers`] and [`bernoulli_polynomial`] follow
//! `t e^{tx} / (e^t - 1)`, i.e. `B_1 = -1/2`. The two differ only in the sign
//! of the odd-index terms: `B_n^+ = (-1)^n B_n`.

use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, int, rat, Rational, TruncatedSeries};
use crate::catalog::ParameterSet;
use crate::{Error, Result};

/// `((1 + p t)/(1 - p t))^{1/p}`
pub fn p_factor(p: u32, order: usize) -> TruncatedSeries {
    assert!(p >= 1, "p must be positive");
    p_factor_rational(&int(i64::from(p)), &rat(1, i64::from(p)), order)
}

fn p_factor_rational(pi: &Rational, mu: &Rational, order: usize) -> TruncatedSeries {
    let num = TruncatedSeries::new(vec![Rational::one(), pi.clone()], order);
    let den = TruncatedSeries::one_minus(pi, order);
    num.div(&den)
        .and_then(|q| q.pow(mu))
        .expect("constant term is 1")
}

/// `prod_k ((1 + pi_k t)/(1 - pi_k t))^{mu_k}`, requiring `sum_k pi_k mu_k = m1`.
pub fn p_factor_general(pairs: &[(Rational, Rational)], m1: u64, order: usize) -> Result<TruncatedSeries> {
    let total: Rational = pairs.iter().map(|(pi, mu)| pi * mu).sum();
    if total != int(m1 as i64) {
        return Err(Error::ConstraintViolated(format!("sum of pi_k mu_k is {total}, expected {m1}")));
    }
    Ok(pairs
        .iter()
        .fold(TruncatedSeries::one(order), |acc, (pi, mu)| acc.mul(&p_factor_rational(pi, mu, order))))
}

/// `sum_n gamma_n t^n` together with the `p` used to build it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSeries {
    pub series: TruncatedSeries,
    pub p: u32,
}

impl GammaSeries {
    pub fn gamma(&self, n: usize) -> Rational {
        self.series.coeff(n)
    }

    pub fn todd_values(&self, n_max: usize) -> ToddValues {
        todd_values(&self.series, n_max)
    }
}

/// `prod_{V-}(1 - v t) / prod_{V+}(1 - v t) * p_factor(p)`
pub fn gamma_series(params: &ParameterSet, p: u32, order: usize) -> GammaSeries {
    let numer = params
        .v_minus()
        .iter()
        .fold(TruncatedSeries::one(order), |acc, v| acc.mul(&TruncatedSeries::one_minus(v, order)));
    let denom = params
        .v_plus()
        .iter()
        .fold(TruncatedSeries::one(order), |acc, v| acc.mul(&TruncatedSeries::one_minus(v, order)));
    let rational_part = numer.div(&denom).expect("constant term is 1");
    GammaSeries { series: rational_part.mul(&p_factor(p, order)), p }
}

/// Same series as [`gamma_series`], but through `(1 - (alpha+beta) t + alpha beta t^2) sum X_n t^n`,
/// which only uses `h, gamma, alpha, beta`.
pub fn gamma_series_xn(params: &ParameterSet, p: u32, order: usize) -> GammaSeries {
    let x = TruncatedSeries::new(x_sequence(params, order), order);
    let s = &params.alpha + &params.beta;
    let quad = TruncatedSeries::new(vec![Rational::one(), -s, &params.alpha * &params.beta], order);
    GammaSeries { series: quad.mul(&x).mul(&p_factor(p, order)), p }
}

/// `A + B = h - 2 + alpha + beta`
pub fn sum_ab(params: &ParameterSet) -> Rational {
    int(params.h - 2) + &params.alpha + &params.beta
}

/// `AB = h^2 - gamma + (h - 2)(alpha + beta - 1) + alpha beta`
pub fn prod_ab(params: &ParameterSet) -> Rational {
    let h = int(params.h);
    &h * &h - int(params.gamma) + (&h - int(2)) * (&params.alpha + &params.beta - int(1)) + &params.alpha * &params.beta
}

/// `X_n = sum_{j=0}^n A^j B^{n-j}` by the two-term recursion in `A + B` and `AB`.
pub fn x_sequence(params: &ParameterSet, n_max: usize) -> Vec<Rational> {
    let (s, q) = (sum_ab(params), prod_ab(params));
    let mut x = Vec::with_capacity(n_max + 1);
    x.push(Rational::one());
    if n_max >= 1 {
        x.push(s.clone());
    }
    for n in 2..=n_max {
        let next = &s * &x[n - 1] - &q * &x[n - 2];
        x.push(next);
    }
    x
}

/// `X_n = sum_j (-1)^j C(n-j, j) (A+B)^{n-2j} (AB)^j`
pub fn x_closed(params: &ParameterSet, n: usize) -> Rational {
    let (s, q) = (sum_ab(params), prod_ab(params));
    (0..=n / 2)
        .map(|j| {
            let sign = if j % 2 == 0 { int(1) } else { int(-1) };
            sign * binomial(&int((n - j) as i64), j) * pow(&s, n - 2 * j) * pow(&q, j)
        })
        .sum()
}

pub(crate) fn pow(x: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * x)
}

/// `Td_0, Td_1, ..., Td_{n_max}` evaluated at the coefficients of a gamma series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToddValues(pub Vec<Rational>);

impl ToddValues {
    pub fn get(&self, n: usize) -> &Rational {
        &self.0[n]
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }
}

/// `lambda_0 = 0, lambda_1, ..., lambda_order` with `log(u/(1 - e^{-u})) = sum lambda_k u^k`.
pub fn todd_log_coefficients(order: usize) -> Vec<Rational> {
    let b = bernoulli_numbers(order);
    let q = TruncatedSeries::from_fn(order, |n| {
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        sign * &b[n] / Rational::from_integer(factorial(n))
    });
    q.log().expect("constant term is 1").into_coeffs()
}

/// Power sums `P_1..P_n` (index 0 unused) of the virtual roots whose
/// elementary symmetric functions are `e_1, e_2, ...`.
pub fn newton_power_sums(e: &[Rational], n: usize) -> Vec<Rational> {
    let e_at = |k: usize| e.get(k).cloned().unwrap_or_else(Rational::zero);
    let mut p = vec![Rational::zero(); n + 1];
    for k in 1..=n {
        let mut acc = int(k as i64) * e_at(k);
        if k % 2 == 0 {
            acc = -acc;
        }
        for i in 1..k {
            let term = e_at(i) * &p[k - i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[k] = acc;
    }
    p
}

pub fn todd_values(gamma: &TruncatedSeries, n_max: usize) -> ToddValues {
    todd_values_with(&todd_log_coefficients(n_max), gamma, n_max)
}

/// [`todd_values`] with explicitly supplied `lambda_k`.
pub fn todd_values_with(lambda: &[Rational], gamma: &TruncatedSeries, n_max: usize) -> ToddValues {
    assert!(n_max <= gamma.order(), "gamma series of order {} too short for Td_{n_max}", gamma.order());
    assert!(lambda.len() > n_max, "need lambda_1..lambda_{n_max}");
    let p = newton_power_sums(gamma.coeffs(), n_max);
    let exponent = TruncatedSeries::from_fn(n_max, |k| if k == 0 { Rational::zero() } else { &lambda[k] * &p[k] });
    ToddValues(exponent.exp().expect("constant term is 0").into_coeffs())
}

/// The explicit Todd polynomials `Td_0 .. Td_5`.
pub fn todd_closed(n: usize, c: &[Rational]) -> Result<Rational> {
    if n > 5 {
        return Err(Error::UnsupportedDegree(n));
    }
    if c.len() < n {
        return Err(Error::InvalidParameter(format!("Td_{n} needs {n} arguments, got {}", c.len())));
    }
    let c = |i: usize| c[i - 1].clone();
    Ok(match n {
        0 => Rational::one(),
        1 => c(1) / int(2),
        2 => (c(1) * c(1) + c(2)) / int(12),
        3 => c(1) * c(2) / int(24),
        4 => {
            let c1 = c(1);
            (-pow(&c1, 4) + int(4) * pow(&c1, 2) * c(2) + &c1 * c(3) + int(3) * pow(&c(2), 2) - c(4)) / int(720)
        }
        _ => {
            let c1 = c(1);
            (-pow(&c1, 3) * c(2) + int(3) * &c1 * pow(&c(2), 2) + pow(&c1, 2) * c(3) - &c1 * c(4)) / int(1440)
        }
    })
}

/// `B_0 .. B_n` from `t/(e^t - 1)` (so `B_1 = -1/2`).
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    // (e^t - 1)/t = sum t^k/(k+1)!
    let denom = TruncatedSeries::from_fn(n, |k| Rational::new(1.into(), factorial(k + 1)));
    let inv = denom.inv().expect("constant term is 1");
    (0..=n).map(|k| inv.coeff(k) * Rational::from_integer(factorial(k))).collect()
}

/// Coefficients of `B_n(x)`, lowest power first.
pub fn bernoulli_polynomial(n: usize) -> Vec<Rational> {
    let b = bernoulli_numbers(n);
    // B_n(x) = sum_k C(n, k) B_k x^{n-k}
    (0..=n).map(|j| binomial(&int(n as i64), n - j) * &b[n - j]).collect()
}

pub fn eval_polynomial(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// `sum_{i=1}^r i^n = (B_{n+1}(r+1) - B_{n+1}(1)) / (n+1)`
pub fn faulhaber(n: usize, r: u64) -> Rational {
    let b = bernoulli_polynomial(n + 1);
    let top = eval_polynomial(&b, &int(r as i64 + 1));
    let bottom = eval_polynomial(&b, &int(1));
    (top - bottom) / int(n as i64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{parameters, Profile};

    fn params(s: &str) -> ParameterSet {
        let t = s.parse().unwrap();
        parameters(t, Profile::default_for(t)).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn p_factor_values() {
        assert_eq!(p_factor(1, 5).coeffs(), ints(&[1, 2, 2, 2, 2, 2]).as_slice());
        assert_eq!(p_factor(2, 5).coeffs(), ints(&[1, 2, 2, 4, 6, 12]).as_slice());
        assert_eq!(p_factor(3, 3).coeff(3), rat(22, 3));
    }

    #[test]
    fn p_factor_matches_printed_expansion() {
        for p in 1..=6i64 {
            let s = p_factor(p as u32, 5);
            let p2 = p * p;
            assert_eq!(s.coeff(1), int(2));
            assert_eq!(s.coeff(2), int(2));
            assert_eq!(s.coeff(3), rat(2 * p2 + 4, 3));
            assert_eq!(s.coeff(4), rat(4 * p2 + 2, 3));
            assert_eq!(s.coeff(5), rat(6 * p2 * p2 + 20 * p2 + 4, 15));
        }
    }

    #[test]
    fn p_factor_general_reductions() {
        let one = || int(1);
        assert_eq!(p_factor_general(&[(one(), one())], 1, 8).unwrap(), p_factor(1, 8));
        assert_eq!(p_factor_general(&[(int(2), rat(1, 2))], 1, 8).unwrap(), p_factor(2, 8));
        assert_eq!(p_factor_general(&[(one(), rat(1, 2)), (one(), rat(1, 2))], 1, 8).unwrap(), p_factor(1, 8));
        let g = p_factor_general(&[(int(3), rat(1, 2)), (int(1), rat(1, 2))], 2, 6).unwrap();
        assert_eq!(g.coeff(1), int(4));
        assert!(matches!(p_factor_general(&[(int(2), int(1))], 1, 4), Err(Error::ConstraintViolated(_))));
    }

    #[test]
    fn gamma_series_examples() {
        let a2 = gamma_series(&params("A2"), 1, 4);
        assert_eq!(a2.series.coeffs(), ints(&[1, 3, 6, 12, 24]).as_slice());
        let e8 = gamma_series(&params("E8"), 1, 4);
        assert_eq!((e8.gamma(1), e8.gamma(2)), (int(30), int(870)));
        for p in 1..=3 {
            assert_eq!(gamma_series(&params("A1"), p, 8).series, p_factor(p, 8));
        }
    }

    #[test]
    fn xn_route_examples() {
        let e8 = params("E8");
        let x = x_sequence(&e8, 3);
        assert_eq!(x[0], int(1));
        assert_eq!(x[1], int(44));
        assert_eq!(x[2], int(1456));
        for n in 0..=10 {
            assert_eq!(x_sequence(&e8, 10)[n], x_closed(&e8, n));
        }
        assert_eq!(gamma_series_xn(&e8, 1, 12), gamma_series(&e8, 1, 12));
        assert_eq!(gamma_series_xn(&params("A2"), 2, 12), gamma_series(&params("A2"), 2, 12));
        let h3 = params("H3");
        assert_eq!(gamma_series_xn(&h3, 1, 2).series.coeffs(), ints(&[1, 10, 114]).as_slice());
    }

    #[test]
    fn todd_lambdas_start_as_expected() {
        // log(u/(1-e^{-u})) = u/2 - u^2/24 + u^4/2880 - ...
        let l = todd_log_coefficients(5);
        assert_eq!(l[0], int(0));
        assert_eq!(l[1], rat(1, 2));
        assert_eq!(l[2], rat(-1, 24));
        assert_eq!(l[3], int(0));
        assert_eq!(l[4], rat(1, 2880));
        assert_eq!(l[5], int(0));
    }

    #[test]
    fn newton_identities() {
        // roots 1, 2, 3: e = 1, 6, 11, 6 ; p_k = 1 + 2^k + 3^k
        let p = newton_power_sums(&ints(&[1, 6, 11, 6]), 6);
        for k in 1..=6u32 {
            assert_eq!(p[k as usize], int(1 + 2i64.pow(k) + 3i64.pow(k)));
        }
    }

    #[test]
    fn todd_values_examples() {
        let g = TruncatedSeries::from_ints(&[1, 3, 6, 12], 3);
        let td = todd_values(&g, 3);
        assert_eq!(td.get(0), &int(1));
        assert_eq!(td.get(1), &rat(3, 2));
        assert_eq!(td.get(2), &rat(5, 4));
        assert_eq!(td.get(3), &rat(3, 4));
    }

    #[test]
    fn todd_closed_examples() {
        assert_eq!(todd_closed(4, &ints(&[1, 1, 1, 1])).unwrap(), rat(1, 120));
        assert_eq!(todd_closed(5, &ints(&[1, 0, 0, 0, 7])).unwrap(), int(0));
        assert_eq!(todd_closed(2, &ints(&[3, 6])).unwrap(), rat(5, 4));
        assert_eq!(todd_closed(6, &ints(&[1; 6])), Err(Error::UnsupportedDegree(6)));
    }

    #[test]
    fn todd_values_agree_with_closed_forms() {
        let samples = [vec![1, 1, 1, 1, 1, 1], vec![2, -3, 5, 7, -11, 13], vec![30, 870, 25000, 3, 9, 1]];
        for c in samples {
            let mut coeffs = vec![1];
            coeffs.extend(&c);
            let td = todd_values(&TruncatedSeries::from_ints(&coeffs, 6), 5);
            for n in 0..=5 {
                assert_eq!(td.get(n), &todd_closed(n, &ints(&c)).unwrap(), "n={n} c={c:?}");
            }
        }
    }

    #[test]
    fn bernoulli() {
        assert_eq!(bernoulli_polynomial(0), ints(&[1]));
        assert_eq!(bernoulli_polynomial(1), vec![rat(-1, 2), int(1)]);
        assert_eq!(bernoulli_polynomial(2), vec![rat(1, 6), int(-1), int(1)]);
        let b = bernoulli_numbers(8);
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[6], rat(1, 42));
        assert_eq!(b[8], rat(-1, 30));
    }

    #[test]
    fn faulhaber_sums() {
        assert_eq!(faulhaber(1, 4), int(10));
        assert_eq!(faulhaber(2, 3), int(14));
        assert_eq!(faulhaber(0, 9), int(9));
        assert_eq!(faulhaber(5, 0), int(0));
        for n in 0..=8usize {
            for r in 0..=20u64 {
                let direct: i64 = (1..=r as i64).map(|i| i.pow(n as u32)).sum();
                assert_eq!(faulhaber(n, r), int(direct));
            }
        }
    }
}
