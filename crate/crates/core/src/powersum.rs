//! Power sums of exponents `S_n = sum_i m_i^n` and of root heights
//! `H_n = sum_{phi > 0} ht(phi)^n`, each by several independent routes.
//!
//! Height sums never construct roots: `H_n = sum_i (1^n + ... + m_i^n)`,
//! cross-checked against `sum_j k_j j^n` over the dual partition. For the
//! noncrystallographic types this is a formal height sum.

use std::fmt;

use num_traits::Zero;

use crate::arith::{factorial, int, Rational};
use crate::catalog::{dual_partition, exponents, parameters, CoxeterType, ExponentList, ParameterSet, Profile};
use crate::todd::{faulhaber, gamma_series, pow, todd_log_coefficients, todd_values_with};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Todd,
    Closed,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Todd => "todd",
            Method::Closed => "closed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumResult {
    pub ty: CoxeterType,
    pub n: usize,
    pub value: Rational,
    pub method: Method,
}

fn default_params(t: CoxeterType) -> ParameterSet {
    parameters(t, Profile::default_for(t)).expect("default profile always applies")
}

pub fn exponent_power_sum(e: &ExponentList, n: usize) -> Rational {
    e.values().iter().map(|&m| pow(&int(m as i64), n)).sum()
}

pub fn powersum_direct(t: CoxeterType, n: usize) -> PowerSumResult {
    PowerSumResult { ty: t, n, value: exponent_power_sum(&exponents(t), n), method: Method::Direct }
}

/// `n! r Td_n(gamma_1, ..., gamma_n)` for every `n <= n_max` at once.
pub fn todd_power_sums(params: &ParameterSet, n_max: usize, p: u32) -> Vec<Rational> {
    todd_power_sums_with(&todd_log_coefficients(n_max), params, n_max, p)
}

/// [`todd_power_sums`] with explicitly supplied `log(u/(1 - e^{-u}))` coefficients.
pub fn todd_power_sums_with(lambda: &[Rational], params: &ParameterSet, n_max: usize, p: u32) -> Vec<Rational> {
    let td = todd_values_with(lambda, &gamma_series(params, p, n_max).series, n_max);
    td.values()
        .iter()
        .enumerate()
        .map(|(n, v)| Rational::from_integer(factorial(n)) * int(params.r) * v)
        .collect()
}

pub fn powersum_todd_with(params: &ParameterSet, n: usize, p: u32) -> Rational {
    todd_power_sums(params, n, p).swap_remove(n)
}

pub fn powersum_todd(t: CoxeterType, n: usize, p: u32) -> PowerSumResult {
    PowerSumResult { ty: t, n, value: powersum_todd_with(&default_params(t), n, p), method: Method::Todd }
}

/// `R_45 = (h^2 - gamma - h + 2)((h - 2 + alpha + beta)(alpha + beta) - alpha beta)
///        + (h - 2)(h - 2 + alpha + beta) alpha beta`
pub fn r45(ps: &ParameterSet) -> Rational {
    let (h, g) = (int(ps.h), int(ps.gamma));
    let s = &ps.alpha + &ps.beta;
    let prod = &ps.alpha * &ps.beta;
    let shifted = &h - int(2) + &s;
    (&h * &h - &g - &h + int(2)) * (&shifted * &s - &prod) + (&h - int(2)) * shifted * prod
}

/// Closed forms for `S_0 .. S_5` in `r, h, gamma, alpha, beta`.
pub fn powersum_closed_with(ps: &ParameterSet, n: usize) -> Result<Rational> {
    let (r, h, g) = (int(ps.r), int(ps.h), int(ps.gamma));
    let h2 = &h * &h;
    Ok(match n {
        0 => r,
        1 => r * h / int(2),
        2 => r * (&h2 + &g - &h) / int(6),
        3 => r * &h * (g - h) / int(4),
        4 => {
            let inner = -pow(&h, 4) + int(5) * &h2 * &g + int(2) * &g * &g - int(7) * pow(&h, 3)
                - int(2) * &h * &g
                + int(4) * &h2
                - int(2) * &g
                - int(2) * &h
                + int(2)
                + r45(ps);
            r * inner / int(30)
        }
        5 => {
            let inner = int(2) * &g * &g - int(2) * pow(&h, 3) - int(2) * &h * &g + int(4) * &h2
                - int(2) * &g
                - int(2) * &h
                + int(2)
                + r45(ps);
            r * h * inner / int(12)
        }
        _ => return Err(Error::UnsupportedDegree(n)),
    })
}

pub fn powersum_closed(t: CoxeterType, n: usize) -> Result<PowerSumResult> {
    let value = powersum_closed_with(&default_params(t), n)?;
    Ok(PowerSumResult { ty: t, n, value, method: Method::Closed })
}

/// `sum_i (1^n + ... + m_i^n)`, checked against `sum_j k_j j^n`.
pub fn height_power_sum(e: &ExponentList, n: usize) -> Result<Rational> {
    let by_faulhaber: Rational = e.values().iter().map(|&m| faulhaber(n, m)).sum();
    let by_partition: Rational = dual_partition(e)
        .counts()
        .iter()
        .enumerate()
        .map(|(j, &k)| int(k as i64) * pow(&int(j as i64 + 1), n))
        .sum();
    if by_faulhaber != by_partition {
        return Err(Error::InternalMismatch(format!(
            "height sum n={n}: Faulhaber route {by_faulhaber}, dual partition route {by_partition}"
        )));
    }
    Ok(by_faulhaber)
}

pub fn heightsum_direct(t: CoxeterType, n: usize) -> Result<PowerSumResult> {
    Ok(PowerSumResult { ty: t, n, value: height_power_sum(&exponents(t), n)?, method: Method::Direct })
}

/// Closed forms for `H_0 .. H_4`.
pub fn heightsum_closed_with(ps: &ParameterSet, n: usize) -> Result<Rational> {
    let (r, h, g) = (int(ps.r), int(ps.h), int(ps.gamma));
    let h2 = &h * &h;
    Ok(match n {
        0 => r * h / int(2),
        1 => r * (&h2 + &g + int(2) * &h) / int(12),
        2 => r * (h + int(1)) * g / int(12),
        3 => {
            let inner = -pow(&h, 4) + int(5) * &h2 * &g + int(2) * &g * &g - int(7) * pow(&h, 3)
                + int(13) * &h * &g
                - int(6) * &h2
                + int(3) * &g
                - int(7) * &h
                + int(2)
                + r45(ps);
            r * inner / int(120)
        }
        4 => {
            let inner = int(2) * &g * &g - int(3) * pow(&h, 3) + int(3) * &h * &g - int(2) * &g - int(3) * &h
                + int(2)
                + r45(ps);
            r * (h + int(1)) * inner / int(60)
        }
        _ => return Err(Error::UnsupportedDegree(n)),
    })
}

pub fn heightsum_closed(t: CoxeterType, n: usize) -> Result<PowerSumResult> {
    let value = heightsum_closed_with(&default_params(t), n)?;
    Ok(PowerSumResult { ty: t, n, value, method: Method::Closed })
}

/// `true` when the value is a nonnegative integer.
pub fn is_natural(x: &Rational) -> bool {
    x.is_integer() && !(x < &Rational::zero())
}
