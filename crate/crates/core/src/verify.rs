//! Exact verification suites.
//!
//! Each check recomputes one identity on exact data and returns a
//! [`CheckReport`]; a failed report always carries a witness describing the
//! first failing instance. Checks never return `Err` for a failed identity,
//! only for inputs outside their domain.
//!
//! Table constants are treated as claims. The `*_with` variants take a
//! [`Subject`] whose fields can be corrupted, and [`Fault`] describes such a
//! single-constant corruption for the sweep driver.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{binomial, factorial, int, parse_rational, rat, IntPolynomial, Rational, TruncatedSeries};
use crate::catalog::{
    applicable_profiles, catalog, exponents, explicit_vpm, parameters, parse_type, uniform_relations_hold,
    CoxeterType, ExponentList, Family, ParameterSet, Profile,
};
use crate::powersum::{
    exponent_power_sum, height_power_sum, heightsum_closed_with, is_natural, powersum_closed_with,
    todd_power_sums_with,
};
use crate::todd::{
    faulhaber, gamma_series, gamma_series_xn, p_factor, pow, todd_closed, todd_log_coefficients, todd_values_with,
};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CheckReport {
    pub suite: &'static str,
    pub subject: String,
    pub passed: bool,
    /// Number of individual equalities evaluated.
    pub checks: usize,
    pub witness: Option<String>,
    pub note: Option<String>,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {:<15} {} ({} checks)", self.suite, self.subject, self.checks)?;
        if let Some(note) = &self.note {
            write!(f, " [{note}]")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n    witness: {w}")?;
        }
        Ok(())
    }
}

/// Accumulates checks and remembers the first failure.
struct Checker {
    suite: &'static str,
    subject: String,
    checks: usize,
    witness: Option<String>,
    note: Option<String>,
}

impl Checker {
    fn new(suite: Suite, subject: impl Into<String>) -> Self {
        Checker { suite: suite.name(), subject: subject.into(), checks: 0, witness: None, note: None }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.checks += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
        ok
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, what: impl FnOnce() -> String, left: &T, right: &T) -> bool {
        self.check(left == right, || format!("{}: {left} != {right}", what()))
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            suite: self.suite,
            subject: self.subject,
            passed: self.witness.is_none(),
            checks: self.checks,
            witness: self.witness,
            note: self.note,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Expsum,
    Multiset,
    Gamma,
    HRelation,
    Beta,
    Symmetry,
    ToddSymm,
    Kostant,
    TTransform,
    Specializations,
    Gamma34,
    Methods,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Expsum,
        Suite::Multiset,
        Suite::Gamma,
        Suite::HRelation,
        Suite::Beta,
        Suite::Symmetry,
        Suite::ToddSymm,
        Suite::Kostant,
        Suite::TTransform,
        Suite::Specializations,
        Suite::Gamma34,
        Suite::Methods,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Expsum => "expsum",
            Suite::Multiset => "multiset",
            Suite::Gamma => "gamma",
            Suite::HRelation => "h-relation",
            Suite::Beta => "beta",
            Suite::Symmetry => "symmetry",
            Suite::ToddSymm => "todd-symm",
            Suite::Kostant => "kostant",
            Suite::TTransform => "t-transform",
            Suite::Specializations => "specializations",
            Suite::Gamma34 => "gamma34",
            Suite::Methods => "methods",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

/// Everything the per-type checks read: the type, the chosen profile, its
/// exponents and its parameter row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subject {
    pub ty: CoxeterType,
    pub profile: Profile,
    pub exponents: ExponentList,
    pub params: ParameterSet,
}

impl Subject {
    pub fn new(ty: CoxeterType, profile: Profile) -> Result<Self> {
        let ty = ty.normalize();
        Ok(Subject { ty, profile, exponents: exponents(ty), params: parameters(ty, profile)? })
    }

    pub fn default_for(ty: CoxeterType) -> Self {
        Self::new(ty, Profile::default_for(ty)).expect("default profile always applies")
    }

    fn label(&self) -> String {
        format!("{} [{}]", self.ty.label(), self.profile)
    }
}

fn fmt_multiset(v: &[Rational]) -> String {
    let items: Vec<String> = v.iter().map(Rational::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn sorted<const N: usize>(mut v: [Rational; N]) -> [Rational; N] {
    v.sort();
    v
}

/// Removes entries common to both multisets.
fn cancel_common(plus: &[Rational], minus: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut plus = plus.to_vec();
    let mut rest_minus = Vec::new();
    for v in minus {
        match plus.iter().position(|x| x == v) {
            Some(i) => {
                plus.swap_remove(i);
            }
            None => rest_minus.push(v.clone()),
        }
    }
    plus.sort();
    rest_minus.sort();
    (plus, rest_minus)
}

fn as_positive_int(v: &Rational) -> Option<usize> {
    if v.is_integer() && v > &Rational::zero() {
        v.to_integer().try_into().ok()
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// per-type suites

pub fn check_expsum(t: CoxeterType, profile: Profile) -> Result<CheckReport> {
    Ok(check_expsum_with(&Subject::new(t, profile)?))
}

/// `sum q^{m_i} * prod_{V-}(1 - q^v) = q * prod_{V+}(1 - q^v)` after cancelling
/// common entries, plus the explicit `V±` in `(h, d, nu)` where they are claimed.
pub fn check_expsum_with(s: &Subject) -> CheckReport {
    let mut c = Checker::new(Suite::Expsum, s.label());
    let ps = &s.params;
    let (plus, minus) = cancel_common(&ps.v_plus(), &ps.v_minus());
    let plus_int: Option<Vec<usize>> = plus.iter().map(as_positive_int).collect();
    let minus_int: Option<Vec<usize>> = minus.iter().map(as_positive_int).collect();
    let integral = c.check(plus_int.is_some() && minus_int.is_some(), || {
        format!("after cancellation V+ = {}, V- = {} are not positive integers", fmt_multiset(&plus), fmt_multiset(&minus))
    });
    if integral {
        let factors = |v: &[usize]| {
            IntPolynomial::product(&v.iter().map(|&k| IntPolynomial::one_minus_q_pow(k)).collect::<Vec<_>>())
        };
        let lhs = IntPolynomial::sum_of_monomials(s.exponents.values()).mul(&factors(&minus_int.unwrap()));
        let rhs = IntPolynomial::monomial(1).mul(&factors(&plus_int.unwrap()));
        c.eq(
            || format!("sum q^m * prod_V-(1-q^v) vs q * prod_V+(1-q^v) with V+ = {}, V- = {}", fmt_multiset(&plus), fmt_multiset(&minus)),
            &lhs,
            &rhs,
        );
    }
    if uniform_relations_hold(s.ty, s.profile) {
        let (vp, vm) = explicit_vpm(ps.h, &ps.d, ps.nu);
        let (vp, vm) = (sorted(vp), sorted(vm));
        c.check(vp == sorted(ps.v_plus()), || {
            format!("explicit V+ from (h,d,nu) = {} but table {{A,B}} = {}", fmt_multiset(&vp), fmt_multiset(&ps.v_plus()))
        });
        c.check(vm == sorted(ps.v_minus()), || {
            format!("explicit V- from (h,d,nu) = {} but table {{alpha,beta}} = {}", fmt_multiset(&vm), fmt_multiset(&ps.v_minus()))
        });
    }
    c.finish()
}

pub fn check_multiset_laws(t: CoxeterType, profile: Profile) -> Result<CheckReport> {
    Ok(check_multiset_laws_with(&Subject::new(t, profile)?))
}

/// `prod V+ = r prod V-` and `|V+| = |V-|`.
pub fn check_multiset_laws_with(s: &Subject) -> CheckReport {
    let mut c = Checker::new(Suite::Multiset, s.label());
    let ps = &s.params;
    let (vp, vm) = (ps.v_plus(), ps.v_minus());
    let prod_plus: Rational = vp.iter().product();
    let prod_minus: Rational = vm.iter().product();
    c.eq(|| "prod V+ vs r prod V-".into(), &prod_plus, &(int(ps.r) * prod_minus));
    c.eq(|| "|V+| vs |V-|".into(), &vp.len(), &vm.len());
    c.finish()
}

pub fn check_gamma_formula(t: CoxeterType) -> CheckReport {
    check_gamma_formula_with(&Subject::default_for(t))
}

/// `gamma = h^2 + (h - 2)(alpha + beta - 1) - (r - 1) alpha beta`
pub fn check_gamma_formula_with(s: &Subject) -> CheckReport {
    let mut c = Checker::new(Suite::Gamma, s.label());
    let ps = &s.params;
    let h = int(ps.h);
    let formula = &h * &h + (&h - int(2)) * (&ps.alpha + &ps.beta - int(1)) - int(ps.r - 1) * &ps.alpha * &ps.beta;
    c.eq(|| "table gamma vs h^2+(h-2)(alpha+beta-1)-(r-1)alpha*beta".into(), &int(ps.gamma), &formula);
    c.finish()
}

pub fn check_h_relation(t: CoxeterType, profile: Profile) -> Result<CheckReport> {
    Ok(check_h_relation_with(&Subject::new(t, profile)?))
}

/// `h = (d/2)(r + 2 + nu)` for every row where it is claimed.
pub fn check_h_relation_with(s: &Subject) -> CheckReport {
    let c = Checker::new(Suite::HRelation, s.label());
    if !uniform_relations_hold(s.ty, s.profile) {
        return c.note("relation not asserted for this profile").finish();
    }
    let mut c = c;
    let ps = &s.params;
    let rhs = &ps.d / int(2) * int(ps.r + 2 + ps.nu);
    c.eq(|| format!("h vs (d/2)(r+2+nu) with d={}, nu={}", ps.d, ps.nu), &int(ps.h), &rhs);
    c.finish()
}

pub fn check_beta_formula(t: CoxeterType) -> CheckReport {
    check_beta_formula_with(&Subject::default_for(t))
}

/// `beta = (h^2 - gamma + (h - 2)(alpha - 1)) / (2 + (r - 1) alpha - h)` unless the
/// denominator vanishes, in which case beta is unconstrained.
pub fn check_beta_formula_with(s: &Subject) -> CheckReport {
    let c = Checker::new(Suite::Beta, s.label());
    let ps = &s.params;
    let h = int(ps.h);
    let denom = int(2) + int(ps.r - 1) * &ps.alpha - &h;
    if denom.is_zero() {
        return c.note("unconstrained").finish();
    }
    let mut c = c;
    let beta = (&h * &h - int(ps.gamma) + (&h - int(2)) * (&ps.alpha - int(1))) / denom;
    c.eq(|| format!("table beta vs formula with alpha={}", ps.alpha), &ps.beta, &beta);
    c.finish()
}

pub fn check_symmetry_identities(t: CoxeterType, a_max: usize, b_max: usize) -> CheckReport {
    check_symmetry_identities_with(&Subject::default_for(t), a_max, b_max)
}

/// For all `a <= a_max`, `b <= b_max`:
/// `sum_j (-1)^{a-j} C(a,j) h^j S_{a+b-j} = sum_j (-1)^{b-j} C(b,j) h^j S_{a+b-j}`.
pub fn check_symmetry_identities_with(s: &Subject, a_max: usize, b_max: usize) -> CheckReport {
    let mut c = Checker::new(Suite::Symmetry, s.ty.label());
    let sums: Vec<Rational> = (0..=a_max + b_max).map(|n| exponent_power_sum(&s.exponents, n)).collect();
    let h = int(s.params.h);
    let side = |a: usize, b: usize| -> Rational {
        (0..=a)
            .map(|j| {
                let sign = if (a - j).is_multiple_of(2) { int(1) } else { int(-1) };
                sign * binomial(&int(a as i64), j) * pow(&h, j) * &sums[a + b - j]
            })
            .sum()
    };
    for a in 0..=a_max {
        for b in 0..=b_max {
            let (lhs, rhs) = (side(a, b), side(b, a));
            c.eq(|| format!("(a,b)=({a},{b})"), &lhs, &rhs);
        }
    }
    c.finish()
}

pub fn check_de_kostant(t: CoxeterType) -> Result<CheckReport> {
    check_de_kostant_with(&Subject::default_for(t))
}

/// With `a = 2d`, `b = h + 2 - 2d`: `V- = {a/2, b/2}`, `V+ = {b, ra/4}`,
/// `h = dr - 4d + 6` and `d(h - 2r - 6d + 26) = 24`.
pub fn check_de_kostant_with(s: &Subject) -> Result<CheckReport> {
    if !matches!(s.ty.family(), Family::D | Family::E) {
        return Err(Error::WrongFamily { ty: s.ty.label(), check: "kostant" });
    }
    let mut c = Checker::new(Suite::Kostant, s.ty.label());
    let ps = &s.params;
    let (d, r, h) = (&ps.d, int(ps.r), int(ps.h));
    let a = int(2) * d;
    let b = &h + int(2) - int(2) * d;
    let vm = sorted([&a / int(2), &b / int(2)]);
    let vp = sorted([b.clone(), &r * &a / int(4)]);
    c.check(vm == sorted(ps.v_minus()), || {
        format!("V- = {} but {{a/2,b/2}} = {} (a={a}, b={b})", fmt_multiset(&ps.v_minus()), fmt_multiset(&vm))
    });
    c.check(vp == sorted(ps.v_plus()), || {
        format!("V+ = {} but {{b,ra/4}} = {} (a={a}, b={b})", fmt_multiset(&ps.v_plus()), fmt_multiset(&vp))
    });
    c.eq(|| "h vs dr-4d+6".into(), &h, &(d * &r - int(4) * d + int(6)));
    c.eq(|| "d(h-2r-6d+26) vs 24".into(), &(d * (&h - int(2) * &r - int(6) * d + int(26))), &int(24));
    Ok(c.finish())
}

pub fn check_gamma_specializations(t: CoxeterType, n_max: usize) -> Result<CheckReport> {
    check_gamma_specializations_with(&Subject::default_for(t), n_max)
}

/// Catalan number `C_k`, with `C_{-1} = -1/2`.
pub fn catalan(k: i64) -> Rational {
    if k == -1 {
        return rat(-1, 2);
    }
    let k = k as usize;
    binomial(&int(2 * k as i64), k) / int(k as i64 + 1)
}

/// Closed forms of `gamma_n` for `A_r` (`p = 1`) and `C_r` (`p = 1, 2`).
pub fn check_gamma_specializations_with(s: &Subject, n_max: usize) -> Result<CheckReport> {
    let mut c = Checker::new(Suite::Specializations, s.ty.label());
    let r = int(i64::from(s.ty.rank()));
    match s.ty.family() {
        Family::A => {
            let g = gamma_series(&s.params, 1, n_max);
            for n in 1..=n_max {
                let closed = pow(&r, n) + pow(&r, n - 1);
                c.eq(|| format!("p=1 gamma_{n} vs r^n + r^(n-1)"), &g.gamma(n), &closed);
            }
        }
        Family::C => {
            let two_r = int(2) * &r;
            let g1 = gamma_series(&s.params, 1, n_max);
            let g2 = gamma_series(&s.params, 2, n_max);
            for n in 1..=n_max {
                let tail: Rational = (0..n.saturating_sub(1)).map(|j| pow(&two_r, j)).sum();
                let closed1 = pow(&two_r, n) - int(2) * tail;
                c.eq(|| format!("p=1 gamma_{n} vs (2r)^n - 2 sum (2r)^j"), &g1.gamma(n), &closed1);
                let closed2: Rational =
                    (0..=n / 2).map(|j| catalan(j as i64 - 1) * pow(&two_r, n - 2 * j)).sum::<Rational>() * int(-2);
                c.eq(|| format!("p=2 gamma_{n} vs -2 sum C_(j-1) (2r)^(n-2j)"), &g2.gamma(n), &closed2);
            }
        }
        _ => return Err(Error::WrongFamily { ty: s.ty.label(), check: "specializations" }),
    }
    Ok(c.finish())
}

pub fn check_gamma34(t: CoxeterType, p: u32) -> CheckReport {
    check_gamma34_with(&Subject::default_for(t), p)
}

/// `gamma_3` and `gamma_4` as explicit polynomials in `h, gamma, alpha, beta, p`.
pub fn check_gamma34_with(s: &Subject, p: u32) -> CheckReport {
    let mut c = Checker::new(Suite::Gamma34, format!("{} p={p}", s.label()));
    let ps = &s.params;
    let (h, g) = (int(ps.h), int(ps.gamma));
    let pp = int(i64::from(p) * i64::from(p));
    let sum = &ps.alpha + &ps.beta;
    let prod = &ps.alpha * &ps.beta;
    let k = &h * &h - &g - &h + int(2);
    let gamma3 = -pow(&h, 3) + int(2) * &h * &g - int(2) * &g + (int(2) * &pp + int(4)) / int(3)
        - &k * &sum
        - (&h - int(2)) * &prod;
    let w = int(2) * &h - int(2) + &sum;
    let gamma4 = -pow(&h, 4) + &h * &h * &g + &g * &g + int(3) * pow(&h, 3) - int(6) * &h * &g - &h * &h
        + int(2) * &g
        + rat(2, 3) * &h * (pp + int(5))
        - int(2)
        - &k * (&w * &sum - &prod)
        - (&h - int(2)) * &w * &prod;
    let series = gamma_series(ps, p, 4);
    c.eq(|| "gamma_3 series vs closed form".into(), &series.gamma(3), &gamma3);
    c.eq(|| "gamma_4 series vs closed form".into(), &series.gamma(4), &gamma4);
    c.finish()
}

/// Exponent power sums by direct summation, Todd values (each `p`) and closed
/// forms; height sums by both direct routes and closed forms; the two routes
/// to the gamma series; Todd values against the explicit `Td_0..Td_5`.
pub fn check_methods_with(s: &Subject, n_max: usize, ps_values: &[u32], lambda: &[Rational]) -> CheckReport {
    let mut c = Checker::new(Suite::Methods, s.label());
    let ps = &s.params;
    let direct: Vec<Rational> = (0..=n_max).map(|n| exponent_power_sum(&s.exponents, n)).collect();
    for (n, v) in direct.iter().enumerate() {
        c.check(is_natural(v), || format!("S_{n} = {v} is not a nonnegative integer"));
    }
    for &p in ps_values {
        let todd = todd_power_sums_with(lambda, ps, n_max, p);
        for n in 0..=n_max {
            c.eq(|| format!("S_{n} direct vs todd (p={p})"), &direct[n], &todd[n]);
        }
        let order = n_max.max(2);
        let (g, gx) = (gamma_series(ps, p, order), gamma_series_xn(ps, p, order));
        c.eq(|| format!("gamma series via (A,B) vs via X_n (p={p})"), &g.series, &gx.series);
        c.eq(|| format!("gamma_1 vs h (p={p})"), &g.gamma(1), &int(ps.h));
        c.eq(|| format!("gamma_2 vs gamma-h (p={p})"), &g.gamma(2), &int(ps.gamma - ps.h));
        let td = todd_values_with(lambda, &g.series, n_max.min(5));
        for n in 0..=n_max.min(5) {
            let closed = todd_closed(n, &g.series.coeffs()[1..]).expect("n <= 5");
            c.eq(|| format!("Td_{n} via log/exp vs explicit polynomial (p={p})"), td.get(n), &closed);
        }
    }
    for n in 0..=n_max.min(5) {
        let closed = powersum_closed_with(ps, n).expect("n <= 5");
        c.eq(|| format!("S_{n} direct vs closed form"), &direct[n], &closed);
    }
    for n in 0..=n_max.min(4) {
        match height_power_sum(&s.exponents, n) {
            Ok(hs) => {
                let closed = heightsum_closed_with(ps, n).expect("n <= 4");
                c.eq(|| format!("height sum H_{n} direct vs closed form"), &hs, &closed);
            }
            Err(e) => {
                c.check(false, || e.to_string());
            }
        }
    }
    c.finish()
}

pub fn check_methods(t: CoxeterType, n_max: usize, ps_values: &[u32]) -> CheckReport {
    check_methods_with(&Subject::default_for(t), n_max, ps_values, &todd_log_coefficients(n_max))
}

/// The fourth power sum is not `r f(h, gamma)`: `A_{h-1}` and `D_{(h+2)/2}` share
/// `h` and `gamma = h^2` but not `S_4 / r`.
pub fn check_s4_non_universality(h: u32) -> CheckReport {
    let mut c = Checker::new(Suite::Methods, format!("S4 non-universality at h={h}"));
    let a = Subject::default_for(CoxeterType::of(Family::A, h - 1));
    let d = Subject::default_for(CoxeterType::of(Family::D, (h + 2) / 2));
    c.eq(|| "h".into(), &a.params.h, &d.params.h);
    c.eq(|| "gamma".into(), &a.params.gamma, &d.params.gamma);
    let sa = exponent_power_sum(&a.exponents, 4) / int(a.params.r);
    let sd = exponent_power_sum(&d.exponents, 4) / int(d.params.r);
    c.check(sa != sd, || format!("S4(A{})/r = S4(D{})/r = {sa}", h - 1, (h + 2) / 2));
    c.finish()
}

// ---------------------------------------------------------------------------
// Todd symmetry

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-100..=100), rng.gen_range(1..=100))
}

fn sample_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn gamma_from(c: &[Rational]) -> TruncatedSeries {
    let mut coeffs = vec![Rational::one()];
    coeffs.extend_from_slice(c);
    TruncatedSeries::from_coeffs(coeffs)
}

fn todd_symmetry_side(a: usize, b: usize, c1: &Rational, td: &[Rational]) -> Rational {
    (0..=a)
        .map(|j| {
            let sign = if (a - j).is_multiple_of(2) { int(1) } else { int(-1) };
            sign * binomial(&int(a as i64), j)
                * pow(c1, j)
                * Rational::from_integer(factorial(a + b - j))
                * &td[a + b - j]
        })
        .sum()
}

pub fn check_todd_symmetry(a: usize, b: usize, samples: usize, seed: u64) -> CheckReport {
    check_todd_symmetry_with(a, b, samples, seed, &todd_log_coefficients(a + b))
}

/// Evaluates both sides of the Todd symmetry identity at seeded random rational
/// points `(c_1, ..., c_{a+b})`.
pub fn check_todd_symmetry_with(a: usize, b: usize, samples: usize, seed: u64, lambda: &[Rational]) -> CheckReport {
    let mut c = Checker::new(Suite::ToddSymm, format!("(a,b)=({a},{b})"));
    let n = a + b;
    let mut rng = sample_rng(seed, (a * 64 + b) as u64);
    for sample in 0..samples {
        let cs: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng)).collect();
        let td = todd_values_with(lambda, &gamma_from(&cs), n);
        let c1 = cs.first().cloned().unwrap_or_else(Rational::zero);
        let lhs = todd_symmetry_side(a, b, &c1, td.values());
        let rhs = todd_symmetry_side(b, a, &c1, td.values());
        c.check(lhs == rhs, || {
            format!("sample {sample} at c = {}: lhs {lhs} != rhs {rhs}", fmt_multiset(&cs).replace(['{', '}'], ""))
        });
    }
    c.finish()
}

pub fn check_todd_odd_independence(degrees: &[usize], samples: usize, seed: u64) -> CheckReport {
    let top = degrees.iter().copied().max().unwrap_or(0);
    check_todd_odd_independence_with(degrees, samples, seed, &todd_log_coefficients(top))
}

/// For odd `n`, `Td_n(c_1, ..., c_n)` does not change when `c_n` is perturbed.
pub fn check_todd_odd_independence_with(degrees: &[usize], samples: usize, seed: u64, lambda: &[Rational]) -> CheckReport {
    let list: Vec<String> = degrees.iter().map(usize::to_string).collect();
    let mut c = Checker::new(Suite::ToddSymm, format!("Td_n independent of c_n, n in {{{}}}", list.join(",")));
    let mut rng = sample_rng(seed, 1 << 20);
    for &n in degrees {
        for sample in 0..samples {
            let cs: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng)).collect();
            let mut perturbed = cs.clone();
            let mut delta = random_rational(&mut rng);
            if delta.is_zero() {
                delta = int(1);
            }
            perturbed[n - 1] += delta;
            let base = todd_values_with(lambda, &gamma_from(&cs), n).get(n).clone();
            let moved = todd_values_with(lambda, &gamma_from(&perturbed), n).get(n).clone();
            c.eq(|| format!("Td_{n} sample {sample} after perturbing c_{n}"), &base, &moved);
        }
    }
    c.finish()
}

// ---------------------------------------------------------------------------
// the transformation f(t) -> sqrt(f(2t))

/// `T f(t) = sqrt(f(2t))` applied `iterations` times through the coefficient recursion
/// `b_n = 2^{n-1} a_n - (1/2) sum_{j=1}^{n-1} b_j b_{n-j}`.
pub fn t_transform(f: &TruncatedSeries, iterations: usize) -> Result<TruncatedSeries> {
    if !f.coeff(0).is_one() {
        return Err(Error::ConstantTermNotOne);
    }
    let mut cur = f.clone();
    for _ in 0..iterations {
        let a = cur.coeffs();
        let mut b = vec![Rational::one(); a.len()];
        let mut two_pow = int(1);
        for n in 1..a.len() {
            let conv: Rational = (1..n).map(|j| &b[j] * &b[n - j]).sum();
            b[n] = &two_pow * &a[n] - conv / int(2);
            two_pow *= int(2);
        }
        cur = TruncatedSeries::from_coeffs(b);
    }
    Ok(cur)
}

/// `f(t) -> f(l t)^{1/l}` applied `iterations` times, through log/exp.
pub fn t_transform_general(f: &TruncatedSeries, ell: u32, iterations: usize) -> Result<TruncatedSeries> {
    let ell = int(i64::from(ell));
    let mut cur = f.clone();
    for _ in 0..iterations {
        cur = cur.dilate(&ell).pow(&ell.recip())?;
    }
    Ok(cur)
}

/// `(1 + t)/(1 - t) = 1 + 2t + 2t^2 + ...`
pub fn t_start(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |n| if n == 0 { int(1) } else { int(2) })
}

/// The three worked rows: `n+1 -> 2^n`, `2^n -> C(2n, n)`, `C_{n+1} -> 2^n C_n`.
pub fn check_t_table(order: usize) -> CheckReport {
    let mut c = Checker::new(Suite::TTransform, format!("T table rows to order {order}"));
    let two = int(2);
    let rows: [(&str, TruncatedSeries, TruncatedSeries); 3] = [
        (
            "a_n = n+1",
            TruncatedSeries::from_fn(order, |n| int(n as i64 + 1)),
            TruncatedSeries::from_fn(order, |n| pow(&two, n)),
        ),
        (
            "a_n = 2^n",
            TruncatedSeries::from_fn(order, |n| pow(&two, n)),
            TruncatedSeries::from_fn(order, |n| binomial(&int(2 * n as i64), n)),
        ),
        (
            "a_n = C_(n+1)",
            TruncatedSeries::from_fn(order, |n| catalan(n as i64 + 1)),
            TruncatedSeries::from_fn(order, |n| pow(&two, n) * catalan(n as i64)),
        ),
    ];
    for (name, f, expected) in rows {
        let got = t_transform(&f, 1).expect("constant term is 1");
        c.eq(|| name.to_string(), &got, &expected);
    }
    c.finish()
}

pub fn check_t_integrality(k_max: usize, order: usize) -> CheckReport {
    check_t_integrality_from(&t_start(order), k_max, order)
}

/// `T^k f` has integer coefficients, even beyond the constant, equals
/// `p_factor(2^k)`, and the recursion agrees with the log/exp route.
pub fn check_t_integrality_from(f: &TruncatedSeries, k_max: usize, order: usize) -> CheckReport {
    let mut c = Checker::new(Suite::TTransform, format!("T^k((1+t)/(1-t)), k <= {k_max}, order {order}"));
    let mut cur = f.clone();
    for k in 0..=k_max {
        if k > 0 {
            let next = t_transform(&cur, 1).expect("constant term is 1");
            let via_pow = t_transform_general(&cur, 2, 1).expect("constant term is 1");
            c.eq(|| format!("T^{k} recursion vs sqrt(f(2t)) via log/exp"), &next, &via_pow);
            cur = next;
        }
        let even = cur.coeffs()[1..].iter().all(|x| x.is_integer() && x.to_integer() % BigInt::from(2) == BigInt::zero());
        c.check(cur.is_integral() && even, || format!("T^{k} f has a non-integer or odd coefficient: {cur}"));
        let target = p_factor(1 << k, order);
        c.eq(|| format!("T^{k} f vs ((1+2^k t)/(1-2^k t))^(1/2^k)"), &cur, &target);
    }
    if k_max >= 2 {
        let t2 = t_transform(f, 2).expect("constant term is 1");
        let ell4 = t_transform_general(f, 4, 1).expect("constant term is 1");
        c.eq(|| "T^2 f vs f(4t)^(1/4)".into(), &t2, &ell4);
    }
    c.finish()
}

pub fn check_faulhaber(n_max: usize, r_max: u64) -> CheckReport {
    let mut c = Checker::new(Suite::Specializations, format!("Faulhaber n <= {n_max}, r <= {r_max}"));
    for n in 0..=n_max {
        for r in 0..=r_max {
            let direct: Rational = (1..=r).map(|i| pow(&int(i as i64), n)).sum();
            c.eq(|| format!("sum_(i<=r) i^n, n={n}, r={r}"), &faulhaber(n, r), &direct);
        }
    }
    c.finish()
}

// ---------------------------------------------------------------------------
// fault injection

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamField {
    R,
    H,
    Gamma,
    D,
    Nu,
    Alpha,
    Beta,
    A,
    B,
}

/// A single corrupted constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fault {
    /// `<TYPE>.<field>=<value>`, e.g. `E8.gamma=901`
    Param { ty: CoxeterType, field: ParamField, value: Rational },
    /// `<TYPE>.m<i>=<value>`, 1-based exponent index
    Exponent { ty: CoxeterType, index: usize, value: u64 },
    /// `todd.lambda<k>=<value>`
    ToddLambda { k: usize, value: Rational },
    /// `t.a<n>=<value>`, coefficient of the start series of the T iteration
    TStart { n: usize, value: Rational },
}

impl Fault {
    pub fn apply(&self, s: &mut Subject) {
        match self {
            Fault::Param { ty, field, value } if ty.normalize() == s.ty => {
                let ps = &mut s.params;
                let as_int = || -> i64 { value.to_integer().try_into().unwrap_or(i64::MAX) };
                match field {
                    ParamField::R => ps.r = as_int(),
                    ParamField::H => ps.h = as_int(),
                    ParamField::Gamma => ps.gamma = as_int(),
                    ParamField::Nu => ps.nu = as_int(),
                    ParamField::D => ps.d = value.clone(),
                    ParamField::Alpha => ps.alpha = value.clone(),
                    ParamField::Beta => ps.beta = value.clone(),
                    ParamField::A => ps.a = value.clone(),
                    ParamField::B => ps.b = value.clone(),
                }
            }
            Fault::Exponent { ty, index, value } if ty.normalize() == s.ty => {
                if let Some(m) = s.exponents.0.get_mut(index - 1) {
                    *m = *value;
                }
            }
            _ => {}
        }
    }

    fn apply_lambda(&self, lambda: &mut [Rational]) {
        if let Fault::ToddLambda { k, value } = self {
            if let Some(l) = lambda.get_mut(*k) {
                *l = value.clone();
            }
        }
    }

    fn apply_t_start(&self, f: TruncatedSeries) -> TruncatedSeries {
        match self {
            Fault::TStart { n, value } if *n <= f.order() => {
                let mut coeffs = f.into_coeffs();
                coeffs[*n] = value.clone();
                TruncatedSeries::from_coeffs(coeffs)
            }
            _ => f,
        }
    }
}

impl FromStr for Fault {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("bad fault {text:?}; expected <TARGET>.<field>=<value>"));
        let (lhs, value) = text.split_once('=').ok_or_else(bad)?;
        let (target, field) = lhs.rsplit_once('.').ok_or_else(bad)?;
        let value = parse_rational(value)?;
        let index = |prefix: &str| field.strip_prefix(prefix).and_then(|k| k.parse::<usize>().ok());
        match target.to_ascii_lowercase().as_str() {
            "todd" => return Ok(Fault::ToddLambda { k: index("lambda").filter(|&k| k >= 1).ok_or_else(bad)?, value }),
            "t" => return Ok(Fault::TStart { n: index("a").ok_or_else(bad)?, value }),
            _ => {}
        }
        let ty = parse_type(target)?;
        if let Some(i) = index("m") {
            if i == 0 || !value.is_integer() {
                return Err(bad());
            }
            let value: u64 = value.to_integer().try_into().map_err(|_| bad())?;
            return Ok(Fault::Exponent { ty, index: i, value });
        }
        let field = match field {
            "r" => ParamField::R,
            "h" => ParamField::H,
            "gamma" => ParamField::Gamma,
            "d" => ParamField::D,
            "nu" => ParamField::Nu,
            "alpha" => ParamField::Alpha,
            "beta" => ParamField::Beta,
            "A" => ParamField::A,
            "B" => ParamField::B,
            _ => return Err(bad()),
        };
        Ok(Fault::Param { ty, field, value })
    }
}

// ---------------------------------------------------------------------------
// sweep driver

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub max_rank: u32,
    pub max_m: u32,
    pub n_max: usize,
    pub seed: u64,
    pub suites: Vec<Suite>,
    /// Worker threads; `0` lets the pool decide.
    pub jobs: usize,
    pub fault: Option<Fault>,
    pub todd_samples: usize,
    pub todd_max_degree: usize,
    pub t_k_max: usize,
    pub t_order: usize,
    pub t_table_order: usize,
}

impl RunConfig {
    pub fn new(max_rank: u32, max_m: u32, n_max: usize, seed: u64) -> Self {
        RunConfig {
            max_rank,
            max_m,
            n_max,
            seed,
            suites: Suite::ALL.to_vec(),
            jobs: 1,
            fault: None,
            todd_samples: 50,
            todd_max_degree: 8,
            t_k_max: 5,
            t_order: 30,
            t_table_order: 20,
        }
    }
}

/// Every suite over `catalog(max_rank, max_m)`, single-threaded.
pub fn run_all(max_rank: u32, max_m: u32, n_max: usize, seed: u64) -> Vec<CheckReport> {
    run(&RunConfig::new(max_rank, max_m, n_max, seed))
}

type Task<'a> = Box<dyn Fn() -> CheckReport + Send + Sync + 'a>;

/// Runs the configured suites; reports come back in suite order, then catalog
/// order, independent of the number of workers.
pub fn run(cfg: &RunConfig) -> Vec<CheckReport> {
    let types = catalog(cfg.max_rank, cfg.max_m);
    let subjects: Vec<Subject> = types
        .iter()
        .flat_map(|&t| applicable_profiles(t).into_iter().map(move |p| (t, p)))
        .map(|(t, p)| {
            let mut s = Subject::new(t, p).expect("applicable profile");
            if let Some(f) = &cfg.fault {
                f.apply(&mut s);
            }
            s
        })
        .collect();
    let defaults: Vec<&Subject> = subjects.iter().filter(|s| s.profile == Profile::default_for(s.ty)).collect();
    let lambda_order = cfg.n_max.max(cfg.todd_max_degree).max(7);
    let mut lambda = todd_log_coefficients(lambda_order);
    if let Some(f) = &cfg.fault {
        f.apply_lambda(&mut lambda);
    }
    let lambda = &lambda;
    let half = (cfg.n_max / 2).max(1);

    let mut tasks: Vec<Task<'_>> = Vec::new();
    for suite in &cfg.suites {
        match suite {
            Suite::Expsum => tasks.extend(subjects.iter().map(|s| Box::new(move || check_expsum_with(s)) as Task<'_>)),
            Suite::Multiset => {
                tasks.extend(subjects.iter().map(|s| Box::new(move || check_multiset_laws_with(s)) as Task<'_>))
            }
            Suite::Gamma => {
                tasks.extend(subjects.iter().map(|s| Box::new(move || check_gamma_formula_with(s)) as Task<'_>))
            }
            Suite::HRelation => {
                tasks.extend(subjects.iter().map(|s| Box::new(move || check_h_relation_with(s)) as Task<'_>))
            }
            Suite::Beta => {
                tasks.extend(subjects.iter().map(|s| Box::new(move || check_beta_formula_with(s)) as Task<'_>))
            }
            Suite::Symmetry => tasks.extend(
                defaults.iter().map(|&s| Box::new(move || check_symmetry_identities_with(s, half, half)) as Task<'_>),
            ),
            Suite::ToddSymm => {
                let (samples, seed) = (cfg.todd_samples, cfg.seed);
                for total in 0..=cfg.todd_max_degree {
                    for a in 0..=total {
                        let b = total - a;
                        tasks.push(Box::new(move || check_todd_symmetry_with(a, b, samples, seed, lambda)));
                    }
                }
                tasks.push(Box::new(move || check_todd_odd_independence_with(&[3, 5, 7], samples, seed, lambda)));
            }
            Suite::Kostant => tasks.extend(
                defaults
                    .iter()
                    .filter(|s| matches!(s.ty.family(), Family::D | Family::E))
                    .map(|&s| Box::new(move || check_de_kostant_with(s).expect("D/E type")) as Task<'_>),
            ),
            Suite::TTransform => {
                let start = match &cfg.fault {
                    Some(f) => f.apply_t_start(t_start(cfg.t_order)),
                    None => t_start(cfg.t_order),
                };
                let (k_max, order, table_order) = (cfg.t_k_max, cfg.t_order, cfg.t_table_order);
                tasks.push(Box::new(move || check_t_table(table_order)));
                tasks.push(Box::new(move || check_t_integrality_from(&start, k_max, order)));
            }
            Suite::Specializations => {
                let n = cfg.n_max.max(1);
                tasks.extend(
                    defaults
                        .iter()
                        .filter(|s| matches!(s.ty.family(), Family::A | Family::C))
                        .map(|&s| Box::new(move || check_gamma_specializations_with(s, n).expect("A/C type")) as Task<'_>),
                );
                tasks.push(Box::new(|| check_faulhaber(8, 20)));
            }
            Suite::Gamma34 => {
                for s in &defaults {
                    for p in 1..=3 {
                        tasks.push(Box::new(move || check_gamma34_with(s, p)));
                    }
                }
            }
            Suite::Methods => {
                let n = cfg.n_max;
                tasks.extend(
                    defaults.iter().map(|&s| Box::new(move || check_methods_with(s, n, &[1, 2, 3], lambda)) as Task<'_>),
                );
                tasks.push(Box::new(|| check_s4_non_universality(10)));
            }
        }
    }

    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build().expect("thread pool");
    pool.install(|| tasks.par_iter().map(|task| task()).collect())
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.passed)
}
