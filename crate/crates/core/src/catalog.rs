//! Irreducible finite Coxeter types, their exponents and parameter tables.
//!
//! For every type we store `r, h, gamma` together with `(d, nu)` and the two
//! pairs `{A, B}`, `{alpha, beta}` for which
//!
//! ```text
//! sum_i q^{m_i} = q (1 - q^A)(1 - q^B) / ((1 - q^alpha)(1 - q^beta))
//! ```
//!
//! Several rows leave `beta` free (it occurs in both pairs and cancels);
//! those slots are pinned to fixed values and flagged by
//! [`ParameterSet::beta_free`].

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{int, rat, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I2,
}

/// A validated irreducible type: a family together with the rank
/// (or the dihedral parameter `m` for `I2(m)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterType {
    family: Family,
    n: u32,
}

impl CoxeterType {
    pub fn new(family: Family, n: u32) -> Result<Self> {
        let ok = match family {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 4,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
            Family::H => (2..=4).contains(&n),
            Family::I2 => n >= 3,
        };
        let t = CoxeterType { family, n };
        if ok {
            Ok(t)
        } else {
            Err(Error::Range(t.to_string()))
        }
    }

    /// Shorthand for tests and tables; panics on an invalid type.
    pub fn of(family: Family, n: u32) -> Self {
        Self::new(family, n).expect("valid Coxeter type")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The rank, or `m` for `I2(m)`.
    pub fn index(&self) -> u32 {
        self.n
    }

    pub fn rank(&self) -> u32 {
        match self.family {
            Family::I2 => 2,
            _ => self.n,
        }
    }

    pub fn coxeter_number(&self) -> i64 {
        let n = i64::from(self.n);
        match self.family {
            Family::A => n + 1,
            Family::B | Family::C => 2 * n,
            Family::D => 2 * n - 2,
            Family::E => [12, 18, 30][self.n as usize - 6],
            Family::F => 12,
            Family::G => 6,
            Family::H => [5, 10, 30][self.n as usize - 2],
            Family::I2 => n,
        }
    }

    /// Canonical representative: `B_r` becomes `C_r`, and `I2(3..=6)` become
    /// `A2`, `C2`, `H2`, `G2`.
    pub fn normalize(self) -> Self {
        match (self.family, self.n) {
            (Family::B, r) => CoxeterType { family: Family::C, n: r },
            (Family::I2, 3) => CoxeterType { family: Family::A, n: 2 },
            (Family::I2, 4) => CoxeterType { family: Family::C, n: 2 },
            (Family::I2, 5) => CoxeterType { family: Family::H, n: 2 },
            (Family::I2, 6) => CoxeterType { family: Family::G, n: 2 },
            _ => self,
        }
    }

    /// Table label, e.g. `C5/B5` for the shared `C_r/B_r` row.
    pub fn label(&self) -> String {
        let t = self.normalize();
        match t.family {
            Family::C => format!("C{0}/B{0}", t.n),
            _ => t.to_string(),
        }
    }

    /// `m` such that the type is the dihedral group `I2(m)`, for rank-2 types.
    pub fn dihedral_m(&self) -> Option<u32> {
        match (self.normalize().family, self.rank()) {
            (Family::A, 2) => Some(3),
            (Family::C, 2) => Some(4),
            (Family::H, 2) => Some(5),
            (Family::G, 2) => Some(6),
            (Family::I2, _) => Some(self.n),
            _ => None,
        }
    }

    pub fn is_crystallographic(&self) -> bool {
        !matches!(self.normalize().family, Family::H | Family::I2)
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.normalize().family, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I2 => write!(f, "I2({})", self.n),
            fam => write!(f, "{:?}{}", fam, self.n),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_type(s)
    }
}

/// Parses `<letter><digits>` or `I2(<digits>)`, case-insensitively. The
/// table label form `C5/B5` is accepted when both halves name the same type.
pub fn parse_type(text: &str) -> Result<CoxeterType> {
    let trimmed = text.trim();
    if let Some((left, right)) = trimmed.split_once('/') {
        let (l, r) = (parse_type(left)?, parse_type(right)?);
        if l.normalize() != r.normalize() {
            return Err(Error::Parse(text.to_string()));
        }
        return Ok(l);
    }
    let bad = || Error::Parse(text.to_string());
    let upper = trimmed.to_ascii_uppercase();
    if let Some(rest) = upper.strip_prefix("I2(") {
        let digits = rest.strip_suffix(')').ok_or_else(bad)?;
        let m = parse_digits(digits).ok_or_else(bad)?;
        return CoxeterType::new(Family::I2, m);
    }
    let mut chars = upper.chars();
    let family = match chars.next().ok_or_else(bad)? {
        'A' => Family::A,
        'B' => Family::B,
        'C' => Family::C,
        'D' => Family::D,
        'E' => Family::E,
        'F' => Family::F,
        'G' => Family::G,
        'H' => Family::H,
        _ => return Err(bad()),
    };
    let n = parse_digits(chars.as_str()).ok_or_else(bad)?;
    CoxeterType::new(family, n)
}

fn parse_digits(s: &str) -> Option<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn normalize(t: CoxeterType) -> CoxeterType {
    t.normalize()
}

/// Sorted exponents `m_1 <= ... <= m_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentList(pub Vec<u64>);

impl ExponentList {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `m_r + 1`
    pub fn coxeter_number(&self) -> u64 {
        self.0.last().map_or(1, |m| m + 1)
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }
}

pub fn exponents(t: CoxeterType) -> ExponentList {
    let t = t.normalize();
    let r = u64::from(t.n);
    let mut v: Vec<u64> = match t.family {
        Family::A => (1..=r).collect(),
        Family::B | Family::C => (1..=r).map(|i| 2 * i - 1).collect(),
        Family::D => (1..r).map(|i| 2 * i - 1).chain([r - 1]).collect(),
        Family::E => match r {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
        },
        Family::F => vec![1, 5, 7, 11],
        Family::G => vec![1, 5],
        Family::H => match r {
            2 => vec![1, 4],
            3 => vec![1, 5, 9],
            _ => vec![1, 11, 19, 29],
        },
        Family::I2 => vec![1, r - 1],
    };
    v.sort_unstable();
    ExponentList(v)
}

/// `(k_1, ..., k_{h-1})` with `k_j = #{i : m_i >= j}`; `k_j` is the number of
/// positive roots of height `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualPartition(pub Vec<u64>);

impl DualPartition {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

pub fn dual_partition(e: &ExponentList) -> DualPartition {
    let top = e.values().iter().copied().max().unwrap_or(0);
    DualPartition((1..=top).map(|j| e.values().iter().filter(|&&m| m >= j).count() as u64).collect())
}

/// Which `(d, nu)` convention to use for the parameter table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Profile {
    /// The main table row.
    Standard,
    /// `d = m/2`, `nu = 0` for the dihedral types `I2(m)`, `m >= 4`.
    Redefined,
    /// `d = 2`, `nu = 1` for `H2`.
    H2Original,
}

impl Profile {
    pub const ALL: [Profile; 3] = [Profile::Standard, Profile::Redefined, Profile::H2Original];

    pub fn name(&self) -> &'static str {
        match self {
            Profile::Standard => "standard",
            Profile::Redefined => "redefined",
            Profile::H2Original => "h2-original",
        }
    }

    pub fn applies_to(&self, t: CoxeterType) -> bool {
        let t = t.normalize();
        match self {
            Profile::Standard => true,
            Profile::Redefined => t.dihedral_m().is_some_and(|m| m >= 4),
            Profile::H2Original => t == CoxeterType::of(Family::H, 2),
        }
    }

    /// Redefined for the `I2(m)` rows that survive normalisation, standard elsewhere.
    pub fn default_for(t: CoxeterType) -> Profile {
        if t.normalize().family == Family::I2 {
            Profile::Redefined
        } else {
            Profile::Standard
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "standard" => Ok(Profile::Standard),
            "redefined" | "redefined-i2" => Ok(Profile::Redefined),
            "h2-original" => Ok(Profile::H2Original),
            _ => Err(Error::InvalidParameter(format!("unknown profile {s:?}"))),
        }
    }
}

pub fn applicable_profiles(t: CoxeterType) -> Vec<Profile> {
    Profile::ALL.into_iter().filter(|p| p.applies_to(t)).collect()
}

/// Whether `h = (d/2)(r + 2 + nu)` and the explicit `V±` formulas in
/// `(h, d, nu)` are claimed for this row. Only the standard odd dihedral
/// rows `I2(2k+1)`, `k >= 3`, are excluded.
pub fn uniform_relations_hold(t: CoxeterType, profile: Profile) -> bool {
    let t = t.normalize();
    !(profile == Profile::Standard && t.family == Family::I2 && t.n % 2 == 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParameterSet {
    pub r: i64,
    pub h: i64,
    pub gamma: i64,
    pub d: Rational,
    pub nu: i64,
    pub alpha: Rational,
    pub beta: Rational,
    pub a: Rational,
    pub b: Rational,
    /// `beta` is not determined by the type and occurs as `B = beta`.
    pub beta_free: bool,
}

impl ParameterSet {
    /// `V+ = {A, B}`
    pub fn v_plus(&self) -> [Rational; 2] {
        [self.a.clone(), self.b.clone()]
    }

    /// `V- = {alpha, beta}`
    pub fn v_minus(&self) -> [Rational; 2] {
        [self.alpha.clone(), self.beta.clone()]
    }

    /// Replaces a free `beta` (and with it `B`).
    pub fn with_beta(&self, beta: Rational, ty: CoxeterType) -> Result<Self> {
        if !self.beta_free {
            return Err(Error::BetaNotArbitrary(ty.label()));
        }
        if beta <= Rational::zero() {
            return Err(Error::InvalidParameter(format!("beta must be positive, got {beta}")));
        }
        Ok(ParameterSet { b: beta.clone(), beta, ..self.clone() })
    }
}

/// `V- = {d, 2d - 2 + nu}`, `V+ = {4d - 4 + d nu, h - d - (d - 1) nu}`.
pub fn explicit_vpm(h: i64, d: &Rational, nu: i64) -> ([Rational; 2], [Rational; 2]) {
    let (h, nu) = (int(h), int(nu));
    let one = Rational::one();
    let v_minus = [d.clone(), int(2) * d - int(2) + &nu];
    let v_plus = [int(4) * d - int(4) + d * &nu, &h - d - (d - &one) * &nu];
    (v_plus, v_minus)
}

pub fn gamma_invariant(t: CoxeterType) -> i64 {
    let t = t.normalize();
    let r = i64::from(t.n);
    match t.family {
        Family::A => (r + 1) * (r + 1),
        Family::B | Family::C => 4 * r * r + 2 * r - 2,
        Family::D => (2 * r - 2) * (2 * r - 2),
        Family::E => [144, 324, 900][t.n as usize - 6],
        Family::F => 162,
        Family::G => 48,
        Family::H => [31, 124, 1116][t.n as usize - 2],
        Family::I2 => 2 * r * r - 5 * r + 6,
    }
}

pub fn parameters(t: CoxeterType, profile: Profile) -> Result<ParameterSet> {
    if !profile.applies_to(t) {
        return Err(Error::ProfileMismatch { profile: profile.to_string(), ty: t.label() });
    }
    let t = t.normalize();
    let r = i64::from(t.rank());
    let h = t.coxeter_number();
    let gamma = gamma_invariant(t);
    let row = |d: Rational, nu: i64, a: Rational, b: Rational, alpha: Rational, beta: Rational, free: bool| {
        ParameterSet { r, h, gamma, d, nu, alpha, beta, a, b, beta_free: free }
    };
    if profile == Profile::Redefined {
        let m = i64::from(t.dihedral_m().expect("dihedral type"));
        let half = rat(m, 2);
        return Ok(row(half.clone(), 0, int(2 * m - 4), half.clone(), int(m - 2), half, true));
    }
    let n = i64::from(t.n);
    Ok(match t.family {
        Family::A if n == 1 => row(int(1), 1, int(1), int(1), int(1), int(1), true),
        Family::A => row(int(1), n, int(n), int(n), int(1), int(n), true),
        Family::B | Family::C => row(int(2), n - 2, int(2 * n), int(n), int(2), int(n), true),
        Family::D => row(int(2), n - 4, int(n), int(2 * (n - 2)), int(2), int(n - 2), false),
        Family::E => match n {
            6 => row(int(3), 0, int(8), int(9), int(3), int(4), false),
            7 => row(int(4), 0, int(12), int(14), int(4), int(6), false),
            _ => row(int(6), 0, int(20), int(24), int(6), int(10), false),
        },
        Family::F => row(int(4), 0, int(8), int(12), int(4), int(6), false),
        Family::G => row(int(3), 0, int(8), int(3), int(4), int(3), true),
        Family::H => match n {
            2 => row(int(2), 1, int(6), int(2), int(3), int(2), true),
            3 => row(int(4), 0, int(12), int(6), int(4), int(6), true),
            _ => row(int(10), 0, int(20), int(36), int(10), int(18), false),
        },
        Family::I2 => {
            let k = n / 2;
            let half = rat(n, 2);
            if n % 2 == 1 {
                row(int(k), 1, int(4 * k - 2), half.clone(), int(2 * k - 1), half, true)
            } else {
                row(int(k), 0, int(4 * k - 4), half.clone(), int(2 * k - 2), half, true)
            }
        }
    })
}

/// All types up to the given rank (exceptional ones included when their rank
/// fits) and `I2(3..=max_m)`, normalised, first occurrence kept.
pub fn catalog(max_rank: u32, max_m: u32) -> Vec<CoxeterType> {
    use Family::*;
    let mut raw: Vec<CoxeterType> = Vec::new();
    raw.extend((1..=max_rank).map(|r| CoxeterType::of(A, r)));
    raw.extend((2..=max_rank).map(|r| CoxeterType::of(C, r)));
    raw.extend((4..=max_rank).map(|r| CoxeterType::of(D, r)));
    let exceptional = [(E, 6), (E, 7), (E, 8), (F, 4), (G, 2), (H, 2), (H, 3), (H, 4)];
    raw.extend(exceptional.iter().filter(|&&(_, r)| r <= max_rank).map(|&(f, r)| CoxeterType::of(f, r)));
    raw.extend((3..=max_m).map(|m| CoxeterType::of(I2, m)));
    let mut out: Vec<CoxeterType> = Vec::with_capacity(raw.len());
    for t in raw.into_iter().map(CoxeterType::normalize) {
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}
