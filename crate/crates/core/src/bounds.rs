//! Crossing lower bounds and density bounds driven by a table of per-`i`
//! edge bounds `m <= alpha_i n - beta_i` for `i`-planar drawings,
//! `i = 0..t`. All arithmetic is exact; floats appear only for display.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::BoundsError;

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// Six significant digits.
pub fn display(r: &Rational) -> String {
    format_sig(to_f64(r), 6)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn format_sig(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    let s = format!("{v:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    t: usize,
    alpha: Vec<String>,
    beta: Vec<String>,
}

impl CoefficientTable {
    pub fn new(alpha: Vec<Rational>, beta: Vec<Rational>) -> Result<Self, BoundsError> {
        if alpha.is_empty() {
            return Err(BoundsError::Table("t must be positive".into()));
        }
        if alpha.len() != beta.len() {
            return Err(BoundsError::Table(format!("alpha has {} entries but beta has {}", alpha.len(), beta.len())));
        }
        if let Some((i, a)) = alpha.iter().enumerate().find(|(_, a)| **a < Rational::one()) {
            return Err(BoundsError::Table(format!("alpha_{i} = {a} is below 1")));
        }
        if let Some((i, b)) = beta.iter().enumerate().find(|(_, b)| b.is_negative()) {
            return Err(BoundsError::Table(format!("beta_{i} = {b} is negative")));
        }
        Ok(CoefficientTable { alpha, beta })
    }

    pub fn t(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha_sum(&self) -> Rational {
        self.alpha.iter().fold(Rational::zero(), |acc, a| acc + a)
    }

    pub fn beta_sum(&self) -> Rational {
        self.beta.iter().fold(Rational::zero(), |acc, b| acc + b)
    }

    /// `3 alpha / (2 t)`: the edge threshold per vertex above which the
    /// crossing lower bound applies.
    pub fn threshold(&self) -> Rational {
        int(3) * self.alpha_sum() / int(2 * self.t() as i64)
    }

    pub fn from_json(text: &str) -> Result<Self, BoundsError> {
        let raw: TableJson = serde_json::from_str(text).map_err(|e| BoundsError::Table(e.to_string()))?;
        let parse = |v: &[String]| -> Result<Vec<Rational>, BoundsError> {
            v.iter()
                .map(|s| s.trim().parse::<Rational>().map_err(|_| BoundsError::Table(format!("bad rational `{s}`"))))
                .collect()
        };
        let table = CoefficientTable::new(parse(&raw.alpha)?, parse(&raw.beta)?)?;
        if table.t() != raw.t {
            return Err(BoundsError::Table(format!("t = {} but {} coefficients given", raw.t, table.t())));
        }
        Ok(table)
    }

    pub fn to_json(&self) -> String {
        let json = TableJson {
            t: self.t(),
            alpha: self.alpha.iter().map(ToString::to_string).collect(),
            beta: self.beta.iter().map(ToString::to_string).collect(),
        };
        serde_json::to_string(&json).expect("table serializes")
    }
}

/// Tight bounds for 2-layer `i`-planar drawings, `i = 0..=5`:
/// caterpillar forests `n - 1`, then `3/2 n - 2`, `5/3 n - 7/3`, `2n - 4`,
/// `2n - 3` and `9/4 n - 9/2`.
pub fn default_table() -> CoefficientTable {
    CoefficientTable {
        alpha: vec![int(1), rat(3, 2), rat(5, 3), int(2), int(2), rat(9, 4)],
        beta: vec![int(1), int(2), rat(7, 3), int(4), int(3), rat(9, 2)],
    }
}

/// `4 t^3 / (27 alpha^2)`.
pub fn crossing_lemma_coefficient(table: &CoefficientTable) -> Rational {
    let t = int(table.t() as i64);
    let alpha = table.alpha_sum();
    int(4) * &t * &t * &t / (int(27) * &alpha * &alpha)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Applicability {
    Applicable(Rational),
    Inapplicable(String),
}

impl Applicability {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            Applicability::Applicable(v) => Some(v),
            Applicability::Inapplicable(_) => None,
        }
    }
}

/// `4 t^3 / (27 alpha^2) * m^3 / n^2`, valid for `n >= 4` and
/// `m >= 3 alpha / (2t) * n`.
pub fn crossing_lower_bound(n: usize, m: usize, table: &CoefficientTable) -> Applicability {
    if n < 4 {
        return Applicability::Inapplicable(format!("needs n >= 4, got n = {n}"));
    }
    let (n_r, m_r) = (int(n as i64), int(m as i64));
    let needed = table.threshold() * &n_r;
    if m_r < needed {
        return Applicability::Inapplicable(format!("needs m >= {} (= {} n), got m = {m}", needed, table.threshold()));
    }
    Applicability::Applicable(crossing_lemma_coefficient(table) * &m_r * &m_r * &m_r / (&n_r * &n_r))
}

/// `t m - alpha n + beta`; may be negative.
pub fn auxiliary_lower_bound(n: usize, m: usize, table: &CoefficientTable) -> Result<Rational, BoundsError> {
    if n < 4 {
        return Err(BoundsError::TooFewVertices(n));
    }
    Ok(int((table.t() * m) as i64) - table.alpha_sum() * int(n as i64) + table.beta_sum())
}

pub fn clamp_zero(r: Rational) -> Rational {
    if r.is_negative() {
        Rational::zero()
    } else {
        r
    }
}

/// `coefficient * sqrt(radicand)` with a square-free integer radicand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub coefficient: Rational,
    pub radicand: BigInt,
}

impl Surd {
    pub fn rational(r: Rational) -> Self {
        Surd { coefficient: r, radicand: BigInt::one() }
    }

    /// `sqrt(r)`, normalised to `c * sqrt(s)` with `s` square-free.
    pub fn sqrt(r: &Rational) -> Self {
        // sqrt(a/b) = sqrt(a b) / b
        let (a, b) = (r.numer().clone(), r.denom().clone());
        let (outside, inside) = split_square(&(&a * &b));
        Surd { coefficient: Rational::new(outside, b), radicand: inside }
    }

    pub fn scale(self, r: &Rational) -> Self {
        Surd { coefficient: self.coefficient * r, radicand: self.radicand }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.coefficient) * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    /// Exact comparison against a rational.
    pub fn cmp_rational(&self, r: &Rational) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        let lhs_sign = self.coefficient.cmp(&Rational::zero());
        let rhs_sign = r.cmp(&Rational::zero());
        if lhs_sign != rhs_sign || lhs_sign == Equal {
            return lhs_sign.cmp(&rhs_sign);
        }
        let lhs = &self.coefficient * &self.coefficient * Rational::from_integer(self.radicand.clone());
        let rhs = r * r;
        if lhs_sign == Greater {
            lhs.cmp(&rhs)
        } else {
            rhs.cmp(&lhs)
        }
    }
}

impl std::fmt::Display for Surd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.radicand.is_one() {
            write!(f, "{}", self.coefficient)
        } else {
            write!(f, "({})*sqrt({})", self.coefficient, self.radicand)
        }
    }
}

/// Splits `v` into `(o, s)` with `v = o^2 s` and `s` square-free.
fn split_square(v: &BigInt) -> (BigInt, BigInt) {
    let mut rest = v.clone();
    let mut outside = BigInt::one();
    let mut f = BigInt::from(2);
    while &f * &f <= rest {
        let sq = &f * &f;
        while rest.is_multiple_of(&sq) {
            rest /= &sq;
            outside *= &f;
        }
        f += 1;
    }
    (outside, rest)
}

/// The density bound `m <= factor * n` for k-planar drawings, `k >= t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityUpperBound {
    /// Per-vertex factor `max{1, sqrt(3k/(2t))} * 3 alpha / (2t)`.
    pub factor: Surd,
    /// True when the square-root branch of the maximum is the larger one.
    pub sqrt_branch: bool,
    pub n: usize,
}

impl DensityUpperBound {
    pub fn edges(&self) -> f64 {
        self.factor.to_f64() * self.n as f64
    }
}

pub fn density_upper_bound(n: usize, k: u32, table: &CoefficientTable) -> Result<DensityUpperBound, BoundsError> {
    if n < 4 {
        return Err(BoundsError::TooFewVertices(n));
    }
    if (k as usize) < table.t() {
        return Err(BoundsError::KBelowTable { k, t: table.t() });
    }
    let radicand = int(3 * k as i64) / int(2 * table.t() as i64);
    let sqrt_branch = radicand > Rational::one();
    let factor =
        if sqrt_branch { Surd::sqrt(&radicand).scale(&table.threshold()) } else { Surd::rational(table.threshold()) };
    Ok(DensityUpperBound { factor, sqrt_branch, n })
}

/// The band construction reaching `l n - O(l^2)` edges, `l = floor(sqrt(k/2))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneralLowerBound {
    pub k: u32,
    pub ell: usize,
}

impl GeneralLowerBound {
    /// Exact edge count `2 (l p - l (l + 1) / 2)` of the band on `p + p` vertices.
    pub fn edges(&self, p: usize) -> usize {
        let ell = self.ell;
        2 * (ell * p).saturating_sub(ell * (ell + 1) / 2)
    }
}

pub fn density_lower_bound_general(k: u32) -> Result<GeneralLowerBound, BoundsError> {
    if k < 2 {
        return Err(BoundsError::KBelowTwo(k));
    }
    Ok(GeneralLowerBound { k, ell: crate::families::band_width(k) })
}

/// Smallest `h` such that every 2-layer k-planar drawing is h-quasiplanar:
/// `3` for `k = 2`, otherwise `ceil(2k/3 + 2)`.
pub fn quasiplanar_threshold(k: u32) -> Result<u32, BoundsError> {
    match k {
        0 | 1 => Err(BoundsError::KBelowTwo(k)),
        2 => Ok(3),
        _ => Ok((2 * k + 6).div_ceil(3)),
    }
}

/// Like [`quasiplanar_threshold`] but maps `k <= 1` to `3`.
pub fn quasiplanar_threshold_or_three(k: u32) -> u32 {
    quasiplanar_threshold(k).unwrap_or(3)
}
