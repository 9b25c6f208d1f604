//! Numerical invariants read off log-resolution data.
//!
//! A datum lists, for each prime divisor `Eᵢ` on a log resolution, the
//! coefficient `rᵢ` of `Eᵢ` in the pulled-back divisor and the coefficient `bᵢ`
//! of `Eᵢ` in the relative canonical divisor. Nothing here computes a
//! resolution; the data are trusted. The threshold is the minimum over all
//! entries, so a per-point value needs the caller to drop entries whose image
//! misses the point.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionEntry {
    pub r: Rational,
    pub b: u64,
    pub label: String,
}

impl ResolutionEntry {
    pub fn new(r: Rational, b: u64, label: impl Into<String>) -> Self {
        ResolutionEntry { r, b, label: label.into() }
    }

    /// `(b + 1) / r`, for `r > 0`.
    fn threshold(&self) -> Option<Rational> {
        self.r.is_positive().then(|| Rational::from_integer(BigInt::from(self.b + 1)) / &self.r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionDatum {
    entries: Vec<ResolutionEntry>,
}

impl ResolutionDatum {
    pub fn new(entries: Vec<ResolutionEntry>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|e| e.r.is_negative()) {
            return Err(Error::Resolution(format!("negative coefficient r = {} on {}", bad.r, bad.label)));
        }
        if !entries.iter().any(|e| e.r.is_positive()) {
            return Err(Error::Resolution("no entry with r > 0".into()));
        }
        Ok(ResolutionDatum { entries })
    }

    pub fn entries(&self) -> &[ResolutionEntry] {
        &self.entries
    }

    /// The cusp `x³ = y²` resolved by three point blow-ups.
    ///
    /// Blowing up the origin gives `E1` with `r = 2` (multiplicity of the
    /// curve), `b = 1`. The strict transform stays tangent to `E1`; blowing up
    /// that point gives `E2` with `r = 2 + 1 = 3`, `b = 1 + 1 = 2`. The strict
    /// transform, `E1` and `E2` now meet in one point; blowing it up gives `E3`
    /// with `r = 1 + 2 + 3 = 6`, `b = 1 + 1 + 2 = 4`, after which the total
    /// transform has normal crossings.
    pub fn cusp() -> Self {
        ResolutionDatum::new(vec![
            ResolutionEntry::new(ratio(2, 1), 1, "E1"),
            ResolutionEntry::new(ratio(3, 1), 2, "E2"),
            ResolutionEntry::new(ratio(6, 1), 4, "E3"),
        ])
        .expect("valid fixture")
    }

    /// `D = (2/3)(A1 + A2 + A3)` for three concurrent lines in the plane,
    /// resolved by blowing up their common point: `μ*D = (2/3)ΣA′ᵢ + 2E` and
    /// `K = E`.
    pub fn three_lines() -> Self {
        ResolutionDatum::new(vec![
            ResolutionEntry::new(ratio(2, 1), 1, "E"),
            ResolutionEntry::new(ratio(2, 3), 0, "A1'"),
            ResolutionEntry::new(ratio(2, 3), 0, "A2'"),
            ResolutionEntry::new(ratio(2, 3), 0, "A3'"),
        ])
        .expect("valid fixture")
    }
}

/// `min (b + 1) / r` over entries with `r > 0`.
pub fn lct_from_resolution(datum: &ResolutionDatum) -> Rational {
    datum.entries.iter().filter_map(ResolutionEntry::threshold).min().expect("datum has an entry with r > 0")
}

/// Every `(b + m)/r ≤ bound` with `m ≥ 1`, sorted and deduplicated.
///
/// Jumping numbers occur among these values; the converse fails in general,
/// so the list is a superset.
pub fn candidate_jumping_numbers(datum: &ResolutionDatum, bound: &Rational) -> Result<Vec<Rational>> {
    if !bound.is_positive() {
        return Err(Error::Coefficient { requirement: "positive", value: bound.to_string() });
    }
    let mut values = Vec::new();
    for entry in datum.entries.iter().filter(|e| e.r.is_positive()) {
        let mut m = 1u64;
        loop {
            let value = Rational::from_integer(BigInt::from(entry.b + m)) / &entry.r;
            if value > *bound {
                break;
            }
            values.push(value);
            m += 1;
        }
    }
    values.sort();
    values.dedup();
    Ok(values)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    #[serde(rename = "KLT")]
    Klt,
    #[serde(rename = "LC_not_KLT")]
    LcNotKlt,
    #[serde(rename = "Not_LC")]
    NotLc,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Klt => "KLT",
            Classification::LcNotKlt => "LC_not_KLT",
            Classification::NotLc => "Not_LC",
        }
    }
}

/// Singularity class of the pair with divisor scaled by `c`: KLT when every
/// `c·r − b < 1`, log-canonical when every `c·r − b ≤ 1`.
pub fn classify(datum: &ResolutionDatum, c: &Rational) -> Result<Classification> {
    if !c.is_positive() {
        return Err(Error::Coefficient { requirement: "positive", value: c.to_string() });
    }
    let mut boundary = false;
    for entry in &datum.entries {
        let discrepancy = c * &entry.r - Rational::from_integer(BigInt::from(entry.b));
        let one = Rational::from_integer(BigInt::from(1));
        if discrepancy > one {
            return Ok(Classification::NotLc);
        }
        if discrepancy == one {
            boundary = true;
        }
    }
    Ok(if boundary { Classification::LcNotKlt } else { Classification::Klt })
}

/// `D = Σ aᵢ Dᵢ` with simple normal crossing support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SncDivisor {
    coefficients: Vec<Rational>,
}

impl SncDivisor {
    pub fn new(coefficients: Vec<Rational>) -> Result<Self> {
        if let Some(bad) = coefficients.iter().find(|a| a.is_negative()) {
            return Err(Error::Coefficient { requirement: "non-negative", value: bad.to_string() });
        }
        Ok(SncDivisor { coefficients })
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }
}

/// Round-down `⌊aᵢ⌋`: `J(D) = O(−Σ⌊aᵢ⌋Dᵢ)`.
pub fn snc_multiplier_coefficients(divisor: &SncDivisor) -> Vec<BigInt> {
    divisor.coefficients.iter().map(|a| a.floor().to_integer()).collect()
}
