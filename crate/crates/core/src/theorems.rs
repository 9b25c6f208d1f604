//! Containment theorems for multiplier ideals, checked on concrete instances.
//!
//! A violated hypothesis is an input error (`Err`), never a failed check: a
//! `fail` verdict always points at an engine bug or a false instance, and it
//! carries the canonically least monomial witnessing the failed containment.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::howald::{jumping_numbers_with, mixed_multiplier_ideal_with, multiplier_ideal_with, Jumps};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::limits::Limits;
use crate::newton::newton_polyhedron_with;
use crate::random::{self, IdealShape};
use crate::rational::{format_rational, ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

fn serialize_rational<S: Serializer>(value: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(v) => s.serialize_str(&format_rational(v)),
        None => s.serialize_none(),
    }
}

/// A monomial in `subset` but not in `superset`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub step: String,
    pub exponent: ExponentVector,
    #[serde(serialize_with = "serialize_rational")]
    pub coefficient: Option<Rational>,
    pub subset: MonomialIdeal,
    pub superset: MonomialIdeal,
}

impl Witness {
    /// Re-checks the witness by plain membership.
    pub fn is_valid(&self) -> bool {
        self.subset.contains_monomial(&self.exponent).unwrap_or(false)
            && !self.superset.contains_monomial(&self.exponent).unwrap_or(true)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub instance: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub details: Map<String, Value>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// One claimed containment `subset ⊆ superset`.
#[derive(Debug, Clone)]
pub struct Containment {
    pub step: String,
    pub subset: MonomialIdeal,
    pub superset: MonomialIdeal,
}

impl Containment {
    pub fn new(step: impl Into<String>, subset: MonomialIdeal, superset: MonomialIdeal) -> Self {
        Containment { step: step.into(), subset, superset }
    }

    /// Both directions of `left = right`.
    pub fn equality(step: &str, left: &MonomialIdeal, right: &MonomialIdeal) -> [Containment; 2] {
        [
            Containment::new(format!("{step} (⊆)"), left.clone(), right.clone()),
            Containment::new(format!("{step} (⊇)"), right.clone(), left.clone()),
        ]
    }
}

/// Evaluates the containments in order; the first failure supplies the witness.
pub fn evaluate(
    name: &str,
    instance: Value,
    coefficient: Option<&Rational>,
    containments: impl IntoIterator<Item = Containment>,
) -> Result<CheckReport> {
    let mut witness = None;
    for claim in containments {
        if let Some(exponent) = claim.superset.first_missing_generator(&claim.subset)? {
            witness = Some(Witness {
                step: claim.step,
                exponent,
                coefficient: coefficient.cloned(),
                subset: claim.subset,
                superset: claim.superset,
            });
            break;
        }
    }
    Ok(CheckReport {
        name: name.to_string(),
        verdict: if witness.is_some() { Verdict::Fail } else { Verdict::Pass },
        witness,
        instance,
        seed: None,
        details: Map::new(),
    })
}

fn r(value: &Rational) -> Value {
    Value::String(format_rational(value))
}

fn ideal_json(ideal: &MonomialIdeal) -> Value {
    serde_json::to_value(ideal).expect("ideal serializes")
}

fn check_dimensions(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<()> {
    if a.dimension() == b.dimension() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: a.dimension(), found: b.dimension() })
    }
}

/// `J(a^m·b^c) = a·J(a^(m−1)·b^c)` for `m ≥ d`, together with the iterated
/// form `J(a^m·b^c) = a^(m+1−d)·J(a^(d−1)·b^c)`.
pub fn check_skoda(a: &MonomialIdeal, m: u32, b: &MonomialIdeal, c: &Rational, limits: &Limits) -> Result<CheckReport> {
    check_dimensions(a, b)?;
    let d = a.dimension() as u32;
    if m < d {
        return Err(Error::Hypothesis(format!("Skoda's theorem needs m ≥ d, got m = {m} < d = {d}")));
    }
    let mixed = |power: u32| mixed_multiplier_ideal_with(a, &Rational::from_integer(power.into()), b, c, limits);
    let left = mixed(m)?;
    let right = a.product(&mixed(m - 1)?)?;
    let iterated = a.power(m + 1 - d)?.product(&mixed(d - 1)?)?;
    let mut claims: Vec<Containment> = Containment::equality("J(a^m b^c) = a J(a^(m-1) b^c)", &left, &right).into();
    claims.extend(Containment::equality("J(a^m b^c) = a^(m+1-d) J(a^(d-1) b^c)", &left, &iterated));
    let instance = json!({"a": ideal_json(a), "m": m, "b": ideal_json(b), "c": r(c)});
    evaluate("skoda", instance, Some(c), claims)
}

/// `J(a^c·b^e) ⊆ J(a^c)·J(b^e)`.
pub fn check_subadditivity(
    a: &MonomialIdeal,
    c: &Rational,
    b: &MonomialIdeal,
    e: &Rational,
    limits: &Limits,
) -> Result<CheckReport> {
    check_dimensions(a, b)?;
    let mixed = mixed_multiplier_ideal_with(a, c, b, e, limits)?;
    let product = multiplier_ideal_with(a, c, limits)?.product(&multiplier_ideal_with(b, e, limits)?)?;
    let instance = json!({"a": ideal_json(a), "c": r(c), "b": ideal_json(b), "e": r(e)});
    evaluate("subadditivity", instance, Some(c), [Containment::new("J(a^c b^e) ⊆ J(a^c) J(b^e)", mixed, product)])
}

/// `J(a|_H ^c) ⊆ J(a^c)|_H` for the hyperplane `H = {x_k = 0}` (0-based `k`).
pub fn check_restriction(a: &MonomialIdeal, k: usize, c: &Rational, limits: &Limits) -> Result<CheckReport> {
    let restricted = a.restrict_to_hyperplane(k)?;
    let left = multiplier_ideal_with(&restricted, c, limits)?;
    let right = multiplier_ideal_with(a, c, limits)?.restrict_to_hyperplane(k)?;
    let instance = json!({"a": ideal_json(a), "k": k + 1, "c": r(c)});
    evaluate("restriction", instance, Some(c), [Containment::new("J(a|_H ^c) ⊆ J(a^c)|_H", left, right)])
}

/// Generator budget for forming `(√a)^m` explicitly in the chain check.
const EXPLICIT_POWER_BUDGET: usize = 256;

/// For consecutive jumping numbers `ξᵢ < ξᵢ₊₁ ≤ bound` (with `ξ₀ = 0`):
/// `√a·J(a^ξᵢ) ⊆ J(a^ξᵢ₊₁)`, and `(√a)^m ⊆ J(a^ξₘ)` for each jump index `m`.
///
/// Small powers of `√a` are compared generator by generator. Once the power
/// outgrows a budget the second claim is decided on the facets of `P(a)`:
/// `(√a)^m ⊆ J(a^ξ)` iff `m·min_r ⟨v, r⟩ + |v| > ξ·q` for every facet
/// `⟨v, ·⟩ ≥ q`, the minimum running over generators `r` of `√a`. A failure
/// there is re-derived explicitly to produce the least witness.
pub fn check_mustata_chain(a: &MonomialIdeal, bound: &Rational, limits: &Limits) -> Result<CheckReport> {
    mustata_chain(a, bound, limits, EXPLICIT_POWER_BUDGET)
}

fn mustata_chain(a: &MonomialIdeal, bound: &Rational, limits: &Limits, budget: usize) -> Result<CheckReport> {
    let sequence = jumping_numbers_with(a, bound, limits)?;
    let polyhedron = newton_polyhedron_with(a, limits)?;
    let radical = a.radical();
    let facet_minima: Vec<(Rational, Rational, Rational)> = polyhedron
        .positive_facets()
        .map(|f| {
            let least = radical
                .generators()
                .iter()
                .map(|g| f.evaluate_shifted(g) - f.evaluate_shifted(&ExponentVector::zero(a.dimension())))
                .min()
                .expect("radical has generators");
            let weight = f.evaluate_shifted(&ExponentVector::zero(a.dimension()));
            (Rational::from_integer(least), Rational::from_integer(weight), f.offset().clone())
        })
        .collect();

    let mut claims = Vec::new();
    let mut previous = MonomialIdeal::unit(a.dimension())?;
    let mut previous_coefficient = Rational::zero();
    let mut radical_power = Some(MonomialIdeal::unit(a.dimension())?);
    let mut decided_on_facets = 0usize;
    for (index, jump) in sequence.jumps.iter().enumerate() {
        let m = index as u32 + 1;
        claims.push(Containment::new(
            format!(
                "sqrt(a) J(a^{}) ⊆ J(a^{})",
                format_rational(&previous_coefficient),
                format_rational(&jump.coefficient)
            ),
            radical.product(&previous)?,
            jump.ideal_after.clone(),
        ));
        let step = format!("sqrt(a)^{m} ⊆ J(a^{})", format_rational(&jump.coefficient));
        radical_power = match radical_power.take() {
            Some(power) if power.generators().len() <= budget => Some(power.product(&radical)?),
            _ => None,
        };
        match &radical_power {
            Some(power) => claims.push(Containment::new(step, power.clone(), jump.ideal_after.clone())),
            None => {
                decided_on_facets += 1;
                let scale = Rational::from_integer(m.into());
                let holds = facet_minima
                    .iter()
                    .all(|(least, weight, offset)| &scale * least + weight > &jump.coefficient * offset);
                if !holds {
                    claims.push(Containment::new(step, radical.power(m)?, jump.ideal_after.clone()));
                }
            }
        }
        previous = jump.ideal_after.clone();
        previous_coefficient = jump.coefficient.clone();
    }
    let instance = json!({"a": ideal_json(a), "bound": r(bound)});
    let mut report = evaluate("mustata-chain", instance, None, claims)?;
    report.details.insert("jumps".into(), Value::Array(sequence.jumps.iter().map(|j| r(&j.coefficient)).collect()));
    if decided_on_facets > 0 {
        report.details.insert("power_claims_on_facets".into(), json!(decided_on_facets));
    }
    Ok(report)
}

/// The least index `σ` with `ξ_σ ≥ d`, and the check `(√a)^σ ⊆ a`.
pub fn nullstellensatz_sigma(a: &MonomialIdeal, limits: &Limits) -> Result<(u32, CheckReport)> {
    let d = Rational::from_integer((a.dimension() as u64).into());
    let polyhedron = newton_polyhedron_with(a, limits)?;
    let mut sigma = 0u32;
    let mut reached = None;
    for jump in Jumps::new(polyhedron)? {
        let jump = jump?;
        sigma += 1;
        if jump.coefficient >= d {
            reached = Some(jump.coefficient);
            break;
        }
    }
    let reached = reached.expect("jumping numbers are unbounded");
    let instance = json!({"a": ideal_json(a)});
    let mut report = evaluate(
        "nullstellensatz",
        instance,
        Some(&reached),
        [Containment::new(format!("sqrt(a)^{sigma} ⊆ a"), a.radical().power(sigma)?, a.clone())],
    )?;
    report.details.insert("sigma".into(), json!(sigma));
    report.details.insert("xi_sigma".into(), r(&reached));
    Ok((sigma, report))
}

/// Mixed coefficients exercised by the subadditivity part of a campaign.
pub fn campaign_coefficients() -> [Rational; 3] {
    [ratio(1, 2), Rational::one(), ratio(3, 2)]
}

/// Every check on one seeded instance, folded into a single report.
///
/// The instance is a pair of random proper ideals `a`, `b` of a common
/// dimension `d ≤ 3`: Skoda for `m ∈ {d, d+1}` (with `b^(1/2)`),
/// subadditivity for `c, e ∈ {1/2, 1, 3/2}`, restriction to every admissible
/// coordinate hyperplane at `c = 1`, and the jump chain up to `d + 2`.
pub fn campaign_instance(seed: u64, limits: &Limits) -> Result<CheckReport> {
    let shape = IdealShape::default();
    let mut rng = random::rng(seed);
    let a = random::random_ideal_any_dimension(&mut rng, &shape);
    let b = random::random_ideal(&mut rng, a.dimension(), &shape);
    let d = a.dimension() as u32;
    let half = ratio(1, 2);

    let mut reports = Vec::new();
    for m in [d, d + 1] {
        reports.push(check_skoda(&a, m, &b, &half, limits)?);
    }
    for c in campaign_coefficients() {
        for e in campaign_coefficients() {
            reports.push(check_subadditivity(&a, &c, &b, &e, limits)?);
        }
    }
    if d >= 2 {
        for k in 0..a.dimension() {
            if a.restrict_to_hyperplane(k).is_ok() {
                reports.push(check_restriction(&a, k, &Rational::one(), limits)?);
            }
        }
    }
    reports.push(check_mustata_chain(&a, &Rational::from_integer((d + 2).into()), limits)?);

    let failed = reports.iter().find(|rep| !rep.passed());
    let mut details = Map::new();
    details.insert("checks".into(), json!(reports.len()));
    if let Some(failure) = failed {
        details.insert("failed_check".into(), json!(failure.name));
        details.insert("failed_instance".into(), failure.instance.clone());
    }
    Ok(CheckReport {
        name: "campaign".into(),
        verdict: if failed.is_some() { Verdict::Fail } else { Verdict::Pass },
        witness: failed.and_then(|f| f.witness.clone()),
        instance: json!({"a": ideal_json(&a), "b": ideal_json(&b)}),
        seed: Some(seed),
        details,
    })
}

/// `count` seeded instances, checked in parallel and reported in seed order.
pub fn campaign(seed: u64, count: usize, limits: &Limits) -> Result<Vec<CheckReport>> {
    random::derive_seeds(seed, count).into_par_iter().map(|s| campaign_instance(s, limits)).collect()
}
