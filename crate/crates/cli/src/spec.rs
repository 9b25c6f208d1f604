//! Input file formats.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use multiplier_core::rational::parse_rational;
use multiplier_core::{ExponentVector, MonomialIdeal, Rational, ResolutionDatum, ResolutionEntry};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIdealSpec {
    dimension: usize,
    #[serde(default)]
    variables: Option<Vec<String>>,
    generators: Vec<Vec<u32>>,
}

/// A parsed ideal file: the ideal plus optional variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpec {
    pub ideal: MonomialIdeal,
    pub variables: Option<Vec<String>>,
}

impl IdealSpec {
    pub fn parse(text: &str) -> Result<IdealSpec> {
        let raw: RawIdealSpec = serde_json::from_str(text).context("invalid ideal file")?;
        if raw.dimension == 0 {
            bail!("field `dimension`: must be at least 1");
        }
        if let Some(names) = &raw.variables {
            if names.len() != raw.dimension {
                bail!("field `variables`: expected {} names, found {}", raw.dimension, names.len());
            }
        }
        if raw.generators.is_empty() {
            bail!("field `generators`: the zero ideal is not supported");
        }
        for (index, g) in raw.generators.iter().enumerate() {
            if g.len() != raw.dimension {
                bail!("field `generators[{index}]`: expected {} exponents, found {}", raw.dimension, g.len());
            }
        }
        let ideal = MonomialIdeal::minimalize(raw.dimension, raw.generators.into_iter().map(ExponentVector::new))?;
        Ok(IdealSpec { ideal, variables: raw.variables })
    }

    pub fn load(path: &Path) -> Result<IdealSpec> {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        IdealSpec::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    /// Variable names, defaulting to `x1 … xd`.
    pub fn names(&self) -> Vec<String> {
        self.variables.clone().unwrap_or_else(|| (1..=self.ideal.dimension()).map(|i| format!("x{i}")).collect())
    }

    /// One-line canonical form, newline-terminated.
    pub fn to_canonical(&self) -> String {
        let mut out = format!("{{\"dimension\": {}", self.ideal.dimension());
        if let Some(names) = &self.variables {
            let quoted: Vec<String> =
                names.iter().map(|n| serde_json::to_string(n).expect("string serializes")).collect();
            write!(out, ", \"variables\": [{}]", quoted.join(", ")).unwrap();
        }
        let gens: Vec<String> = self
            .ideal
            .generators()
            .iter()
            .map(|g| {
                let coords: Vec<String> = g.coords().iter().map(u32::to_string).collect();
                format!("[{}]", coords.join(","))
            })
            .collect();
        writeln!(out, ", \"generators\": [{}]}}", gens.join(",")).unwrap();
        out
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    r: String,
    b: u64,
    #[serde(default)]
    label: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDatum {
    entries: Vec<RawEntry>,
}

pub fn parse_resolution(text: &str) -> Result<ResolutionDatum> {
    let raw: RawDatum = serde_json::from_str(text).context("invalid resolution file")?;
    let mut entries = Vec::with_capacity(raw.entries.len());
    for (index, e) in raw.entries.into_iter().enumerate() {
        let r = parse_rational(&e.r)
            .with_context(|| format!("field `entries[{index}].r`: `{}` is not a rational p/q", e.r))?;
        let label = e.label.unwrap_or_else(|| format!("E{}", index + 1));
        entries.push(ResolutionEntry::new(r, e.b, label));
    }
    Ok(ResolutionDatum::new(entries)?)
}

pub fn load_resolution(path: &Path) -> Result<ResolutionDatum> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_resolution(&text).with_context(|| format!("in {}", path.display()))
}

/// Parses a rational command-line value.
pub fn rational_arg(text: &str) -> std::result::Result<Rational, String> {
    parse_rational(text).ok_or_else(|| format!("`{text}` is not a rational p/q"))
}
