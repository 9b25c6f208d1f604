//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use multiplier_core::howald::{jumping_numbers_with, mixed_multiplier_ideal_with, multiplier_ideal_with};
use multiplier_core::newton::newton_polyhedron_with;
use multiplier_core::rational::format_rational;
use multiplier_core::resolution::{
    candidate_jumping_numbers, classify, lct_from_resolution, snc_multiplier_coefficients,
};
use multiplier_core::symbolic::{analyze_with, check_graded_chain, check_symbolic_containment, symbolic_power};
use multiplier_core::theorems::{
    campaign, check_mustata_chain, check_restriction, check_skoda, check_subadditivity, evaluate,
    nullstellensatz_sigma, Containment,
};
use multiplier_core::{CheckReport, ExponentVector, Limits, MonomialIdeal, Rational, ResolutionDatum, SncDivisor};
use serde_json::{json, Value};

use crate::spec::{load_resolution, rational_arg, IdealSpec};
use crate::svg;

#[derive(Debug, Parser)]
#[command(name = "mi", version, about = "Exact multiplier ideals of monomial ideals")]
pub struct Cli {
    /// Output style on standard output.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Also write the JSON result to this file.
    #[arg(long, value_name = "PATH", global = true)]
    pub json: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Facets of the Newton polyhedron.
    Newton {
        ideal: PathBuf,
        /// Write a picture of the polygon (two variables only).
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// The multiplier ideal J(a^c).
    Mi {
        ideal: PathBuf,
        #[arg(short = 'c', long = "coefficient", value_parser = rational_arg)]
        c: Rational,
    },
    /// The mixed multiplier ideal J(a^c b^e).
    MixedMi {
        a: PathBuf,
        b: PathBuf,
        #[arg(short = 'c', long = "coefficient", value_parser = rational_arg)]
        c: Rational,
        #[arg(short = 'e', value_parser = rational_arg)]
        e: Rational,
    },
    /// The log-canonical threshold.
    Lct { ideal: PathBuf },
    /// Jumping numbers up to a bound.
    Jumps {
        ideal: PathBuf,
        #[arg(short = 'T', long = "bound", value_parser = rational_arg)]
        bound: Rational,
    },
    /// The symbolic power q^(m) of a squarefree ideal.
    SymbolicPower {
        ideal: PathBuf,
        #[arg(short = 'm')]
        m: u32,
    },
    /// The log-canonical threshold of resolution data.
    ResLct {
        data: PathBuf,
        /// Also list candidate jumping numbers up to this bound.
        #[arg(short = 'T', long = "bound", value_parser = rational_arg)]
        bound: Option<Rational>,
    },
    /// KLT / log-canonical classification of resolution data scaled by c.
    Classify {
        data: PathBuf,
        #[arg(short = 'c', long = "coefficient", value_parser = rational_arg)]
        c: Rational,
    },
    /// Round-down coefficients of an SNC divisor, e.g. `snc 5/2 1 1/3`.
    Snc {
        #[arg(required = true, value_parser = rational_arg, allow_hyphen_values = true)]
        coefficients: Vec<Rational>,
    },
    /// Containment theorems on concrete instances.
    Check {
        #[command(subcommand)]
        check: Check,
    },
    /// Same as `check symbolic`.
    #[command(hide = true)]
    SymbolicCheck(SymbolicArgs),
    /// Same as `check graded-chain`.
    #[command(hide = true)]
    GradedChain(GradedArgs),
}

#[derive(Debug, Subcommand)]
pub enum Check {
    /// J(a^m b^c) = a·J(a^(m-1) b^c) for m ≥ d.
    Skoda {
        ideal: PathBuf,
        #[arg(short = 'm')]
        m: u32,
        /// Second ideal b (default: the unit ideal).
        #[arg(long = "b", value_name = "PATH")]
        b: Option<PathBuf>,
        #[arg(short = 'c', long = "coefficient", value_parser = rational_arg, default_value = "0")]
        c: Rational,
    },
    /// J(a^c b^e) ⊆ J(a^c)·J(b^e).
    Subadd {
        a: PathBuf,
        b: PathBuf,
        #[arg(short = 'c', long = "coefficient", value_parser = rational_arg)]
        c: Rational,
        #[arg(short = 'e', value_parser = rational_arg)]
        e: Rational,
    },
    /// J((a|H)^c) ⊆ J(a^c)|H for H = {x_k = 0}.
    Restrict {
        ideal: PathBuf,
        /// 1-based coordinate; every admissible one when omitted.
        #[arg(short = 'k')]
        k: Option<usize>,
        #[arg(short = 'c', long = "coefficient", value_parser = rational_arg, default_value = "1")]
        c: Rational,
    },
    /// The radical chain between consecutive jumping numbers.
    Mustata {
        ideal: PathBuf,
        #[arg(short = 'T', long = "bound", value_parser = rational_arg)]
        bound: Rational,
    },
    /// The exponent σ with (√a)^σ ⊆ a from the jump reaching d.
    Nullstellensatz { ideal: PathBuf },
    /// q^(e·m) ⊆ q^m for a squarefree ideal.
    Symbolic(SymbolicArgs),
    /// a_ℓ^m ⊆ a_(ℓm) ⊆ J(a^(ℓm)) ⊆ J(a^ℓ)^m for symbolic powers.
    GradedChain(GradedArgs),
    /// Harness self-test: J(a^c) against a copy missing one generator.
    /// Always fails, exercising the witness path and exit code 1.
    #[command(hide = true)]
    Injected {
        ideal: PathBuf,
        #[arg(short = 'c', long = "coefficient", value_parser = rational_arg, default_value = "1")]
        c: Rational,
    },
    /// Seeded random instances of the Skoda, subadditivity, restriction and chain checks.
    Campaign {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SymbolicArgs {
    ideal: PathBuf,
    #[arg(short = 'm')]
    m: u32,
}

#[derive(Debug, Clone, Args)]
pub struct GradedArgs {
    ideal: PathBuf,
    #[arg(short = 'l')]
    l: u32,
    #[arg(short = 'm')]
    m: u32,
}

/// What a command produced: the JSON envelope, a text rendering and an exit code.
pub struct Outcome {
    pub envelope: Value,
    pub text: String,
    pub code: i32,
}

fn r(value: &Rational) -> Value {
    Value::String(format_rational(value))
}

fn generators(ideal: &MonomialIdeal) -> Value {
    Value::Array(ideal.generators().iter().map(|g| json!(g.coords())).collect())
}

fn spec_json(spec: &IdealSpec) -> Value {
    let mut value = json!({"dimension": spec.ideal.dimension()});
    if let Some(names) = &spec.variables {
        value["variables"] = json!(names);
    }
    value["generators"] = generators(&spec.ideal);
    value
}

fn datum_json(datum: &ResolutionDatum) -> Value {
    json!({"entries": datum.entries().iter().map(|e| json!({"r": r(&e.r), "b": e.b, "label": e.label})).collect::<Vec<_>>()})
}

/// `x1^2*x2`, `1` for the zero vector.
pub fn monomial(w: &ExponentVector, names: &[String]) -> String {
    let parts: Vec<String> = w
        .coords()
        .iter()
        .zip(names)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, name)| if e == 1 { name.clone() } else { format!("{name}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn ideal_text(ideal: &MonomialIdeal, names: &[String]) -> String {
    let gens: Vec<String> = ideal.generators().iter().map(|g| monomial(g, names)).collect();
    format!("({})", gens.join(", "))
}

fn default_names(d: usize) -> Vec<String> {
    (1..=d).map(|i| format!("x{i}")).collect()
}

fn outcome(input: Value, parameters: Value, result: Value, text: String) -> Outcome {
    Outcome { envelope: json!({"input": input, "parameters": parameters, "result": result}), text, code: 0 }
}

fn report_text(report: &CheckReport) -> String {
    let instance = serde_json::to_string(&report.instance).expect("instance serializes");
    let mut line = format!("{}  {}  {}", if report.passed() { "PASS" } else { "FAIL" }, report.name, instance);
    if let Some(seed) = report.seed {
        line.push_str(&format!("  seed={seed}"));
    }
    if let Some(w) = &report.witness {
        let names = default_names(w.exponent.dimension());
        line.push_str(&format!(
            "\n      witness {} in {} but not in {} [{}]",
            monomial(&w.exponent, &names),
            ideal_text(&w.subset, &names),
            ideal_text(&w.superset, &names),
            w.step
        ));
    }
    for (key, value) in &report.details {
        if key != "failed_instance" {
            line.push_str(&format!("\n      {key}: {value}"));
        }
    }
    line
}

fn reports_outcome(input: Value, parameters: Value, reports: Vec<CheckReport>) -> Outcome {
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut text: Vec<String> = reports.iter().map(report_text).collect();
    text.push(format!("{} checks, {} failed", reports.len(), failed));
    let result = json!({
        "passed": reports.len() - failed,
        "failed": failed,
        "reports": reports,
    });
    let mut out = outcome(input, parameters, result, text.join("\n"));
    out.code = if failed == 0 { 0 } else { 1 };
    out
}

fn load(path: &Path, limits: &Limits) -> Result<IdealSpec> {
    let spec = IdealSpec::load(path)?;
    let d = spec.ideal.dimension();
    if d > limits.dimension_cap {
        bail!("dimension {d} exceeds the cap {} (set MI_DIM_CAP to raise it)", limits.dimension_cap);
    }
    Ok(spec)
}

fn same_dimension(a: &IdealSpec, b: &IdealSpec) -> Result<()> {
    if a.ideal.dimension() != b.ideal.dimension() {
        bail!("the ideals live in different dimensions ({} and {})", a.ideal.dimension(), b.ideal.dimension());
    }
    Ok(())
}

pub fn execute(command: &Command, limits: &Limits) -> Result<Outcome> {
    match command {
        Command::Newton { ideal, svg: svg_path } => {
            let spec = load(ideal, limits)?;
            if svg_path.is_some() && spec.ideal.dimension() != 2 {
                bail!("SVG only for d = 2 (this ideal has d = {})", spec.ideal.dimension());
            }
            let polyhedron = newton_polyhedron_with(&spec.ideal, limits)?;
            if let Some(path) = svg_path {
                let picture = svg::render(&spec.ideal, &polyhedron, &spec.names()).expect("planar polyhedron");
                std::fs::write(path, picture).with_context(|| format!("cannot write {}", path.display()))?;
            }
            let names = spec.names();
            let facets: Vec<Value> = polyhedron
                .facets()
                .iter()
                .map(|f| json!({"normal": f.normal().iter().map(|v| v.to_string().parse::<i64>().map(Value::from).unwrap_or_else(|_| Value::String(v.to_string()))).collect::<Vec<_>>(), "offset": r(f.offset())}))
                .collect();
            let vertices: Vec<Value> =
                polyhedron.vertices().iter().map(|v| Value::Array(v.iter().map(r).collect())).collect();
            let mut text = Vec::new();
            for f in polyhedron.facets() {
                let terms: Vec<String> = f
                    .normal()
                    .iter()
                    .zip(&names)
                    .filter(|(v, _)| **v != 0.into())
                    .map(|(v, n)| if *v == 1.into() { n.clone() } else { format!("{v}*{n}") })
                    .collect();
                text.push(format!("{} >= {}", terms.join(" + "), format_rational(f.offset())));
            }
            Ok(outcome(spec_json(&spec), json!({}), json!({"facets": facets, "vertices": vertices}), text.join("\n")))
        }
        Command::Mi { ideal, c } => {
            let spec = load(ideal, limits)?;
            let j = multiplier_ideal_with(&spec.ideal, c, limits)?;
            Ok(outcome(spec_json(&spec), json!({"c": r(c)}), generators(&j), ideal_text(&j, &spec.names())))
        }
        Command::MixedMi { a, b, c, e } => {
            let (sa, sb) = (load(a, limits)?, load(b, limits)?);
            same_dimension(&sa, &sb)?;
            let j = mixed_multiplier_ideal_with(&sa.ideal, c, &sb.ideal, e, limits)?;
            Ok(outcome(
                json!({"a": spec_json(&sa), "b": spec_json(&sb)}),
                json!({"c": r(c), "e": r(e)}),
                generators(&j),
                ideal_text(&j, &sa.names()),
            ))
        }
        Command::Lct { ideal } => {
            let spec = load(ideal, limits)?;
            let polyhedron = newton_polyhedron_with(&spec.ideal, limits)?;
            let zero = ExponentVector::zero(spec.ideal.dimension());
            let value = multiplier_core::howald::polyhedron_entry_threshold(&polyhedron, &zero)
                .ok_or(multiplier_core::Error::UnitIdeal)?;
            Ok(outcome(spec_json(&spec), json!({}), r(&value), format_rational(&value)))
        }
        Command::Jumps { ideal, bound } => {
            let spec = load(ideal, limits)?;
            let sequence = jumping_numbers_with(&spec.ideal, bound, limits)?;
            let names = spec.names();
            let text: Vec<String> = sequence
                .jumps
                .iter()
                .map(|j| format!("{:>8}  {}", format_rational(&j.coefficient), ideal_text(&j.ideal_after, &names)))
                .collect();
            Ok(outcome(
                spec_json(&spec),
                json!({"T": r(bound)}),
                Value::Array(sequence.jumps.iter().map(|j| r(&j.coefficient)).collect()),
                text.join("\n"),
            ))
        }
        Command::SymbolicPower { ideal, m } => {
            let spec = load(ideal, limits)?;
            let q = analyze_with(&spec.ideal, limits)?;
            let power = symbolic_power(&q, *m)?;
            Ok(outcome(spec_json(&spec), json!({"m": m}), generators(&power), ideal_text(&power, &spec.names())))
        }
        Command::ResLct { data, bound } => {
            let datum = load_resolution(data)?;
            let value = lct_from_resolution(&datum);
            let mut text = format_rational(&value);
            let (parameters, result) = match bound {
                None => (json!({}), r(&value)),
                Some(t) => {
                    let candidates = candidate_jumping_numbers(&datum, t)?;
                    let listed: Vec<String> = candidates.iter().map(format_rational).collect();
                    text.push_str(&format!("\ncandidates: {}", listed.join(", ")));
                    (json!({"T": r(t)}), json!({"lct": r(&value), "candidates": listed}))
                }
            };
            Ok(outcome(datum_json(&datum), parameters, result, text))
        }
        Command::Classify { data, c } => {
            let datum = load_resolution(data)?;
            let class = classify(&datum, c)?;
            Ok(outcome(datum_json(&datum), json!({"c": r(c)}), json!(class.as_str()), class.as_str().to_string()))
        }
        Command::Snc { coefficients } => {
            let divisor = SncDivisor::new(coefficients.clone())?;
            let rounded: Vec<String> = snc_multiplier_coefficients(&divisor).iter().map(|v| v.to_string()).collect();
            let terms: Vec<String> = rounded.iter().enumerate().map(|(i, a)| format!("{a}*D{}", i + 1)).collect();
            Ok(outcome(
                json!({"coefficients": coefficients.iter().map(r).collect::<Vec<_>>()}),
                json!({}),
                json!(rounded),
                format!("J(D) = O(-({}))", terms.join(" + ")),
            ))
        }
        Command::Check { check } => execute_check(check, limits),
        Command::SymbolicCheck(args) => execute_check(&Check::Symbolic(args.clone()), limits),
        Command::GradedChain(args) => execute_check(&Check::GradedChain(args.clone()), limits),
    }
}

fn execute_check(check: &Check, limits: &Limits) -> Result<Outcome> {
    match check {
        Check::Skoda { ideal, m, b, c } => {
            let a = load(ideal, limits)?;
            let b = match b {
                Some(path) => {
                    let b = load(path, limits)?;
                    same_dimension(&a, &b)?;
                    b.ideal
                }
                None => MonomialIdeal::unit(a.ideal.dimension())?,
            };
            let report = check_skoda(&a.ideal, *m, &b, c, limits)?;
            Ok(reports_outcome(spec_json(&a), json!({"m": m, "c": r(c)}), vec![report]))
        }
        Check::Subadd { a, b, c, e } => {
            let (sa, sb) = (load(a, limits)?, load(b, limits)?);
            same_dimension(&sa, &sb)?;
            let report = check_subadditivity(&sa.ideal, c, &sb.ideal, e, limits)?;
            Ok(reports_outcome(
                json!({"a": spec_json(&sa), "b": spec_json(&sb)}),
                json!({"c": r(c), "e": r(e)}),
                vec![report],
            ))
        }
        Check::Restrict { ideal, k, c } => {
            let spec = load(ideal, limits)?;
            let d = spec.ideal.dimension();
            let reports = match k {
                Some(k) => {
                    if *k == 0 || *k > d {
                        bail!("-k must be between 1 and {d}");
                    }
                    vec![check_restriction(&spec.ideal, k - 1, c, limits)?]
                }
                None => {
                    let admissible: Vec<usize> =
                        (0..d).filter(|&i| spec.ideal.restrict_to_hyperplane(i).is_ok()).collect();
                    if admissible.is_empty() {
                        bail!("no coordinate hyperplane restricts this ideal to a nonzero ideal");
                    }
                    admissible
                        .into_iter()
                        .map(|i| check_restriction(&spec.ideal, i, c, limits))
                        .collect::<multiplier_core::Result<Vec<_>>>()?
                }
            };
            Ok(reports_outcome(spec_json(&spec), json!({"k": k, "c": r(c)}), reports))
        }
        Check::Mustata { ideal, bound } => {
            let spec = load(ideal, limits)?;
            let report = check_mustata_chain(&spec.ideal, bound, limits)?;
            Ok(reports_outcome(spec_json(&spec), json!({"T": r(bound)}), vec![report]))
        }
        Check::Nullstellensatz { ideal } => {
            let spec = load(ideal, limits)?;
            let (_, report) = nullstellensatz_sigma(&spec.ideal, limits)?;
            Ok(reports_outcome(spec_json(&spec), json!({}), vec![report]))
        }
        Check::Symbolic(SymbolicArgs { ideal, m }) => {
            let spec = load(ideal, limits)?;
            let q = analyze_with(&spec.ideal, limits)?;
            let report = check_symbolic_containment(&q, *m)?;
            Ok(reports_outcome(spec_json(&spec), json!({"m": m}), vec![report]))
        }
        Check::GradedChain(GradedArgs { ideal, l, m }) => {
            let spec = load(ideal, limits)?;
            let q = analyze_with(&spec.ideal, limits)?;
            let report = check_graded_chain(&q, *l, *m)?;
            Ok(reports_outcome(spec_json(&spec), json!({"l": l, "m": m}), vec![report]))
        }
        Check::Injected { ideal, c } => {
            let spec = load(ideal, limits)?;
            let j = multiplier_ideal_with(&spec.ideal, c, limits)?;
            let d = j.dimension();
            let mut kept = j.generators().to_vec();
            let dropped = kept.remove(0);
            kept.extend(
                (0..d)
                    .map(|i| dropped.checked_add(&ExponentVector::unit(d, i)))
                    .collect::<multiplier_core::Result<Vec<_>>>()?,
            );
            let damaged = MonomialIdeal::minimalize(d, kept)?;
            let report = evaluate(
                "injected",
                json!({"a": spec_json(&spec), "c": r(c)}),
                Some(c),
                [Containment::new("J(a^c) ⊆ J(a^c) minus one generator", j, damaged)],
            )?;
            Ok(reports_outcome(spec_json(&spec), json!({"c": r(c)}), vec![report]))
        }
        Check::Campaign { seed, count } => {
            let reports = campaign(*seed, *count, limits)?;
            Ok(reports_outcome(json!(null), json!({"seed": seed, "count": count}), reports))
        }
    }
}

/// Indented JSON whose object-free arrays stay on one line, plus a newline.
/// This is the byte form used for golden files.
pub fn render_json(value: &Value) -> String {
    let mut out = String::new();
    write_json(value, 0, &mut out);
    out.push('\n');
    out
}

fn has_object(value: &Value) -> bool {
    match value {
        Value::Object(_) => true,
        Value::Array(items) => items.iter().any(has_object),
        _ => false,
    }
}

fn write_json(value: &Value, depth: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match value {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (key, item)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&serde_json::to_string(key).expect("key serializes"));
                out.push_str(": ");
                write_json(item, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(items) if has_object(value) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_json(item, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        other => out.push_str(&serde_json::to_string(other).expect("json serializes")),
    }
}

/// Parses, runs and prints; returns the process exit code (0, 1 or 2).
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { 2 } else { 0 };
        }
    };
    let limits = Limits::from_env();
    let result = std::panic::catch_unwind(|| execute(&cli.command, &limits));
    let outcome = match result {
        Ok(Ok(outcome)) => outcome,
        Ok(Err(err)) => {
            eprintln!("error: {err:#}");
            return 2;
        }
        Err(_) => {
            eprintln!("error: internal failure");
            return 2;
        }
    };
    if let Some(path) = &cli.json {
        if let Err(err) = std::fs::write(path, render_json(&outcome.envelope)) {
            eprintln!("error: cannot write {}: {err}", path.display());
            return 2;
        }
    }
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let written = match cli.format {
        Format::Text => writeln!(lock, "{}", outcome.text),
        Format::Json => write!(lock, "{}", render_json(&outcome.envelope)),
    };
    if written.is_err() {
        return 2;
    }
    outcome.code
}
