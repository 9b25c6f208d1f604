#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixture(name: &str) -> PathBuf {
    crate_dir().join("tests/fixtures").join(name)
}

/// Runs `mi` from the crate directory so relative fixture paths resolve.
pub fn mi(args: &[&str]) -> Output {
    mi_with_env(args, &[])
}

pub fn mi_with_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut command = Command::new(env!("CARGO_BIN_EXE_mi"));
    command.current_dir(crate_dir()).args(args).env_remove("MI_DIM_CAP");
    for (key, value) in env {
        command.env(key, value);
    }
    command.output().expect("mi runs")
}

pub fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

/// Golden cases: file stem and the `mi` arguments producing it.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("mi_staircase_c1", &["mi", "tests/fixtures/staircase.json", "-c", "1", "--format", "json"]),
    ("mi_staircase_c9_10", &["mi", "tests/fixtures/staircase.json", "-c", "9/10", "--format", "json"]),
    ("mi_diag23_c5_6", &["mi", "tests/fixtures/diag23.json", "-c", "5/6", "--format", "json"]),
    ("mi_diag23_c4_5", &["mi", "tests/fixtures/diag23.json", "-c", "4/5", "--format", "json"]),
    ("mi_m2_c3", &["mi", "tests/fixtures/m2.json", "-c", "3", "--format", "json"]),
    ("mi_m3_c4", &["mi", "tests/fixtures/m3.json", "-c", "4", "--format", "json"]),
    ("newton_diag234", &["newton", "tests/fixtures/diag234.json", "--format", "json"]),
    ("lct_diag23", &["lct", "tests/fixtures/diag23.json", "--format", "json"]),
    ("lct_diag234", &["lct", "tests/fixtures/diag234.json", "--format", "json"]),
    ("jumps_m2_T4", &["jumps", "tests/fixtures/m2.json", "-T", "4", "--format", "json"]),
    ("jumps_m3_T5", &["jumps", "tests/fixtures/m3.json", "-T", "5", "--format", "json"]),
    ("res_lct_cusp", &["res-lct", "tests/fixtures/cusp_resolution.json", "--format", "json"]),
    ("lct_cusp", &["lct", "tests/fixtures/cusp.json", "--format", "json"]),
    ("symbolic_power_triangle_m2", &["symbolic-power", "tests/fixtures/triangle.json", "-m", "2", "--format", "json"]),
    (
        "check_symbolic_triangle_m2",
        &["check", "symbolic", "tests/fixtures/triangle.json", "-m", "2", "--format", "json"],
    ),
];

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{name}.json"))
}

/// Compares every golden case byte for byte; returns the mismatching names.
/// With `MI_UPDATE_GOLDEN` set the files are rewritten instead.
pub fn golden_mismatches() -> Vec<String> {
    let update = std::env::var_os("MI_UPDATE_GOLDEN").is_some();
    let mut bad = Vec::new();
    for (name, args) in GOLDEN {
        let output = mi(args);
        if output.status.code() != Some(0) {
            bad.push(format!("{name}: exit {:?}", output.status.code()));
            continue;
        }
        let path = golden_path(name);
        if update {
            std::fs::write(&path, &output.stdout).expect("golden file writable");
            continue;
        }
        match std::fs::read(&path) {
            Ok(expected) if expected == output.stdout => {}
            Ok(_) => bad.push(format!("{name}: output differs from {}", path.display())),
            Err(err) => bad.push(format!("{name}: {err}")),
        }
    }
    bad
}

/// Number of `class="generator"` elements, after checking the SVG parses.
pub fn svg_generator_markers(text: &str) -> Result<usize, String> {
    let document = roxmltree::Document::parse(text).map_err(|e| e.to_string())?;
    if document.root_element().tag_name().name() != "svg" {
        return Err("root element is not <svg>".into());
    }
    Ok(document.descendants().filter(|n| n.attribute("class") == Some("generator")).count())
}
