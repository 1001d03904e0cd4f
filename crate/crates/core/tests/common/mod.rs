//! Shared helpers for integration tests.
#![allow(dead_code)]

use std::path::{Path, PathBuf};

use qcat::cli::{run, Outcome};

pub fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn corpus_path(name: &str) -> String {
    manifest_dir().join("corpus").join(name).to_string_lossy().into_owned()
}

pub const CORPUS: [&str; 14] = [
    "free1.qa",
    "free2.qa",
    "sym2.qa",
    "sym3.qa",
    "ext2.qa",
    "ext3.qa",
    "unit_black.qa",
    "embed2.qa",
    "embed3.qa",
    "gf7_0.qa",
    "gf7_1.qa",
    "gf7_2.qa",
    "gf7_3.qa",
    "nonkoszul_gf2.qa",
];

/// Every golden invocation, with corpus files named relative to `corpus/`.
pub fn golden_invocations() -> Vec<Vec<String>> {
    let mut out: Vec<Vec<&str>> = Vec::new();
    for f in CORPUS {
        out.push(vec!["dual", f]);
        out.push(vec!["hilbert", "--max", "6", f]);
        out.push(vec!["koszul", "--max", "6", f]);
        out.push(vec!["ext", "--max", "4", f]);
        out.push(vec!["selfdual-check", f]);
        out.push(vec!["--format", "structured", "koszul", "--max", "4", f]);
    }
    for (a, b) in [
        ("sym2.qa", "ext2.qa"),
        ("sym2.qa", "free1.qa"),
        ("embed2.qa", "unit_black.qa"),
        ("gf7_0.qa", "gf7_1.qa"),
    ] {
        out.push(vec!["product", "--kind", "black", a, b]);
        out.push(vec!["product", "--kind", "white", a, b]);
        out.push(vec!["--format", "structured", "product", "--kind", "white", a, b]);
    }
    out.push(vec!["hom", "sym2.qa", "sym2.qa"]);
    out.push(vec!["hom", "ext2.qa", "free2.qa"]);
    out.push(vec!["selfdual-check", "sym2.qa", "ext2.qa"]);
    out.push(vec!["laws", "--suite", "all", "--trials", "3", "--seed", "7", "sym2.qa", "ext2.qa", "free1.qa"]);
    out.push(vec!["laws", "--suite", "rigid", "--trials", "2", "--seed", "1", "embed2.qa", "embed3.qa"]);
    out.push(vec![
        "--format", "structured", "laws", "--suite", "axioms", "--trials", "2", "--seed", "3", "gf7_0.qa", "gf7_1.qa",
    ]);
    out.push(vec!["--format", "structured", "ext", "--max", "4", "sym2.qa"]);
    out.push(vec!["--format", "structured", "hilbert", "--max", "4", "nonkoszul_gf2.qa"]);
    out.into_iter().map(|v| v.into_iter().map(String::from).collect()).collect()
}

fn resolve(args: &[String]) -> Vec<String> {
    args.iter()
        .map(|a| if a.ends_with(".qa") { corpus_path(a) } else { a.clone() })
        .collect()
}

pub fn run_invocation(args: &[String], stdin: &str) -> Outcome {
    let mut input = stdin.as_bytes();
    let argv = std::iter::once("qcat".to_string()).chain(resolve(args));
    run(argv, &mut input)
}

pub fn golden_name(args: &[String]) -> String {
    let joined = args
        .iter()
        .map(|a| a.trim_start_matches("--").trim_end_matches(".qa"))
        .collect::<Vec<_>>()
        .join("_");
    format!("{joined}.txt")
}

pub fn golden_path(args: &[String]) -> PathBuf {
    manifest_dir().join("tests").join("golden").join(golden_name(args))
}

/// Golden text: stdout followed by the exit status.
pub fn render(outcome: &Outcome) -> String {
    format!("{}--- exit {}\n", outcome.stdout, outcome.code)
}

/// Compares every invocation against its golden file, rewriting the files
/// when `QCAT_BLESS` is set. Returns the mismatching file names.
pub fn check_goldens() -> Vec<String> {
    let bless = std::env::var_os("QCAT_BLESS").is_some();
    let mut mismatches = Vec::new();
    for args in golden_invocations() {
        let text = render(&run_invocation(&args, ""));
        let path = golden_path(&args);
        if bless {
            std::fs::write(&path, &text).expect("write golden");
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == text => {}
            _ => mismatches.push(golden_name(&args)),
        }
    }
    mismatches
}
