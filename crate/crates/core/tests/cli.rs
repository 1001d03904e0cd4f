mod common;

use std::io::Write;
use std::process::{Command, Stdio};

use common::corpus_path;

fn qcat(args: &[&str], stdin: &str) -> (String, String, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qcat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn qcat");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn goldens_match() {
    let mismatches = common::check_goldens();
    assert!(mismatches.is_empty(), "{mismatches:?}");
}

#[test]
fn dual_pipe_round_trips() {
    for name in common::CORPUS {
        let path = corpus_path(name);
        let (once, _, code) = qcat(&["dual", &path], "");
        assert_eq!(code, 0);
        let (twice, _, code) = qcat(&["dual", "-"], &once);
        assert_eq!(code, 0);
        assert_eq!(twice, std::fs::read_to_string(&path).unwrap(), "{name}");
    }
}

#[test]
fn hilbert_of_sym2() {
    let (out, _, code) = qcat(&["hilbert", "--max", "4", &corpus_path("sym2.qa")], "");
    assert_eq!((out.as_str(), code), ("0: 1\n1: 2\n2: 3\n3: 4\n4: 5\n", 0));
}

#[test]
fn laws_reject_mixed_fields_and_repeat_bytewise() {
    let args = ["laws", "--suite", "duality", "--trials", "4", "--seed", "9", "sym2.qa", "gf7_0.qa"];
    let resolved: Vec<String> = args.iter().map(|a| if a.ends_with(".qa") { corpus_path(a) } else { a.to_string() }).collect();
    let refs: Vec<&str> = resolved.iter().map(String::as_str).collect();
    let (out, err, code) = qcat(&refs, "");
    // mixed fields are rejected
    assert_eq!(code, 2, "{out}{err}");
    assert!(err.contains("field mismatch"), "{err}");

    let args = ["laws", "--suite", "duality", "--trials", "4", "--seed", "9", &resolved[7], &resolved[7]];
    let a = qcat(&args, "");
    let b = qcat(&args, "");
    assert_eq!(a, b);
    assert_eq!(a.2, 0);
}

#[test]
fn exit_codes() {
    let (_, err, code) = qcat(&["koszul", "-"], "field Q\ngens x y\nrel x*y*x\n");
    assert_eq!(code, 2);
    assert!(err.contains("3:5") && err.contains("quadratic"), "{err}");

    let (out, _, code) = qcat(&["--format", "structured", "hilbert", "-"], "field GF 4\ngens x\n");
    assert_eq!(code, 2);
    assert!(out.starts_with("record=error kind=parse line=1"), "{out}");

    let (_, _, code) = qcat(&["bogus"], "");
    assert_eq!(code, 2);
    let (out, _, code) = qcat(&["--help"], "");
    assert_eq!(code, 0);
    assert!(out.contains("koszul"));
}

#[test]
fn rigid_laws_need_no_extra_objects() {
    let (out, _, code) = qcat(&["laws", "--suite", "rigid", "--trials", "2", &corpus_path("embed2.qa")], "");
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().any(|l| l.starts_with("PASS rank embed2")), "{out}");
}
