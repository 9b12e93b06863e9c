//! Acceptance suite for the command-line tool: golden-file tests over
//! the bundled fixtures, asserting byte-identical output and the
//! documented exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn bwfa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bwfa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (String, String, i32) {
    let output = bwfa(args);
    (
        String::from_utf8(output.stdout).expect("utf-8 stdout"),
        String::from_utf8(output.stderr).expect("utf-8 stderr"),
        output.status.code().expect("exit code"),
    )
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn temp_file(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bwfa-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn eval_golden() {
    let a1 = fixture("a1_x2.json");
    let (out, _, code) = run(&["eval", path(&a1), "a"]);
    assert_eq!(out, "2\n");
    assert_eq!(code, 0);

    let (out, _, code) = run(&["eval", path(&a1), ""]);
    assert_eq!(out, "0\n");
    assert_eq!(code, 0);

    let (out, _, code) = run(&["eval", path(&a1), "aa"]);
    assert_eq!(out, "0\n");
    assert_eq!(code, 0);

    let root = fixture("root_x.json");
    let (out, _, code) = run(&["eval", path(&root), "a"]);
    assert_eq!(out, "X^(1/2)\n");
    assert_eq!(code, 0);
}

#[test]
fn eval_unknown_symbol_exits_3() {
    let a1 = fixture("a1_x2.json");
    let (out, err, code) = run(&["eval", path(&a1), "c"]);
    assert_eq!(out, "");
    assert!(err.contains("unknown symbol"));
    assert_eq!(code, 3);
}

#[test]
fn minimize_golden() {
    let sum = fixture("a1_sum.json");
    let out_path = temp_file("minimized_sum.json");
    let (out, _, code) = run(&[
        "minimize",
        path(&sum),
        "--mode",
        "full",
        "--out",
        path(&out_path),
    ]);
    assert_eq!(out, "4 -> 2\n");
    assert_eq!(code, 0);
    let written = std::fs::read_to_string(&out_path).unwrap();
    let expected = r#"{
  "ring": "int",
  "alphabet": [
    "a"
  ],
  "dim": 2,
  "lambda": [
    "4",
    "0"
  ],
  "mu": {
    "a": [
      [
        "0",
        "1"
      ],
      [
        "0",
        "0"
      ]
    ]
  },
  "gamma": [
    "0",
    "1"
  ]
}
"#;
    assert_eq!(written, expected);
    // the reduced document is a valid input realizing the same series
    let (out, _, code) = run(&["eval", path(&out_path), "a"]);
    assert_eq!(out, "4\n");
    assert_eq!(code, 0);
}

#[test]
fn minimize_already_minimal_and_zero_dim() {
    let a2 = fixture("a2_x2.json");
    let out_path = temp_file("minimized_a2.json");
    let (out, _, code) = run(&["minimize", path(&a2), "--out", path(&out_path)]);
    assert_eq!(out, "2 -> 2\n");
    assert_eq!(code, 0);

    let zero = fixture("zero_dim.json");
    let out_path = temp_file("minimized_zero.json");
    let (out, _, code) = run(&["minimize", path(&zero), "--out", path(&out_path)]);
    assert_eq!(out, "0 -> 0\n");
    assert_eq!(code, 0);
}

#[test]
fn minimize_modes_and_determinism() {
    let sum = fixture("a1_sum.json");
    for mode in ["left", "right", "full"] {
        let first = bwfa(&["minimize", path(&sum), "--mode", mode]);
        let second = bwfa(&["minimize", path(&sum), "--mode", mode]);
        assert_eq!(first.stdout, second.stdout, "mode {mode} must be deterministic");
        assert_eq!(first.status.code(), Some(0));
    }
    // left reduction alone already collapses the duplicated series
    let (out, _, _) = run(&["minimize", path(&sum), "--mode", "left"]);
    assert!(out.starts_with("4 -> 2\n"), "got {out:?}");
}

#[test]
fn equiv_golden() {
    let a1 = fixture("a1_x2.json");
    let a2 = fixture("a2_x2.json");
    let (out, _, code) = run(&["equiv", path(&a1), path(&a2)]);
    assert_eq!(out, "equivalent\n");
    assert_eq!(code, 0);

    let (out, _, code) = run(&["equiv", path(&a1), path(&a1)]);
    assert_eq!(out, "equivalent\n");
    assert_eq!(code, 0);

    let a3 = fixture("a1_x3.json");
    let (out, _, code) = run(&["equiv", path(&a1), path(&a3)]);
    assert_eq!(out, "different\nwitness: \"a\"\n");
    assert_eq!(code, 1);
}

#[test]
fn iso_golden() {
    let a1 = fixture("a1_x2.json");
    let a2 = fixture("a2_x2.json");
    let (out, _, code) = run(&["iso", path(&a1), path(&a2)]);
    assert_eq!(
        out,
        "not isomorphic over K (conjugator requires fractions)\nconjugator:\n[2, 0]\n[0, 1]\n"
    );
    assert_eq!(code, 1);

    let (out, _, code) = run(&["iso", path(&a1), path(&a1)]);
    assert_eq!(out, "isomorphic over K\nconjugator:\n[1, 0]\n[0, 1]\n");
    assert_eq!(code, 0);

    let (out, _, code) = run(&["iso", path(&a1), path(&a3_not_equivalent())]);
    assert_eq!(out, "not isomorphic over K (not equivalent)\n");
    assert_eq!(code, 1);

    // conjugating by a permutation keeps the automata isomorphic
    let swapped = fixture("a1_x2_swapped.json");
    let (out, _, code) = run(&["iso", path(&a1), path(&swapped)]);
    assert_eq!(out, "isomorphic over K\nconjugator:\n[0, 1]\n[1, 0]\n");
    assert_eq!(code, 0);

    // two zero-dimensional automata are trivially isomorphic
    let zero = fixture("zero_dim.json");
    let (out, _, code) = run(&["iso", path(&zero), path(&zero)]);
    assert_eq!(out, "isomorphic over K\nconjugator:\n");
    assert_eq!(code, 0);
}

fn a3_not_equivalent() -> PathBuf {
    fixture("a1_x3.json")
}

#[test]
fn iso_rejects_non_minimal_inputs() {
    let sum = fixture("a1_sum.json");
    let (out, err, code) = run(&["iso", path(&sum), path(&sum)]);
    assert_eq!(out, "");
    assert!(err.contains("not minimal over the fraction field"));
    assert_eq!(code, 5);
}

#[test]
fn hadamard_golden() {
    let a1 = fixture("a1_x2.json");
    let a3 = fixture("a1_x3.json");
    let out_path = temp_file("hadamard.json");
    let (out, _, code) = run(&["hadamard", path(&a1), path(&a3), "--out", path(&out_path)]);
    assert_eq!(out, "");
    assert_eq!(code, 0);
    let (out, _, code) = run(&["eval", path(&out_path), "a"]);
    assert_eq!(out, "6\n");
    assert_eq!(code, 0);
    let (out, _, code) = run(&["eval", path(&out_path), "aa"]);
    assert_eq!(out, "0\n");
    assert_eq!(code, 0);
}

#[test]
fn info_golden() {
    let a1 = fixture("a1_x2.json");
    let (out, _, code) = run(&["info", path(&a1)]);
    assert_eq!(
        out,
        "ring: int\nalphabet: a\ndim: 2\nprefix set size: 2\nfractional subset size: 0\n\
         prefix set: \"\" \"a\"\nfractional subset:\n"
    );
    assert_eq!(code, 0);

    let two = fixture("two_letter.json");
    let (out, _, code) = run(&["info", path(&two)]);
    assert_eq!(
        out,
        "ring: int\nalphabet: a b\ndim: 2\nprefix set size: 3\nfractional subset size: 1\n\
         prefix set: \"\" \"a\" \"b\"\nfractional subset: \"b\"\n"
    );
    assert_eq!(code, 0);
}

#[test]
fn parse_errors_exit_2() {
    let (out, err, code) = run(&["eval", path(&fixture("malformed.json")), "a"]);
    assert_eq!(out, "");
    assert!(err.contains("document syntax"));
    assert_eq!(code, 2);

    let (_, _, code) = run(&["eval", "does-not-exist.json", "a"]);
    assert_eq!(code, 2);
}

#[test]
fn budget_exhaustion_exits_4() {
    let a1 = fixture("a1_x2.json");
    let (out, err, code) = run(&["info", path(&a1), "--max-steps", "1"]);
    assert_eq!(out, "");
    assert!(err.contains("step budget"));
    assert_eq!(code, 4);
}

#[test]
fn ring_check_enforces_canonical_scalars() {
    let nc = fixture("noncanonical.json");
    let (out, _, code) = run(&["eval", path(&nc), "a"]);
    assert_eq!(out, "1\n");
    assert_eq!(code, 0);
    let (_, err, code) = run(&["eval", path(&nc), "a", "--ring-check"]);
    assert!(err.contains("canonical"));
    assert_eq!(code, 2);
}

#[test]
fn ring_mismatch_exits_5() {
    let a1 = fixture("a1_x2.json");
    let root = fixture("root_x.json");
    let (_, err, code) = run(&["equiv", path(&a1), path(&root)]);
    assert!(err.contains("ring mismatch"));
    assert_eq!(code, 5);
}

#[test]
fn fractional_power_pipeline_via_cli() {
    let root = fixture("root_x.json");
    let out_path = temp_file("minimized_root.json");
    let (out, _, code) = run(&["minimize", path(&root), "--out", path(&out_path)]);
    assert_eq!(out, "2 -> 2\n");
    assert_eq!(code, 0);
    let (out, _, code) = run(&["eval", path(&out_path), "a"]);
    assert_eq!(out, "X^(1/2)\n");
    assert_eq!(code, 0);
}
