use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sameorder"))
        .args(args)
        .output()
        .expect("spawn sameorder")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn analyze_quaternion_8() {
    let out = run(&["analyze", "--name", "quaternion:8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("order: 8"), "{text}");
    assert!(text.contains("alpha: {1, 6}"), "{text}");
    assert!(text.contains("exponent: 4"), "{text}");
}

#[test]
fn analyze_cyclic_2() {
    let out = run(&["analyze", "--name", "cyclic:2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("alpha: {1}"));
}

#[test]
fn analyze_group_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.group");
    std::fs::write(&path, "# S3 on three points\nperm 3\n(1 2)\n(1 2 3)\n").unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("order: 6"), "{text}");
    assert!(text.contains("alpha: {1, 2, 3}"), "{text}");
}

#[test]
fn classify_emits_json_report() {
    let out = run(&["classify", "--name", "symmetric:4"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["order"], 24);
    assert_eq!(report["flags"]["two_frobenius"], true);
}

#[test]
fn subgroups_counts() {
    let out = run(&["subgroups", "--name", "quaternion:8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("subgroups: 6"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["analyze"]).status.code(), Some(1)); // no input at all
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["analyze", "--name", "nosuchfamily:3"]).status.code(), Some(1));
    assert_eq!(run(&["sweep", "--check", "nosuchcheck"]).status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn bound_exceeded_exits_3() {
    let out = run(&["analyze", "--name", "symmetric:8", "--max-elements", "1000"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn sweep_shen_exits_0() {
    let out = run(&["sweep", "--check", "shen", "--max-order", "60"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("check shen"));
}

#[test]
fn sweep_with_failures_exits_2_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    // thm31 over orders <= 10 hits the Z8/Z9/D4 counterexamples
    let out = run(&[
        "sweep",
        "--check",
        "thm31",
        "--max-order",
        "10",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2), "{}", stdout(&out));
    assert!(stdout(&out).contains("FINDING"));
    // summary still written on failure
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(!report["summary"]["findings"].as_array().unwrap().is_empty());
}

#[test]
fn catalog_list_is_deterministic() {
    let a = run(&["catalog", "list"]);
    let b = run(&["catalog", "list"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("Q8 8"));
}

#[test]
fn sweep_custom_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("catalog.json");
    std::fs::write(
        &manifest,
        r#"[
  {"id": "Z6", "constructor": "cyclic", "params": [6], "expected_order": 6, "tags": []},
  {"id": "Q8", "constructor": "quaternion", "params": [8], "expected_order": 8, "tags": []}
]"#,
    )
    .unwrap();
    let out = run(&[
        "sweep",
        "--catalog",
        manifest.to_str().unwrap(),
        "--check",
        "lemma21,shen",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("groups examined: 2"));
}
