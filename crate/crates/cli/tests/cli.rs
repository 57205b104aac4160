use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn normalize_prints_pbw_form() {
    let o = run(&["normalize", "--n", "3", "--ell", "2", "x2*x1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "x1*x2 - t1*g1");
    let o = run(&["normalize", "--n", "3", "--ell", "2", "0*x1"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn normalize_with_specialized_t() {
    let o = run(&[
        "normalize",
        "--n",
        "3",
        "--ell",
        "3",
        "--t",
        "2,0,zeta",
        "x2*x1 + x1*x3",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "x1*x2 + x1*x3 - 2*g1");
}

#[test]
fn theta_prints_laurent_form() {
    let o = run(&["theta", "--n", "3", "--ell", "3", "g1"]);
    assert_eq!(stdout(&o).trim(), "g1");
    let o = run(&["theta", "--n", "3", "--ell", "2", "--t", "0,0,0", "x1*x2"]);
    assert_eq!(stdout(&o).trim(), "y1*y2");
}

#[test]
fn nu_lists_coefficients() {
    let o = run(&["nu", "--ell", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1, -4, 2");
    assert_eq!(stdout(&run(&["nu", "--ell", "2"])).trim(), "1, -2");
}

#[test]
fn bad_input_exits_with_usage_error() {
    let o = run(&["normalize", "--n", "3", "--ell", "2", "x1^-1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("position 3"), "{err}");
    let o = run(&["normalize", "--n", "3", "--ell", "2", "y1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "--n", "2", "--ell", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_writes_json_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&[
        "verify",
        "--n",
        "3",
        "--ell",
        "2",
        "--seed",
        "5",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("PASS relation_f_zero"));
    assert!(out.contains("PASS sklyanin"));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["config"]["seed"], 5);
    assert_eq!(v["summary"]["failed"], 0);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] != "fail"));
}

#[test]
fn verify_specialized_zero() {
    let o = run(&[
        "verify",
        "--n",
        "4",
        "--ell",
        "2",
        "--t",
        "0,0,0,0",
        "--degree-bound",
        "4",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("SKIP sklyanin"));
}
