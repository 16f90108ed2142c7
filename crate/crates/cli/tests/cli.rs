use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_quasischur");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("QUASISCHUR_MAX_N").output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .env_remove("QUASISCHUR_MAX_N")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn straighten_examples() {
    for (gamma, expected) in [("1,2", "0"), ("1,3", "-s[2,2]"), ("3,1", "+s[3,1]"), ("0,0,2", "0"), ("0,2", "-s[1,1]")]
    {
        let o = run(&["straighten", gamma]);
        assert_eq!(o.status.code(), Some(0), "{gamma}");
        assert_eq!(stdout(&o).trim(), expected, "{gamma}");
    }
    let o = run(&["straighten", "1,3", "--json"]);
    assert_eq!(json(&o), serde_json::json!({"sign": -1, "shape": [2, 2]}));
    let o = run(&["straighten", "1,2", "--json"]);
    assert_eq!(json(&o), serde_json::json!({"zero": true}));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["straighten", "1,x"][..],
        &["straighten", "1,-3"],
        &["hll", "2,3"],
        &["hll", "1,0"],
        &["verify-involution", "2,0,1"],
        &["fundamental", "a"],
        &["bogus"],
        &[],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn toschur_examples() {
    let o = run_stdin(
        &["toschur"],
        r#"{"basis":"F","degree":3,"terms":[{"index":[2,1],"coeff":[[0,0,1]]},{"index":[1,2],"coeff":[[0,0,1]]}]}"#,
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"basis":"s","degree":3,"terms":[{"index":[2,1],"coeff":[[0,0,1]]}]}"#);

    let o = run_stdin(&["toschur", "-"], r#"{"basis":"F","degree":2,"terms":[{"index":[2],"coeff":[[0,0,1]]}]}"#);
    assert_eq!(stdout(&o).trim(), r#"{"basis":"s","degree":2,"terms":[{"index":[2],"coeff":[[0,0,1]]}]}"#);

    let o = run_stdin(&["toschur", "--verify-symmetric"], r#"{"basis":"F","degree":3,"terms":[]}"#);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"basis":"s","degree":3,"terms":[]}"#);
}

#[test]
fn toschur_from_file() {
    let dir = std::env::temp_dir().join(format!("quasischur-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f.json");
    std::fs::write(&path, r#"{"basis":"F","degree":2,"terms":[{"index":[1,1],"coeff":[[0,1,1]]}]}"#).unwrap();
    let o = run(&["toschur", path.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), r#"{"basis":"s","degree":2,"terms":[{"index":[1,1],"coeff":[[0,1,1]]}]}"#);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn toschur_failures() {
    let o = run_stdin(
        &["toschur", "--verify-symmetric"],
        r#"{"basis":"F","degree":3,"terms":[{"index":[2,1],"coeff":[[0,0,1]]}]}"#,
    );
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("x1 and x2"), "{err}");

    for bad in [
        "{",
        r#"{"basis":"s","degree":1,"terms":[]}"#,
        r#"{"basis":"F","degree":2,"terms":[{"index":[3],"coeff":[[0,0,1]]}]}"#,
    ] {
        assert_eq!(run_stdin(&["toschur"], bad).status.code(), Some(2), "{bad}");
    }
}

#[test]
fn fundamental_then_fexpand_round_trip() {
    let poly = run(&["fundamental", "1,2,1", "--vars", "5"]);
    assert_eq!(poly.status.code(), Some(0));
    let o = run_stdin(&["fexpand"], &stdout(&poly));
    assert_eq!(stdout(&o).trim(), r#"{"basis":"F","degree":4,"terms":[{"index":[1,2,1],"coeff":[[0,0,1]]}]}"#);

    let o = run_stdin(&["fexpand"], r#"{"vars":2,"terms":[{"exps":[1,0],"coeff":[[0,0,1]]}]}"#);
    assert_eq!(o.status.code(), Some(3));
    let o = run_stdin(&["fexpand"], r#"{"vars":2,"terms":[{"exps":[1],"coeff":[[0,0,1]]}]}"#);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_involution_examples() {
    for alpha in ["2,1", "4", "1,1,1", "2,3,3"] {
        let o = run(&["verify-involution", alpha]);
        assert_eq!(o.status.code(), Some(0), "{alpha}");
        let v = json(&o);
        assert_eq!(v["passed"], true);
        assert_eq!(v["fixed_points"], 1);
    }
    let o = run(&["verify-involution", "2,3,3", "--probe", "1,1,2,2,2,3,5,5"]);
    let v = json(&o);
    assert_eq!(v["probe"]["s"], 2);
    assert_eq!(v["probe"]["r"], 3);
    assert_eq!(v["probe"]["outcome"]["step"]["before"], serde_json::json!([0, 2]));
    assert_eq!(v["probe"]["outcome"]["step"]["after"], serde_json::json!([1, 1]));
    assert_eq!(v["probe"]["outcome"]["image"], serde_json::json!([1, 1, 2, 2, 2, 3, 4, 5]));

    let o = run(&["verify-involution", "2,3,3", "--probe", "1,2,2,2,3,3,5,5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify-involution", "4,3,3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bound"));
}

#[test]
fn verify_involution_text() {
    let o = run(&["verify-involution", "2,1", "--text"]);
    let text = stdout(&o);
    assert!(text.starts_with("alpha (2,1): PASS"), "{text}");
    assert_eq!(text.matches(": ok").count(), 4);
}

#[test]
fn hll_examples() {
    let o = run(&["hll", "1,1"]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"basis":"s","degree":2,"terms":[{"index":[1,1],"coeff":[[0,1,1]]},{"index":[2],"coeff":[[0,0,1]]}]}"#
    );
    let o = run(&["hll", "2"]);
    assert_eq!(stdout(&o).trim(), r#"{"basis":"s","degree":2,"terms":[{"index":[2],"coeff":[[0,0,1]]}]}"#);
    let o = run(&["hll", "1,1", "--text"]);
    assert_eq!(stdout(&o).trim(), "(t)*s[1,1] + s[2]");
}

#[test]
fn hll_experiment() {
    let o = run(&["hll", "3,3,3", "--experiment"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["fillings"], 1680);
    assert_eq!(v["discrepancy"].as_array().unwrap().len(), 1);
    for key in ["mu", "zero", "minus", "plus", "kept", "conjectured", "true"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let v = json(&run(&["hll", "2,2", "--experiment"]));
    assert_eq!(v["discrepancy"], serde_json::json!([]));
}

#[test]
fn bound_flag_and_environment() {
    assert_eq!(run(&["hll", "3,3,3", "--max-n", "8"]).status.code(), Some(2));
    assert_eq!(run(&["hll", "5,5"]).status.code(), Some(2));
    let o = Command::new(BIN).args(["hll", "3,3,3"]).env("QUASISCHUR_MAX_N", "8").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(BIN).args(["hll", "2,2,2,2,2"]).env("QUASISCHUR_MAX_N", "10").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["positivity", "10"]).status.code(), Some(2));
}

#[test]
fn positivity_report() {
    let o = run(&["positivity", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 5);
    for r in records {
        assert_eq!(r["positive"], true);
        assert_eq!(r["census_ok"], true);
    }
}
