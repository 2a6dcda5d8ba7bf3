use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bernoulli-euler"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_all_plain() {
    let o = run(&[
        "eval",
        "--family",
        "bernoulli",
        "--n",
        "1",
        "--alpha",
        "1",
        "--x",
        "0",
        "--method",
        "all",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "closed: -1/2\ndet: -1/2\nseries: -1/2\nagreement: true\n"
    );
}

#[test]
fn eval_json_negative_arguments() {
    let o = run(&[
        "eval", "--family", "euler", "--n", "3", "--alpha", "-1/2", "--x", "-3/4", "--method",
        "all", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["alpha"], "-1/2");
    assert_eq!(v["x"], "-3/4");
    assert_eq!(v["agreement"], true);
    assert!(v["value"].is_string());
}

#[test]
fn eval_closed_polynomial_json() {
    let o = run(&[
        "eval",
        "--family",
        "bernoulli",
        "--n",
        "2",
        "--alpha",
        "1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], serde_json::json!(["1/6", "-1", "1"]));
    assert_eq!(v["x"], serde_json::Value::Null);
    assert_eq!(v["per_method"], serde_json::Value::Null);
    assert_eq!(v["agreement"], serde_json::Value::Null);
}

#[test]
fn malformed_flags_exit_one() {
    for args in [
        &[
            "eval",
            "--family",
            "bernoulli",
            "--n",
            "2",
            "--alpha",
            "1/0",
        ][..],
        &["eval", "--family", "gamma", "--n", "2", "--alpha", "1"],
        &["eval", "--family", "euler", "--alpha", "1"],
        &["table", "--family", "euler", "--nmax", "-1", "--alpha", "1"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn table_cap_exit_one() {
    let o = run(&[
        "table",
        "--family",
        "bernoulli",
        "--nmax",
        "65",
        "--alpha",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&[
        "table", "--family", "euler", "--nmax", "2", "--alpha", "1", "--format", "csv",
    ]);
    assert_eq!(stdout(&o), "n,value\n0,1\n1,0\n2,-1\n");
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_vacuous_and_corrupted() {
    let o = run(&["verify", "--max-n", "0"]);
    assert_eq!(o.status.code(), Some(0));

    let o = run(&["verify", "--max-n", "4", "--corrupt-gamma1"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.contains("FAIL route-equivalence-bernoulli"), "{text}");
}

#[test]
fn verify_output_is_deterministic() {
    let a = run(&["verify", "--max-n", "6", "--seed", "9"]);
    let b = run(&["verify", "--max-n", "6", "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
