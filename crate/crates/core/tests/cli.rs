use std::process::{Command, Output};

use num_bigint::BigInt;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_denumerant"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_examples() {
    let out = run(&["count", "--parts", "2,3", "--n", "11"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2\n");
    let out = run(&["theorem2", "--parts", "2,3,5", "--x", "1"]);
    assert_eq!(stdout(&out), "19\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["count", "--parts", "2,3"]).status.code(), Some(2));
    assert_eq!(
        run(&["count", "--parts", "2,4", "--n", "3", "--method", "section3"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["theorem3", "--parts", "2,3,5", "--x", "3"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "verify", "--k-min", "1", "--k-max", "6", "--trials", "120", "--seed", "42", "--output",
        "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["trials"], "120");
    assert_eq!(doc["seed"], "42");
    assert_eq!(doc["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn json_values_are_exact_strings() {
    let out = run(&[
        "count",
        "--parts",
        "1,2,3,5,7",
        "--n",
        "100000",
        "--method",
        "theorem1",
        "--output",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["subcommand"], "count");
    assert_eq!(doc["method"], "theorem1");
    assert_eq!(doc["input"]["n"], "100000");
    assert_eq!(doc["parts"], serde_json::json!(["1", "2", "3", "5", "7"]));
    let value: BigInt = doc["value"].as_str().unwrap().parse().unwrap();
    let oracle = run(&["count", "--parts", "1,2,3,5,7", "--n", "100000"]);
    assert_eq!(value.to_string() + "\n", stdout(&oracle));

    let out = run(&["bernoulli", "--order", "4", "--output", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        doc["value"],
        serde_json::json!(["1", "1/2", "1/6", "0", "-1/30"])
    );
}
