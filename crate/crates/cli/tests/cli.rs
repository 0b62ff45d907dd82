use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclobound"))
        .args(args)
        .env_remove("CYCLOBOUND_BUDGET_POINTS")
        .env_remove("CYCLOBOUND_BUDGET_TUPLES")
        .env_remove("CYCLOBOUND_BUDGET_FIELD")
        .env_remove("CYCLOBOUND_BUDGET_MESSAGES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn certify_pass_exits_zero() {
    let o = run(&["certify", "--n", "7", "--q", "2", "--T", "0,1,3,4", "--t", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass"));
}

#[test]
fn witness_exits_one() {
    let o = run(&["--json", "certify", "--n", "3", "--q", "7", "--T", "0,1,3,4", "--t", "3"]);
    let v = json(&o);
    assert_eq!(v["result"]["outcome"], "witness", "{v}");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn point_count_example() {
    let o = run(&["variety", "count", "--T", "0,1,3,4,6,7,9", "--t", "6", "--q", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "7476");
}

#[test]
fn golay_distance() {
    let o = run(&["mindist", "--n", "23", "--q", "2", "--coset", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "7");
}

#[test]
fn errors_exit_two_with_json() {
    let o = run(&["certify", "--n", "6", "--q", "2", "--T", "0,1", "--t", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "not_coprime");

    let o = run(&["nonsense"]);
    assert_eq!(o.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "usage");

    let o = run(&["--budget-points", "5", "variety", "count", "--T", "0,1,3", "--t", "2", "--q", "7"]);
    assert_eq!(o.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "budget_exceeded");
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_cyclobound"))
        .args(["variety", "count", "--T", "0,1,3", "--t", "2", "--q", "7"])
        .env("CYCLOBOUND_BUDGET_POINTS", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unequal_varieties_exit_one() {
    let o = run(&["variety", "equal", "--T", "0,1,4,5,8", "--T2", "0,1,4,5,8,9", "--t", "4", "--q", "13"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["variety", "equal", "--T", "0,1,4,5,8", "--T2", "0,1,4,5,8,9", "--t", "4", "--q", "5"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn json_is_thread_independent() {
    let cases: [&[&str]; 4] = [
        &["certify", "--n", "13", "--q", "3", "--T", "0,1,3,4", "--t", "3"],
        &["variety", "points", "--T", "0,1,3,4,6", "--t", "4", "--q", "7"],
        &["code", "info", "--n", "23", "--q", "2", "--coset", "1", "--brute"],
        &["sweep-question", "--rmax", "7", "--q", "5", "--nmax", "12"],
    ];
    for args in cases {
        let outs: Vec<String> = ["1", "4"]
            .iter()
            .map(|n| {
                let mut a = vec!["--json", "--threads", n];
                a.extend_from_slice(args);
                stdout(&run(&a))
            })
            .collect();
        assert_eq!(outs[0], outs[1], "{args:?}");
    }
}

#[test]
fn json_round_trips() {
    let o = run(&["--json", "code", "info", "--n", "15", "--q", "2", "--S", "1,2,4,8,3,6,9,12"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["command"], "code info");
    assert!(v.get("timing").is_none());
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);

    let o = run(&["--json", "--timing", "cosets", "--n", "7", "--q", "2"]);
    assert!(json(&o)["timing"].is_u64());
}

#[test]
fn not_closed_defining_set() {
    let o = run(&["code", "info", "--n", "7", "--q", "2", "--S", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "not_closed");
}
