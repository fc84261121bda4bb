use std::process::{Command, Output};

fn snakelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snakelab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_tables() {
    let o = snakelab(&["compute", "E", "--n", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0,1\n1,1\n2,1\n3,2\n4,5\n5,16\n");
    assert_eq!(stdout(&snakelab(&["compute", "S", "--n", "3", "--format", "csv"])), "0,1\n1,1\n2,3\n3,11\n");
    assert_eq!(stdout(&snakelab(&["compute", "Q", "--n", "1"])), "Q_0 = 1\nQ_1 = t\n");
}

#[test]
fn single_check_passes() {
    let o = snakelab(&["verify", "--check", "q2-golden", "--n", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS q2-golden"));
}

#[test]
fn json_report() {
    let o = snakelab(&["verify", "--check", "sign-fwex-b", "--n", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["id"], "sign-fwex-b");
    assert_eq!(v[0]["status"], "pass");
    assert_eq!(v[0]["n_range"], serde_json::json!([1, 3]));
}

#[test]
fn unknown_id_lists_catalog() {
    let o = snakelab(&["verify", "--check", "unknown", "--n", "3"]);
    assert_eq!(o.status.code(), Some(126));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("unknown check id"));
    assert!(err.contains("r-odd-at-t0"));
}

#[test]
fn usage_errors() {
    assert_eq!(snakelab(&["verify"]).status.code(), Some(126));
    assert_eq!(snakelab(&["compute", "X", "--n", "2"]).status.code(), Some(126));
    let o = Command::new(env!("CARGO_BIN_EXE_snakelab"))
        .args(["list-checks"])
        .env("SNAKELAB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(126));
}

#[test]
fn verify_all_is_deterministic() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_snakelab"))
            .args(["verify", "--all", "--n", "4"])
            .env("SNAKELAB_THREADS", "2")
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("0 failed, 0 skipped\n"));
}

#[test]
fn list_checks_names_every_id() {
    let out = stdout(&snakelab(&["list-checks"]));
    for c in snakelab::catalog() {
        assert!(out.contains(c.id));
    }
}
