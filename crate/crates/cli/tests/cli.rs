use std::path::PathBuf;
use std::process::{Command, Output};

fn qgollnitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgollnitz"))
        .args(args)
        .env_remove("QGOLLNITZ_JOBS")
        .output()
        .expect("binary runs")
}

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/golden/key_sides.txt")
}

#[test]
fn passing_sweep_exits_zero() {
    let out = qgollnitz(&[
        "key", "--i", "0..2", "--j", "0..2", "--k", "0..1", "--L", "0..4", "--M", "0..4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("tuples    450"));
    assert!(text.contains("status    ok"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["no-such-identity"],
        vec!["key", "--i", "3..1"],
        vec!["key", "--n", "4"],
        vec!["key", "--format", "yaml"],
        vec!["key", "--order", "5"],
        vec!["false-theta", "--order", "0"],
        vec!["key", "--jobs", "0"],
        vec!["key", "--bogus-flag"],
        vec![],
    ] {
        let out = qgollnitz(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn json_report_shape() {
    let out = qgollnitz(&[
        "gollnitz",
        "--n",
        "0..20",
        "--format",
        "json",
        "--no-timing",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let expected = format!(
        "{{\"identity\":\"gollnitz\",\"total\":21,\"failures\":[],\"elapsed_ms\":0,\"version\":\"{}\"}}\n",
        env!("CARGO_PKG_VERSION")
    );
    assert_eq!(text, expected);
}

#[test]
fn reports_identical_across_job_counts() {
    let args = [
        "recurrence-andrews",
        "--L",
        "0..5",
        "--M",
        "0..5",
        "--format",
        "json",
        "--no-timing",
    ];
    let one = qgollnitz(&[&args[..], &["--jobs", "1"]].concat());
    let eight = qgollnitz(&[&args[..], &["--jobs", "8"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, eight.stdout);
}

#[test]
fn jobs_can_come_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_qgollnitz"))
        .args(["carlitz", "--L", "0..4"])
        .env("QGOLLNITZ_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn golden_corpus_matches_shipped_file() {
    let path = golden_path();
    let out = qgollnitz(&["golden", "--check", path.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let printed = qgollnitz(&["golden"]);
    assert_eq!(
        String::from_utf8(printed.stdout).unwrap(),
        std::fs::read_to_string(path).unwrap()
    );
}

#[test]
fn corrupted_golden_file_exits_one() {
    let stored = std::fs::read_to_string(golden_path()).unwrap();
    let corrupted = stored.replacen("q + q^2", "q + q^3", 1);
    assert_ne!(stored, corrupted);
    let path = std::env::temp_dir().join(format!("qgollnitz-golden-{}.txt", std::process::id()));
    std::fs::write(&path, corrupted).unwrap();
    let out = qgollnitz(&["golden", "--check", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("line "));
}

#[test]
fn missing_golden_file_is_usage_error() {
    let out = qgollnitz(&["golden", "--check", "/nonexistent/golden.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn list_names_every_identity() {
    let out = qgollnitz(&["list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 21);
    assert!(text
        .lines()
        .any(|l| l.starts_with("four-param ") && l.contains("order=20")));
}
