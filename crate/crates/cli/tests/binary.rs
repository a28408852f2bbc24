use std::process::{Command, Output};

use elliptic_weyl_cli::emit::parse_machine;
use elliptic_weyl_cli::report::VerdictField;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_elliptic-weyl"))
        .args(args)
        .env_remove("ELLIPTIC_WEYL_CAP")
        .output()
        .expect("binary runs")
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--preset", "g2_case_a"]).status.code(), Some(0));
    assert_eq!(run(&["--preset", "hermitian_su", "--p", "2", "--q", "1"]).status.code(), Some(0));
    assert_eq!(run(&["--type", "A1", "--t", "0"]).status.code(), Some(2));
    assert_eq!(run(&["--type", "Q3", "--t", "1,0,0"]).status.code(), Some(2));
    assert_eq!(run(&["--type", "G2", "--t", "1,2/0"]).status.code(), Some(2));
    assert_eq!(run(&["--type", "E7", "--t", "1,0,0,0,0,0,0", "--cap", "10"]).status.code(), Some(3));
    assert_eq!(run(&["--preset", "g2_case_b", "--verify"]).status.code(), Some(0));
}

#[test]
fn env_var_sets_the_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_elliptic-weyl"))
        .args(["--type", "B3", "--t", "1,0,0"])
        .env("ELLIPTIC_WEYL_CAP", "47")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("48"));
}

#[test]
fn diagnostics_name_field_and_position() {
    let out = run(&["--type", "G2", "--t", "1,abc"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("t[2]"), "{err}");
}

#[test]
fn input_document_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("case.json");
    std::fs::write(&input, r#"{"root_system": "G2", "t": ["1", "-3"], "z": [0, 1]}"#).unwrap();
    let out = dir.path().join("report.json");
    let status = run(&[
        "--input",
        input.to_str().unwrap(),
        "--format",
        "machine",
        "--out",
        out.to_str().unwrap(),
    ])
    .status;
    assert!(status.success());
    let report = parse_machine(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report.verdict, VerdictField::Holds);
    assert_eq!(report.witnesses[0].simple_roots, vec![vec![1, 0], vec![-3, -1]]);
}

#[test]
fn input_dir_loop() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("a.json"), r#"{"type": "A2", "t": [0, 1], "z": [0, 1]}"#).unwrap();
    std::fs::write(dir.path().join("b.json"), r#"{"type": "G2", "t": [1, -2], "z": [0, 1]}"#).unwrap();
    std::fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    let out = run(&["--input-dir", dir.path().to_str().unwrap(), "--format", "machine"]);
    assert!(out.status.success());
    let docs: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(docs.len(), 2);
    assert_eq!(docs[0]["verdict"], "OBSTRUCTED");
    assert_eq!(docs[1]["verdict"], "HOLDS");

    std::fs::write(dir.path().join("c.json"), r#"{"type": "A2", "t": [0, 0]}"#).unwrap();
    let out = run(&["--input-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn frozen_machine_fields() {
    let out = run(&["--preset", "su_pq", "--p", "2", "--q", "1", "--h", "1", "--format", "machine"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in [
        "root_system", "t", "z", "r", "levi_size", "chambers", "verdict", "witnesses", "cells",
        "complement_codim", "poincare",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["t"], serde_json::json!(["1", "0"]));
    assert_eq!(v["verdict"], "HOLDS");
    let dims: Vec<u64> = v["cells"].as_array().unwrap().iter().map(|c| c["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![2, 1, 0]);
    assert_eq!(v["complement_codim"], 2);
    for key in ["word", "n", "dim", "delta_sigma"] {
        assert!(v["cells"][0].get(key).is_some());
    }
    for key in ["simple_roots", "t_in_chamber"] {
        assert!(v["witnesses"][0].get(key).is_some());
    }
}
