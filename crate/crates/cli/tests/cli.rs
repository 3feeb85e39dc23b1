use std::process::{Command, Output};

use serde_json::Value;

fn biquot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biquot"))
        .args(args)
        .env_remove("BIQUOT_THREADS")
        .output()
        .expect("spawn biquot")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

#[test]
fn list_names_every_builtin() {
    let out = biquot(&["list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["cp2-connect-sum", "su3-t2", "r-p", "sp2-t2", "m20-eschenburg", "spin-catalogs"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name} missing");
    }
}

#[test]
fn su3_has_no_solutions() {
    let out = biquot(&["verify", "su3-t2", "--expect", "no-solutions"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    assert_eq!(report["sections"]["search"]["exhaustive"], true);
}

#[test]
fn expectation_mismatch_exits_one() {
    let out = biquot(&["verify", "su3-t2", "--expect", "solutions"]);
    assert_eq!(out.status.code(), Some(1));
    let out = biquot(&["verify", "cp2-connect-sum", "--expect", "congruence-fails"]);
    assert_eq!(out.status.code(), Some(0));
    let out = biquot(&["verify", "cp2-connect-sum-bar", "--expect", "solutions"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn reports_are_byte_stable_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for threads in ["1", "4"] {
        let path = dir.path().join(format!("r-{threads}.json"));
        let out = biquot(&[
            "--threads",
            threads,
            "verify",
            "sp2-t2",
            "--emit",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        let emitted = std::fs::read(&path).unwrap();
        assert_eq!(emitted, out.stdout);
        reports.push(emitted);
    }
    assert_eq!(reports[0], reports[1]);
}

#[test]
fn threads_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_biquot"))
        .args(["verify", "r-p"])
        .env("BIQUOT_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(out.stdout, biquot(&["verify", "r-p"]).stdout);
}

#[test]
fn budget_override_truncates() {
    let out = biquot(&["verify", "su3-t2", "--budget", "10", "--expect", "no-solutions"]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["sections"]["search"]["exhaustive"], false);
}

#[test]
fn malformed_document_names_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let out = biquot(&["show", "s2xs2"]);
    let mut doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    doc["top_degree"] = Value::String("four".into());
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = biquot(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("top_degree"), "{err}");
}

#[test]
fn file_case_matches_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("case.json");
    let doc = biquot(&["show", "cp2-connect-sum"]).stdout;
    std::fs::write(&path, &doc).unwrap();
    let from_file = biquot(&["verify", path.to_str().unwrap()]);
    let builtin = biquot(&["verify", "cp2-connect-sum"]);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, builtin.stdout);
}

#[test]
fn unknown_case_is_an_error() {
    let out = biquot(&["verify", "no-such-case"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn genus_subcommand() {
    let out = biquot(&["genus", "genus-cpn", "--n", "2"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    let genus = &report["sections"]["genus"];
    assert!(genus.is_object());
    assert!(report["sections"].get("search").is_none());
}

#[test]
fn obstruct_subcommand() {
    let out = biquot(&["obstruct", "m20-eschenburg"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("NO-VALID-V"));
    let out = biquot(&["obstruct", "cp2-presentation"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("VALID-V-EXISTS"));
}

#[test]
fn reps_subcommand() {
    let out = biquot(&["reps", "spin-catalogs"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert!(report["sections"]["reps"].is_array() || report["sections"]["reps"].is_object());
}
