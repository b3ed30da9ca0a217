//! Behavior tests for the command-line surface: exit codes, report shapes,
//! file outputs, the cache, and the factorization-bound environment variable.

use std::process::{Command, Output};

use serde_json::Value;

fn diolab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diolab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report_of(args: &[&str]) -> Value {
    let out = diolab(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn exit_code(args: &[&str]) -> i32 {
    diolab(args).status.code().expect("exit code")
}

#[test]
fn invalid_inputs_exit_one() {
    assert_eq!(exit_code(&["frey", "--a", "2", "--b", "2"]), 1);
    assert_eq!(exit_code(&["frey", "--a", "0", "--b", "5"]), 1);
    assert_eq!(exit_code(&["frey", "--a", "3", "--b", "-3"]), 1);
    assert_eq!(exit_code(&["audit", "--a", "7", "--b", "9", "--pq-bound", "1"]), 1);
    assert_eq!(exit_code(&["concordant", "--m", "1", "--n", "1", "--bound", "10"]), 1);
    assert_eq!(exit_code(&["descent", "--family", "lebesgue", "--bound", "10"]), 1);
    assert_eq!(exit_code(&["descent", "--family", "lebesgue", "--n", "2", "--bound", "10"]), 1);
    assert_eq!(exit_code(&["descent", "--family", "nope", "--bound", "10"]), 1);
    assert_eq!(exit_code(&["enumerate", "--system", "system11", "--a", "7", "--b", "9", "--pq-bound", "5"]), 1);
    assert_eq!(
        exit_code(&["quartic", "--A", "0", "--B", "7", "--C", "7", "--alpha", "0", "--beta", "9", "--gamma", "16", "--point", "1,5,4,3"]),
        1
    );
    assert_eq!(
        exit_code(&["quartic", "--A", "256", "--B", "7", "--C", "7", "--alpha", "0", "--beta", "9", "--gamma", "16", "--point", "1,5,4"]),
        1
    );
    assert_eq!(exit_code(&["no-such-command"]), 1);
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["--version"]), 0);
}

#[test]
fn frey_unit_triple() {
    let report = report_of(&["frey", "--a", "1", "--b", "1"]);
    let curves = report["results"].as_array().unwrap();
    assert_eq!(curves[0]["display"], "Y^2 = X^3 - X");
    assert_eq!(curves[0]["factored"], "Y^2 = X(X - 1)(X + 1)");
}

#[test]
fn audit_exits_zero_despite_findings() {
    let out = diolab(&["audit", "--a", "7", "--b", "9", "--pq-bound", "10"]);
    assert!(out.status.success(), "claim failures are findings, not errors");
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let findings = report["findings"].as_array().unwrap();
    assert!(!findings.is_empty());
    assert!(findings
        .iter()
        .any(|f| f["claim_id"] == "C22" && f["holds"] == false));
    assert!(findings
        .iter()
        .any(|f| f["claim_id"] == "C20p"
            && f["solution"]["w"] == "3"
            && f["holds"] == false));
    // identities never land in findings
    assert!(!findings.iter().any(|f| f["claim_id"] == "C13"));
}

#[test]
fn audit_empty_matrix() {
    let report = report_of(&["audit", "--a", "9", "--b", "16", "--pq-bound", "10"]);
    assert_eq!(report["results"].as_array().unwrap().len(), 0);
    assert_eq!(report["findings"].as_array().unwrap().len(), 0);
}

#[test]
fn enumerate_reports_witness() {
    let report = report_of(&[
        "enumerate",
        "--system",
        "system9",
        "--a",
        "7",
        "--b",
        "9",
        "--pq-bound",
        "10",
        "--allow-swap",
    ]);
    let results = report["results"].as_array().unwrap();
    assert_eq!(results.len(), 1);
    assert_eq!(results[0]["u_prime"], "16");
    assert_eq!(results[0]["w"], "4");
    assert_eq!(results[0]["u"], "1");
    assert!(report["inputs"]["equations"]
        .as_str()
        .unwrap()
        .contains("7*V^2 + 9*T^2 = U'^2"));
}

#[test]
fn joint_mode_reports_shared_triangle() {
    let report = report_of(&[
        "enumerate",
        "--system",
        "system9",
        "--a",
        "7",
        "--b",
        "9",
        "--pq-bound",
        "10",
        "--joint",
        "--shared-wtv",
    ]);
    let joint = &report["results"][0];
    assert_eq!(joint["jointly_solvable_within_bound"], true);
    assert_eq!(joint["shared_triangles"][0]["even_leg"], "4");
}

#[test]
fn descent_and_concordant_results() {
    let report = report_of(&["descent", "--family", "quartic-sum", "--bound", "200"]);
    assert_eq!(report["results"].as_array().unwrap().len(), 0);

    let report = report_of(&["descent", "--family", "diff-to-fourth", "--bound", "100"]);
    let results = report["results"].as_array().unwrap();
    assert!(results
        .iter()
        .any(|r| r["x"] == "41" && r["y"] == "40" && r["z"] == "3"));

    let report = report_of(&["concordant", "--m", "1", "--n", "7", "--bound", "100"]);
    let results = report["results"].as_array().unwrap();
    assert_eq!(results.len(), 25);
    assert_eq!(
        (&results[0]["x"], &results[0]["y"], &results[0]["z"], &results[0]["t"]),
        (&Value::from("3"), &Value::from("4"), &Value::from("5"), &Value::from("11"))
    );
}

#[test]
fn quartic_reports_mapping() {
    let report = report_of(&[
        "quartic", "--A", "256", "--B", "7", "--C", "7", "--alpha", "0", "--beta", "9",
        "--gamma", "16", "--point", "1,5,4,3",
    ]);
    let r = &report["results"][0];
    assert_eq!(r["membership"], true);
    assert_eq!(r["phi"], "0");
    assert_eq!(r["psi"], "0");
    assert_eq!(r["image_x"], "256/9");
    assert_eq!(r["image_y"], "2240/27");
    assert_eq!(r["image_on_cubic"], true);

    // off-quartic point: membership false, mapping refused
    let report = report_of(&[
        "quartic", "--A", "256", "--B", "7", "--C", "7", "--alpha", "0", "--beta", "9",
        "--gamma", "16", "--point", "1,5,3,4",
    ]);
    let r = &report["results"][0];
    assert_eq!(r["membership"], false);
    assert_eq!(r["psi"], "441");
    assert!(r["image_error"].as_str().unwrap().contains("not on the quartic"));
}

#[test]
fn claims_registry_listing() {
    let report = report_of(&["claims"]);
    let results = report["results"].as_array().unwrap();
    assert_eq!(results.len(), 33);
    assert!(results
        .iter()
        .any(|r| r["id"] == "C22" && r["formula"].as_str().unwrap().contains("-R^2")));
}

#[test]
fn out_file_and_cache() {
    let dir = std::env::temp_dir().join(format!("diolab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("report.json");
    let cache_path = dir.join("cache.jsonl");

    let args = [
        "frey", "--a", "7", "--b", "9",
        "--out", out_path.to_str().unwrap(),
        "--cache", cache_path.to_str().unwrap(),
    ];
    let run = diolab(&args);
    assert!(run.status.success());
    assert!(run.stdout.is_empty(), "--out diverts the report from stdout");
    let written: Value =
        serde_json::from_slice(&std::fs::read(&out_path).unwrap()).unwrap();
    assert_eq!(written["command"], "frey");

    // the cache is append-only JSON lines
    let run = diolab(&args);
    assert!(run.status.success());
    let cache = std::fs::read_to_string(&cache_path).unwrap();
    let lines: Vec<&str> = cache.lines().collect();
    assert_eq!(lines.len(), 2);
    for line in lines {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["command"], "frey");
        assert_eq!(v["result_count"], 7);
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn timing_flag_adds_elapsed() {
    let without = report_of(&["claims"]);
    assert!(without.get("elapsed_ms").is_none());
    let out = diolab(&["claims", "--timing"]);
    assert!(out.status.success());
    let with: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(with.get("elapsed_ms").is_some());
}

#[test]
fn factor_bound_env_var() {
    let args = [
        "quartic", "--A", "256", "--B", "7", "--C", "7", "--alpha", "0", "--beta", "9",
        "--gamma", "16", "--point", "1,5,4,3",
    ];
    let out = Command::new(env!("CARGO_BIN_EXE_diolab"))
        .args(args)
        .env("DIOLAB_FACTOR_BOUND", "100")
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["results"][0]["squarefree_a"]
        .as_str()
        .unwrap()
        .contains("exceeds factorization bound 100"));
    assert_eq!(report["results"][0]["squarefree_b"], "7 * 1^2");

    let out = Command::new(env!("CARGO_BIN_EXE_diolab"))
        .args(args)
        .env("DIOLAB_FACTOR_BOUND", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn csv_format_is_flat() {
    let out = diolab(&["concordant", "--m", "1", "--n", "7", "--bound", "20", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,x,y,z"));
    assert_eq!(lines.next(), Some("11,3,4,5"));
}
