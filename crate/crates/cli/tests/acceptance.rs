//! Acceptance criterion 7: repeated runs of every command produce
//! byte-identical reports, and the parallel scan equals the serial one.

use std::process::{Command, Output};

fn diolab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diolab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> Vec<u8> {
    let out = diolab(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

#[test]
fn criterion_7_reports_are_byte_identical() {
    let invocations: &[&[&str]] = &[
        &["frey", "--a", "7", "--b", "9"],
        &["frey", "--a", "-7", "--b", "16"],
        &["audit", "--a", "7", "--b", "9", "--pq-bound", "10"],
        &["audit", "--a", "9", "--b", "16", "--pq-bound", "10"],
        &[
            "enumerate",
            "--system",
            "system9",
            "--a",
            "7",
            "--b",
            "9",
            "--pq-bound",
            "12",
            "--allow-swap",
        ],
        &[
            "enumerate",
            "--system",
            "quartic1",
            "--a",
            "7",
            "--b",
            "9",
            "--pq-bound",
            "10",
            "--allow-swap",
        ],
        &[
            "enumerate",
            "--system",
            "system10",
            "--a",
            "7",
            "--b",
            "9",
            "--pq-bound",
            "10",
            "--allow-swap",
            "--joint",
            "--shared-wtv",
        ],
        &["descent", "--family", "quartic-sum", "--bound", "120"],
        &["descent", "--family", "sum-to-fourth", "--bound", "200"],
        &["descent", "--family", "lebesgue", "--n", "3", "--bound", "40"],
        &["concordant", "--m", "1", "--n", "7", "--bound", "100"],
        &[
            "quartic", "--A", "256", "--B", "7", "--C", "7", "--alpha", "0", "--beta", "9",
            "--gamma", "16", "--point", "1,5,4,3",
        ],
        &["claims"],
        &["audit", "--a", "7", "--b", "9", "--pq-bound", "10", "--format", "csv"],
        &["concordant", "--m", "1", "--n", "7", "--bound", "60", "--format", "csv"],
    ];
    for args in invocations {
        let first = stdout_of(args);
        let second = stdout_of(args);
        assert_eq!(first, second, "non-deterministic report for {args:?}");
        assert!(!first.is_empty());
    }
    println!("acceptance 7a (byte-identical repeated reports): PASS");
}

#[test]
fn criterion_7_jobs_do_not_change_output() {
    let base: &[&str] = &["concordant", "--m", "1", "--n", "7", "--bound", "400"];
    let serial = stdout_of(&[base, &["--jobs", "1"]].concat());
    let parallel = stdout_of(&[base, &["--jobs", "4"]].concat());
    assert_eq!(serial, parallel, "--jobs 4 must equal --jobs 1");

    let base: &[&str] = &["audit", "--a", "7", "--b", "9", "--pq-bound", "14"];
    let serial = stdout_of(&[base, &["--jobs", "1"]].concat());
    let parallel = stdout_of(&[base, &["--jobs", "4"]].concat());
    assert_eq!(serial, parallel);
    println!("acceptance 7b (--jobs 4 equals --jobs 1): PASS");
}

#[test]
fn criterion_7_no_floating_point_in_reports() {
    fn walk(v: &serde_json::Value) {
        match v {
            serde_json::Value::Number(n) => {
                assert!(n.is_u64() || n.is_i64(), "float leaked into report: {n}");
            }
            serde_json::Value::Array(items) => items.iter().for_each(walk),
            serde_json::Value::Object(map) => map.values().for_each(walk),
            _ => {}
        }
    }
    for args in [
        vec!["frey", "--a", "7", "--b", "9"],
        vec!["audit", "--a", "7", "--b", "9", "--pq-bound", "10"],
        vec![
            "quartic", "--A", "256", "--B", "7", "--C", "7", "--alpha", "0", "--beta", "9",
            "--gamma", "16", "--point", "1,5,4,3",
        ],
    ] {
        let out = stdout_of(&args);
        let parsed: serde_json::Value = serde_json::from_slice(&out).unwrap();
        walk(&parsed);
    }
    println!("acceptance 7c (no floating point anywhere in output): PASS");
}
