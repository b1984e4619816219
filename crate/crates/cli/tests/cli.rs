use std::process::{Command, Output};

use serde_json::Value;

fn leafcon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leafcon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn family(id: &str, n: &str) -> String {
    let out = leafcon(&["family", "--id", id, "--n", n]);
    assert_eq!(code(&out), 0);
    stdout(&out).trim().to_string()
}

#[test]
fn family_prints_graph6() {
    assert_eq!(family("K4Join_Kn7_plus_3K1", "12"), "K~~~~~~{F_]?");
    let out = leafcon(&["family", "--id", "KkJoin_Kn_k_2_plus_K2", "--n", "5", "--k", "2"]);
    assert_eq!(code(&out), 0);
    // K2 ∨ (K1 + K2): everything but the pairs between vertex 2 and {3, 4}.
    assert_eq!(stdout(&out), "D}s\n");
    let out = leafcon(&["family", "--id", "L_t_n", "--n", "8"]);
    assert_eq!(code(&out), 64);
    let out = leafcon(&["family", "--id", "NoSuchFamily", "--n", "8"]);
    assert_eq!(code(&out), 64);
}

#[test]
fn decide_exit_codes() {
    let out = leafcon(&["decide", "--g6", "D~{", "--k", "3", "--oracle"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["schema"], "leafcon/1");
    assert_eq!(v["verdict"]["outcome"], "holds");
    assert_eq!(v["oracle"]["agrees"], true);

    let g = family("Exception12_K3_Kn5_2K1", "9");
    let out = leafcon(&["decide", "--g6", &g, "--k", "2", "--oracle"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["verdict"]["outcome"], "fails");
    assert_eq!(v["oracle"]["outcome"], "fails");
    assert_eq!(v["oracle"]["agrees"], true);

    let g = family("K4Join_Kn7_plus_3K1", "12");
    let out = leafcon(&["decide", "--g6", &g, "--k", "2", "--budget", "0"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["verdict"]["outcome"], "budget-exhausted");
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&leafcon(&[])), 64);
    assert_eq!(code(&leafcon(&["decide", "--g6", "D~{"])), 64);
    assert_eq!(code(&leafcon(&["decide", "--g6", "D~", "--k", "2"])), 64);
    assert_eq!(code(&leafcon(&["decide", "--g6", "D~{", "--k", "1"])), 64);
    assert_eq!(code(&leafcon(&["closure", "--g6", "Ch"])), 64);
    assert_eq!(code(&leafcon(&["closure", "--g6", "Ch", "--l", "3", "--k", "2"])), 64);
    assert_eq!(code(&leafcon(&["verify", "--suite", "nope"])), 64);
    // Disconnected input.
    assert_eq!(code(&leafcon(&["decide", "--g6", "C?", "--k", "2"])), 64);
    assert_eq!(code(&leafcon(&["--help"])), 0);
    assert_eq!(code(&leafcon(&["--version"])), 0);
}

#[test]
fn closure_and_spectrum_reports() {
    // C4 under the 4-closure becomes K4.
    let out = leafcon(&["closure", "--g6", "Cl", "--l", "4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["closed_graph6"], "C~");
    assert_eq!(v["added_edges"].as_array().unwrap().len(), 2);

    let out = leafcon(&["spectrum", "--g6", "D~{"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!((v["spectrum"]["rho"].as_f64().unwrap() - 4.0).abs() < 1e-9);
    assert!((v["spectrum"]["q"].as_f64().unwrap() - 8.0).abs() < 1e-9);
    assert_eq!(code(&leafcon(&["spectrum", "--g6", "D~{", "--tol", "0"])), 64);
}

#[test]
fn conditions_exit_codes() {
    let out = leafcon(&["conditions", "--g6", "D~{", "--k", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["report"]["conclusion"], "k-leaf-connected");

    // P4 has minimum degree 1.
    let out = leafcon(&["conditions", "--g6", "Ch", "--k", "2"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn graph6_can_come_from_stdin() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_leafcon"))
        .args(["spectrum", "--g6", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"D~{\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["n"], 5);
}

#[test]
fn scan_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let paths = [dir.path().join("a.json"), dir.path().join("b.json")];
    for p in &paths {
        let out = leafcon(&[
            "scan", "--n", "10", "--k", "2", "--count", "15", "--seed", "42", "--edge-min", "33",
            "--parallelism", "4", "--json", p.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    }
    let a = std::fs::read(&paths[0]).unwrap();
    let b = std::fs::read(&paths[1]).unwrap();
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["schema"], "leafcon/1");
    assert_eq!(v["summary"]["sample_count"], 15);
    assert_eq!(v["summary"]["anomalies"], 0);
    assert_eq!(v["records"].as_array().unwrap().len(), 15);

    // Same config to stdout gives the same bytes.
    let out = leafcon(&[
        "scan", "--n", "10", "--k", "2", "--count", "15", "--seed", "42", "--edge-min", "33",
        "--parallelism", "4",
    ]);
    assert_eq!(out.stdout, a);
}

#[test]
fn infeasible_scan_is_a_usage_error() {
    let out = leafcon(&["scan", "--n", "8", "--k", "2", "--count", "1", "--seed", "1", "--edge-min", "29"]);
    assert_eq!(code(&out), 64);
    let out = leafcon(&["scan", "--n", "8", "--k", "2", "--count", "0", "--seed", "1", "--edge-min", "20"]);
    assert_eq!(code(&out), 64);
}

#[test]
fn verify_runs_a_suite() {
    let out = leafcon(&["verify", "--suite", "remark"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("PASS"));
    let out = leafcon(&["verify", "--suite", "11"]);
    assert_eq!(code(&out), 0);
}
