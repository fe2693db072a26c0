use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().expect("verify runs")
}

fn code(args: &[&str]) -> i32 {
    verify(args).status.code().expect("exit code")
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["finite-hecke", "--q", "5"]), 0);
    assert_eq!(code(&["biject"]), 0);
    assert_eq!(code(&["nope"]), 2);
    assert_eq!(code(&["elliptic", "--bogus"]), 2);
    assert_eq!(code(&[]), 2);
    assert_eq!(code(&["elliptic", "--tau", "0.3 + 1.2i"]), 2);
    assert_eq!(code(&["elliptic", "--tau", "0.3-1.2i"]), 2);
    assert_eq!(code(&["finite-hecke", "--q", "4"]), 2);
    assert_eq!(code(&["jacobian", "--gamma", "1,x,0,0"]), 2);
    assert_eq!(code(&["jacobian", "--omega", "/nonexistent/omega.json"]), 2);
    // a grid too coarse for the modes turns the orthogonality check into a failure
    assert_eq!(code(&["elliptic", "--tau", "0+1i", "--grid", "4", "--samples", "2"]), 1);
}

#[test]
fn elliptic_example_passes() {
    let out = verify(&["elliptic", "--tau", "0.3+1.2i", "--max-mode", "3", "--grid", "64", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["suite_name"], "elliptic");
    assert_eq!(report["overall_pass"], true);
    assert_eq!(report["parameters"]["tau"], "0.3+1.2i");
}

#[test]
fn same_seed_same_bytes() {
    let args = ["connections", "--seed", "9", "--samples", "5"];
    let (a, b) = (verify(&args), verify(&args));
    assert_eq!(a.stdout, b.stdout);
    let other = verify(&["connections", "--seed", "10", "--samples", "5"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn json_and_csv_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let csv = dir.path().join("table.csv");
    let out = verify(&[
        "elliptic",
        "--tau",
        "0+1i",
        "--gamma",
        "1,-2",
        "--samples",
        "3",
        "--json",
        json.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read(&json).unwrap(), out.stdout);
    let table = std::fs::read_to_string(&csv).unwrap();
    let mut lines = table.lines();
    assert_eq!(
        lines.next(),
        Some("g,omega,gamma_a,gamma_b,p_re,p_im,lambda_re,lambda_im,residual")
    );
    assert_eq!(lines.count(), 3);
}

#[test]
fn omega_file_is_used() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("omega.json");
    std::fs::write(
        &path,
        r#"{"genus":2,"omega":[[{"re":0.1,"im":1.0},{"re":0.2,"im":0.3}],[{"re":0.2,"im":0.3},{"re":-0.1,"im":1.5}]]}"#,
    )
    .unwrap();
    let out = verify(&["jacobian", "--omega", path.to_str().unwrap(), "--samples", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["parameters"]["omega"], "0.1+1i;0.2+0.3i;0.2+0.3i;-0.1+1.5i");

    std::fs::write(&path, r#"{"genus":1,"omega":[[{"re":0.0,"im":-1.0}]]}"#).unwrap();
    assert_eq!(code(&["jacobian", "--omega", path.to_str().unwrap()]), 2);
}
