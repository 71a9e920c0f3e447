use std::io::Write;
use std::process::{Command, Output};

fn foxcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foxcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn theta_ideals_from_catalog() {
    let out = foxcalc(&["ideal", "theta:8", "--d", "7"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("E_7 = (3,1+t)"), "{}", stdout(&out));
}

#[test]
fn presentation_file_and_alpha() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "group trefoil\ngens x y\nrel x y x y^-1 x^-1 y^-1").unwrap();
    let path = file.path().to_str().unwrap();
    let out = foxcalc(&["polynomial", path, "--alpha", "*=t@t^inf"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(stdout(&out).trim(), "1-t+t^2");

    let out = foxcalc(&[
        "ideal",
        path,
        "--alpha",
        "*=t@t^inf",
        "--ring",
        "Z:3",
        "--d",
        "1",
    ]);
    assert!(out.status.success());
    assert!(
        stdout(&out).contains("E_1 = (2,1+t+t^2)"),
        "{}",
        stdout(&out)
    );

    let out = foxcalc(&["ideal", path, "--alpha", "*=t"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn twisted_with_representation_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "modulus 2\ngroup sl").unwrap();
    for g in ["x1", "x2", "x3", "x4", "x5"] {
        writeln!(file, "{g} 1 0 0 1").unwrap();
    }
    let path = file.path().to_str().unwrap();
    let out = foxcalc(&["twisted", "theta:5", "--rho", path, "--d", "9"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("E_9 ="));

    let out = foxcalc(&["twisted", "theta:5", "--rho", "lemma36", "--d", "8"]);
    assert!(stdout(&out).contains("E_8 = (1+t)"));
}

#[test]
fn tables_in_json() {
    let out = foxcalc(&["--json", "table3", "yoshikawa:2_1^1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rows"][0]["multiplicity"], 3);
    assert_eq!(v["rows"][0]["entries"], serde_json::json!(["0", "1"]));

    let out = foxcalc(&["table1", "handlebody:0_1"]);
    assert_eq!(stdout(&out).trim(), "{(1,1,1)_11}");
}

#[test]
fn reps_counts() {
    let out = foxcalc(&["--json", "reps", "yoshikawa:10_3"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["homomorphisms"], 6);
    assert_eq!(v["classes"], 3);
}

#[test]
fn verification_commands() {
    let out = foxcalc(&["verify", "theorem3.4", "--n-max", "7"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 failed"));
    let out = foxcalc(&["verify", "lemma3.6", "--n-list", "5,9"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exit_codes() {
    assert_eq!(foxcalc(&["ideal", "nosuch:1"]).status.code(), Some(2));
    assert_eq!(foxcalc(&["ideal", "<x | x x"]).status.code(), Some(2));
    assert_eq!(foxcalc(&["ideal", "free:2"]).status.code(), Some(2));
    assert_eq!(
        foxcalc(&["polynomial", "theta:5", "--alpha", "*=t@t^2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(foxcalc(&["show", "theta:4"]).status.code(), Some(0));
}
