//! Exit-code and file-output behavior of the binary.

use std::process::Command;

fn run(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ratio-bounds"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn unknown_bound_is_a_config_error() {
    let out = run(&["verify", "--bound", "nosuch"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn unknown_family_is_a_config_error() {
    let out = run(&["verify", "--family", "airy"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn malformed_grid_file_is_a_config_error() {
    let dir = std::env::temp_dir().join("ratio-bounds-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = run(&[
        "verify",
        "--bound",
        "pcf.b21",
        "--grid-file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));

    // Wrong parameter arity is also a configuration error.
    std::fs::write(&path, r#"{"params": [[1.0, 2.0]]}"#).unwrap();
    let out = run(&[
        "verify",
        "--bound",
        "pcf.b21",
        "--grid-file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn single_bound_verify_round_trip() {
    let out = run(&["verify", "--bound", "kummer.lambda"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("kummer.lambda"));
    assert!(text.contains("violations   0"));
}

#[test]
fn conjecture_rejects_bad_index() {
    let out = run(&["conjecture", "--n", "0.3"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn accuracy_single_family_matches() {
    let out = run(&["accuracy", "--family", "pcf"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("0 mismatches"), "{text}");
}
