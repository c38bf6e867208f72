//! End-to-end tests of the batch command line: exit codes, JSON shapes,
//! and piping between subcommands.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn braidcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn braidcat_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_braidcat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("output is JSON")
}

#[test]
fn example_piped_into_trace() {
    let example = braidcat(&["model", "example", "nonpolar"]);
    assert!(example.status.success());
    let trace = braidcat_stdin(
        &["cocycle", "trace"],
        std::str::from_utf8(&example.stdout).unwrap(),
    );
    assert_eq!(trace.status.code(), Some(0));
    let json = stdout_json(&trace);
    assert_eq!(json["table"]["0"]["coeffs"][0], 0);
    assert_eq!(json["table"]["1"]["coeffs"][0], 1);
    assert_eq!(json["form"]["diag"][0]["coeffs"][0], 1);
}

#[test]
fn example_piped_into_strictify_is_nonpolar() {
    let example = braidcat(&["model", "example", "nonpolar"]);
    let strictify = braidcat_stdin(
        &["strictify"],
        std::str::from_utf8(&example.stdout).unwrap(),
    );
    assert_eq!(strictify.status.code(), Some(2));
    let json = stdout_json(&strictify);
    assert_eq!(json["polar"], false);
}

#[test]
fn examples_pipe_into_validate() {
    for name in ["nonpolar", "koszul"] {
        let example = braidcat(&["model", "example", name]);
        let validate = braidcat_stdin(
            &["cocycle", "validate"],
            std::str::from_utf8(&example.stdout).unwrap(),
        );
        assert_eq!(validate.status.code(), Some(0), "example {name}");
        let json = stdout_json(&validate);
        assert_eq!(json["valid"], true);
    }
}

#[test]
fn enumerate_finds_two_classes() {
    let out = braidcat(&[
        "cocycle",
        "enumerate",
        "--group",
        r#"{"orders":[2]}"#,
        "--coeffs",
        r#"{"orders":[2]}"#,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["classes"].as_array().unwrap().len(), 2);
    assert_eq!(json["surjective"], true);
    // echoed guard for reproducibility
    assert_eq!(json["max_candidates"], 1_000_000);
}

#[test]
fn malformed_json_exits_1_with_location() {
    let out = braidcat_stdin(&["cocycle", "validate"], "{\"group\": [broken");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line"), "diagnostic names a location: {err}");
}

#[test]
fn is_polar_exit_codes() {
    let nonpolar = r#"{"source":{"orders":[2]},"target":{"orders":[4]},
                       "diag":[{"coeffs":[1]}],"offdiag":{}}"#;
    let out = braidcat_stdin(&["forms", "is-polar"], nonpolar);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout_json(&out)["polar"], false);

    let polar = r#"{"source":{"orders":[2]},"target":{"orders":[4]},
                    "diag":[{"coeffs":[2]}],"offdiag":{}}"#;
    let out = braidcat_stdin(&["forms", "is-polar"], polar);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["polar"], true);
    // deterministic lexicographically-least witness
    assert_eq!(json["witness"]["matrix"][0][0]["coeffs"][0], 0);
}

#[test]
fn guard_exceeded_exits_3() {
    let out = braidcat(&[
        "cocycle",
        "enumerate",
        "--group",
        r#"{"orders":[2,2]}"#,
        "--coeffs",
        r#"{"orders":[4]}"#,
        "--max-candidates",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn emitted_documents_reparse() {
    for args in [
        vec!["model", "example", "nonpolar"],
        vec!["model", "example", "koszul"],
        vec![
            "cocycle",
            "enumerate",
            "--group",
            r#"{"orders":[2]}"#,
            "--coeffs",
            r#"{"orders":[4]}"#,
        ],
    ] {
        let out = braidcat(&args);
        let first = stdout_json(&out);
        let again: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&first).unwrap()).unwrap();
        assert_eq!(first, again, "round trip for {args:?}");
    }
}

#[test]
fn model_check_reports_coherence() {
    let example = braidcat(&["model", "example", "nonpolar"]);
    let out = braidcat_stdin(
        &["model", "check"],
        std::str::from_utf8(&example.stdout).unwrap(),
    );
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["pentagon"]["pass"], "true");
    assert_eq!(json["picard"], false);
    assert_eq!(json["pi0"]["orders"][0], 2);
    assert_eq!(json["pi1"]["orders"][0], 4);
    assert_eq!(json["signature_table"]["1"]["coeffs"][0], 1);
}

#[test]
fn invalid_cocycle_model_check_exits_2() {
    // h = 0 with c = xy fails the first hexagon identity
    let doc = r#"{"group":{"orders":[2]},"coeffs":{"orders":[4]},
                  "h":{},"c":{"1|1":{"coeffs":[1]}}}"#;
    let out = braidcat_stdin(&["model", "check"], doc);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn polar_cover_of_builtin() {
    let example = braidcat(&["model", "example", "nonpolar"]);
    let out = braidcat_stdin(
        &["polar-cover"],
        std::str::from_utf8(&example.stdout).unwrap(),
    );
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["cover_group"]["orders"][0], 0);
    assert_eq!(json["kernel_rank"], 1);
    assert_eq!(json["strict_cocycle"]["h"], "zero");
    // the base class is non-polar, so no comparison cells can exist
    assert_eq!(json["comparison_cells"], serde_json::Value::Null);
}

#[test]
fn unknown_example_exits_1() {
    let out = braidcat(&["model", "example", "nosuch"]);
    assert_eq!(out.status.code(), Some(1));
}
