//! End-to-end checks of the command-line surface.

use std::process::{Command, Output};

fn zschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zschur"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn dims_fixture() {
    let out = zschur(&["dims", "3", "5"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "dim=1287 dim_I=1242 dim_quotient=45 classes=11\n"
    );
    let json = zschur(&["dims", "3", "5", "--format", "json"]);
    assert!(stdout(&json).contains("\"dim\":1287"));
}

#[test]
fn product_and_round_trip() {
    let out = zschur(&[
        "product",
        "3",
        "5",
        "0,2,0;2,1,0;0,0,0",
        "1,1,0;0,2,1;0,0,0",
    ]);
    assert!(out.status.success());
    let printed = stdout(&out);
    let matrix = printed.trim();
    // every printed matrix re-parses to the identical matrix
    let again = zschur(&["product", "3", "5", matrix, "0,0,1;0,3,0;1,0,0"]);
    assert!(again.status.success(), "printed matrix re-parses");
    // mismatched supports give 0
    let zero = zschur(&[
        "product",
        "3",
        "5",
        "5,0,0;0,0,0;0,0,0",
        "0,0,0;0,5,0;0,0,0",
    ]);
    assert_eq!(stdout(&zero).trim(), "0");
    // the JSON matrix form is accepted too
    let json_arg = zschur(&[
        "product",
        "3",
        "5",
        "[[0,2,0],[2,1,0],[0,0,0]]",
        "1,1,0;0,2,1;0,0,0",
    ]);
    assert_eq!(stdout(&json_arg), printed);
}

#[test]
fn degenerates_examples() {
    let open = "0,0,1;0,0,2;1,2,0";
    let block = "0,1,0;1,1,0;0,0,3";
    let out = zschur(&["degenerates", "3", "6", open, block]);
    assert_eq!(stdout(&out).trim(), "true");
    let rev = zschur(&["degenerates", "3", "6", block, open]);
    assert_eq!(stdout(&rev).trim(), "false");
}

#[test]
fn decompose_fixture() {
    let out = zschur(&["decompose", "4", "7", "2,0,3,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "P[2,3,2] + P[5,2] + P[2,5] + P[7]");
}

#[test]
fn cartan_totals_and_formats() {
    let out = zschur(&["cartan", "3", "5"]);
    assert!(stdout(&out).starts_with("classes=10 total=86"));
    let with_trivial = zschur(&["cartan", "3", "5", "--include-trivial"]);
    assert!(stdout(&with_trivial).starts_with("classes=11 total=87"));
    let csv = zschur(&["cartan", "3", "5", "--format", "csv"]);
    let text = stdout(&csv);
    assert!(text.starts_with("class,"));
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn quiver_dot_output() {
    let dir = std::env::temp_dir().join("zschur_cli_test_quiver.dot");
    let path = dir.to_str().unwrap();
    let out = zschur(&["quiver", "3", "5", "--dot", path]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(path).unwrap();
    assert!(dot.starts_with("digraph quiver {"));
    assert!(dot.contains("style=dashed"));
    assert!(dot.contains("label=\"1,2,2\""));
    std::fs::remove_file(path).ok();
}

#[test]
fn homdim_matches_slice_count() {
    let out = zschur(&["homdim", "3", "5", "1,2,2", "1,3,1"]);
    let text = stdout(&out);
    assert!(text.starts_with("dim=8"));
    let indec = zschur(&["homdim", "3", "5", "1,2,2", "1,3,1", "--indec"]);
    assert!(stdout(&indec).starts_with("dim=2"));
}

#[test]
fn verify_relation_file() {
    let fixture = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../core/fixtures/relations_ds0_3_2.txt"
    );
    let out = zschur(&["verify", "3", "2", "--relations", fixture]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("failures=0"));
    // a failing file exits nonzero
    let bad = std::env::temp_dir().join("zschur_cli_bad_relations.txt");
    std::fs::write(
        &bad,
        "algebra s0 3 2\nlet k1 = k 0,0,2\nlet k2 = k 0,1,1\nk1 = k2\n",
    )
    .unwrap();
    let out = zschur(&["verify", "3", "2", "--relations", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(bad).ok();
}

#[test]
fn check_command_reports() {
    let out = zschur(&["check", "1", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 failed"));
    let json = zschur(&["check", "3", "2", "--format", "json"]);
    assert!(json.status.success());
    let text = stdout(&json);
    assert!(text.contains("\"command\":\"check\""));
    assert!(text.contains("\"failures\":[]"));
}

#[test]
fn errors_exit_nonzero_with_message() {
    let out = zschur(&["product", "3", "5", "1,1;1,1", "1,1;1,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    let out = zschur(&["frobnicate", "3", "5"]);
    assert_eq!(out.status.code(), Some(1));
    let out = zschur(&[
        "product",
        "3",
        "5",
        "0,0,x;0,0,2;1,2,0",
        "0,0,1;0,0,2;1,2,0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8(out.stderr).unwrap();
    assert!(msg.contains("expected a non-negative integer"), "{msg}");
}

#[test]
fn scale_guard_refuses_large_sizes() {
    let out = zschur(&["cartan", "9", "40"]);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8(out.stderr).unwrap();
    assert!(msg.contains("exceeds cap"), "{msg}");
}

#[test]
fn output_is_deterministic_across_runs_and_threads() {
    let first = zschur(&["cartan", "3", "4"]);
    let second = zschur(&["cartan", "3", "4"]);
    assert_eq!(first.stdout, second.stdout);
    let threaded = Command::new(env!("CARGO_BIN_EXE_zschur"))
        .args(["cartan", "3", "4"])
        .env("ZSCHUR_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(first.stdout, threaded.stdout);
}
