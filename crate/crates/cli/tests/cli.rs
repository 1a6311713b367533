//! End-to-end tests against the compiled binary: the documented text
//! outputs, byte-for-byte golden files for the JSON envelopes, and the
//! exit-code contract.

use std::process::{Command, Output};

fn corepath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corepath"))
        .args(args)
        .output()
        .expect("binary should run")
}

/// Runs the binary, asserts success, and returns stdout as UTF-8.
fn stdout(args: &[&str]) -> String {
    let out = corepath(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("output should be UTF-8")
}

#[test]
fn count_prints_the_bare_number() {
    assert_eq!(stdout(&["count", "--s", "3", "--d", "2", "--p", "2"]), "6\n");
}

#[test]
fn count_json_matches_the_golden_bytes() {
    let out = corepath(&["count", "--s", "3", "--d", "2", "--p", "2", "--format", "json"]);
    assert_eq!(out.stdout, include_bytes!("golden/count_s3_d2_p2.json"));
}

#[test]
fn enumerate_paths_prints_the_six_words() {
    assert_eq!(
        stdout(&["enumerate", "paths", "--s", "3", "--d", "2", "--p", "2"]),
        "UFDDD\nUDFDD\nUDDFD\nFUDDD\nFFFDD\nFFDFD\n"
    );
}

#[test]
fn enumerate_paths_json_matches_the_golden_bytes() {
    let out = corepath(&[
        "enumerate", "paths", "--s", "3", "--d", "2", "--p", "2", "--format", "json",
    ]);
    assert_eq!(out.stdout, include_bytes!("golden/enumerate_paths_s3_d2_p2.json"));
}

#[test]
fn map_core_to_path_prints_the_word() {
    assert_eq!(
        stdout(&[
            "map", "core-to-path", "--family", "5,3,3", "--partition", "[9,5,3,2,2,1,1,1,1]",
        ]),
        "UFUDDDDD\n"
    );
}

#[test]
fn map_core_to_path_json_matches_the_golden_bytes() {
    let out = corepath(&[
        "map", "core-to-path", "--family", "5,3,3", "--partition", "[9,5,3,2,2,1,1,1,1]",
        "--format", "json",
    ]);
    assert_eq!(out.stdout, include_bytes!("golden/map_core_to_path_family_5_3_3.json"));
}

#[test]
fn the_two_core_maps_invert_each_other_through_the_binary() {
    let word = stdout(&[
        "map", "core-to-path", "--family", "5,3,3", "--partition", "[9,5,3,2,2,1,1,1,1]",
    ]);
    let core = stdout(&["map", "path-to-core", "--family", "5,3,3", "--path", word.trim()]);
    assert_eq!(core, "[9,5,3,2,2,1,1,1,1]\n");
}

#[test]
fn verify_reports_each_cell_and_the_summary() {
    let out = stdout(&["verify", "--grid", "3", "2", "2"]);
    assert!(out.contains("s=3 d=2 p=2 formula=6 oracle=6 ok"), "out: {out}");
    assert!(out.contains("all counts match"), "out: {out}");
}

#[test]
fn table_emits_the_documented_csv() {
    let out = stdout(&["table", "--smax", "3", "--dmax", "2", "--pmax", "2"]);
    assert!(out.starts_with("s,d,p,count\n"), "out: {out}");
    assert!(out.contains("\n3,2,2,6\n"), "out: {out}");
}

#[test]
fn exit_codes_follow_the_documented_contract() {
    // Success.
    assert_eq!(corepath(&["count", "--s", "3", "--d", "2", "--p", "2"]).status.code(), Some(0));
    // Domain error: s and d share a factor.
    assert_eq!(corepath(&["count", "--s", "2", "--d", "2", "--p", "2"]).status.code(), Some(1));
    // Verification over a correct grid stays at zero.
    assert_eq!(corepath(&["verify", "--grid", "2", "2", "2"]).status.code(), Some(0));
    // Malformed command line.
    assert_eq!(corepath(&["count", "--s", "3", "--bogus"]).status.code(), Some(64));
    assert_eq!(corepath(&[]).status.code(), Some(64));
    // Help is not an error.
    assert_eq!(corepath(&["--help"]).status.code(), Some(0));
}
