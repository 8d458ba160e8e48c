use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loudspeaker")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stderr)));
    (v, out.status.code().unwrap())
}

#[test]
fn decide_reports_finite() {
    let (v, code) = json(&["decide", "--r", "1/2,1/2"]);
    assert_eq!(code, 0);
    assert_eq!(v["finite"], true);
    let (v, _) = json(&["decide", "--r", "0,1"]);
    assert_eq!(v["finite"], false);
    assert_eq!(v["verdict"], "infinite");
}

#[test]
fn cutout_of_first_explicit_cycle_is_a_closed_point() {
    let (v, code) = json(&["cutout", "--family", "0", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["instance"], "C_0(1)");
    assert_eq!(v["polygon"]["vertices"], serde_json::json!([["2/3", "2/3"]]));
    assert_eq!(v["polygon"]["vertex_member"], serde_json::json!([true]));
}

#[test]
fn cutout_from_explicit_cycle() {
    let (v, _) = json(&["cutout", "--cycle", "-1,0;0,1;1,0;0,-1"]);
    assert_eq!(v["polygon"]["vertices"], serde_json::json!([["0", "1"]]));
}

#[test]
fn measure_brackets_contain_the_published_values() {
    let (v, code) = json(&["measure", "--pikes", "10000"]);
    assert_eq!(code, 0);
    let num = |s: &Value| s.as_str().unwrap().parse::<f64>().unwrap();
    let (plo, phi) = (num(&v["perimeter"]["low"]), num(&v["perimeter"]["high"]));
    let (alo, ahi) = (num(&v["area"]["low"]), num(&v["area"]["high"]));
    assert!(plo <= 7.0317015814551 && 7.0317015814551 <= phi, "{v}");
    assert!(alo <= 1.1616244963841 && 1.1616244963841 <= ahi, "{v}");
}

#[test]
fn region_membership() {
    assert_eq!(json(&["region-contains", "--r", "1/2,1/2"]).0["contains"], true);
    assert_eq!(json(&["region-contains", "--r", "0,1"]).0["contains"], false);
    assert_eq!(json(&["region-contains", "--r", "1/2,-1/2"]).0["contains"], true);
    assert_eq!(json(&["region-contains", "--r", "7/8,3/8"]).0["contains"], false);
}

#[test]
fn orbit_and_witnesses() {
    let (v, _) = json(&["orbit", "--r", "1/2,1/2", "--a", "-3,2"]);
    assert_eq!(v["outcome"], "reaches_zero");
    let (v, _) = json(&["witnesses", "--r", "1/2,1/2"]);
    assert!(v["count"].as_u64().unwrap() >= 4);
}

#[test]
fn critical_checks() {
    let (v, code) = json(&["critical-check", "--n", "5", "--r", "40/41,9/41", "--z", "3,1", "--rotation", "2,-5"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["orbit"], true);
    assert_eq!(v["rotation"], true);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["decide", "--r", "1/2"]).status.code(), Some(2));
    assert_eq!(run(&["verify-sector", "--n", "6"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["measure", "--pikes", "3"]).status.code(), Some(2));
}

#[test]
fn sector_verification_exit_status() {
    let (v, code) = json(&["verify-sector", "--n", "8"]);
    assert_eq!((code, v["verdict"].as_str()), (0, Some("covered")));
    let (v, code) = json(&["verify-sector", "--n", "8", "--omit", "19"]);
    assert_eq!((code, v["verdict"].as_str()), (1, Some("failed")));
}

#[test]
fn family_check_small() {
    let (v, code) = json(&["family-check", "--n-max", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["mismatches"], 0);
}

#[test]
fn json_output_is_byte_identical() {
    let args = ["cutout", "--family", "19", "--n", "9", "--m", "1"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["verify-tiles", "--radius", "1/8"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn svg_marks_dotted_edges() {
    let out = run(&["boundary-svg", "--pikes", "9", "--sector", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<?xml") && svg.trim_end().ends_with("</svg>"));
    let lines = svg.lines().filter(|l| l.starts_with("<line")).count();
    let dashed = svg.lines().filter(|l| l.starts_with("<line") && l.contains("stroke-dasharray")).count();
    assert!(dashed > 0 && dashed < lines);
    assert!(svg.contains("<polygon"));
}
