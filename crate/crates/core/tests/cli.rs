use std::process::Command;

use serde_json::Value;

fn daha(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_daha")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, stdout) = daha(args);
    assert_eq!(code, 0, "{args:?}");
    serde_json::from_str(&stdout).unwrap()
}

#[test]
fn info_reports_g2() {
    let v = json(&["info", "G2~"]);
    assert_eq!(v["theta"], "3a1+2a2");
    assert_eq!(v["theta_s"], "2a1+a2");
    assert_eq!(v["gram"][0][0], "2/3");
}

#[test]
fn word_gives_inversions() {
    let v = json(&["word", "G2~", "s2 s1 s2"]);
    assert_eq!(v["length"], 3);
    assert_eq!(v["reduced_word"], serde_json::json!([2, 1, 2]));
    assert_eq!(v["inversion_set"].as_array().unwrap().len(), 3);
}

#[test]
fn eval_renders_coefficients() {
    let v = json(&["eval", "C2~", "3*q^-1*ts^1/2 - tl"]);
    assert_eq!(v["terms"][0]["coeff"], "3*q^-1*ts^1/2 - tl");
    assert_eq!(v["terms"][0]["u_word"], serde_json::json!([]));
}

#[test]
fn verify_involution_passes() {
    let v = json(&["verify", "involution", "C2~", "--samples", "5", "--seed", "3"]);
    assert_eq!(v["type"], "C2~");
    assert_eq!(v["iota_type"], "B2~");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn verify_lemmas_emits_json_lines() {
    let (code, stdout) = daha(&["verify", "lemmas", "A2~"]);
    assert_eq!(code, 0);
    let lines: Vec<Value> = stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.iter().any(|l| l["status"] == "not-applicable"));
    assert!(lines.iter().all(|l| l["status"] != "fail"));
}

#[test]
fn verify_all_reads_a_config() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/configs/quick.toml");
    let (code, stdout) = daha(&["verify", "all", "--config", path]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.lines().count() > 3);
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(daha(&["info", "E9~"]).0, 2);
    assert_eq!(daha(&["eval", "A1~", "T5"]).0, 2);
}
