use std::process::Command;

use coxkit::cli;
use serde_json::Value;

fn coxkit(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_coxkit")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let (code, stdout, stderr) = coxkit(&all);
    assert_eq!(code, 0, "{stderr}");
    serde_json::from_str(&stdout).expect("valid json")
}

#[test]
fn element_operations() {
    assert_eq!(coxkit(&["element", "--type", "B", "--rank", "2", "--op", "length", "-2,1"]).1, "2\n");
    assert_eq!(coxkit(&["element", "--type", "B", "--rank", "2", "--op", "length", "\u{2212}2,1"]).1, "2\n");
    assert_eq!(coxkit(&["element", "--type", "A", "--rank", "2", "--op", "inverse", "2,3,1"]).1.trim(), "[3,1,2]");
}

#[test]
fn product_json_shape() {
    let v = json(&["product", "--family", "shuffleA", "--left", "2,1", "--right", "1,2"]);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 6);
    assert!(terms.iter().all(|t| t["coeff"] == 1 && t["key"].as_array().unwrap().len() == 4));
    assert_eq!(v["left"], serde_json::json!([2, 1]));
}

#[test]
fn coproduct_json_shape() {
    let v = json(&["coproduct", "--family", "unshuffleA", "--arg", "2,1"]);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    assert_eq!(terms[1], serde_json::json!({"split": 1, "left": [1], "right": [1], "coeff": 1}));
}

#[test]
fn series_and_expand_round_trip() {
    let v = json(&["series", "--kind", "sB", "--key", "(0,2,1)", "--window", "4"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 140);
    let dir = std::env::temp_dir().join(format!("coxkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("series.json");
    std::fs::write(&file, v.to_string()).unwrap();
    let e = json(&["expand", "--input", file.to_str().unwrap(), "--type", "B", "--basis", "s"]);
    assert_eq!(e["terms"].as_array().unwrap().len(), 11);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn table_json_shape() {
    let v = json(&["table", "--type", "B", "--rank", "2", "--which", "c"]);
    assert_eq!(v["determinant"], "3");
    assert_eq!(v["c"], serde_json::json!([[1, 0, 0, 0], [0, 2, 1, 0], [0, 1, 2, 0], [0, 0, 0, 1]]));
}

#[test]
fn hecke_factors() {
    let (code, stdout, _) =
        coxkit(&["hecke", "--type", "B", "--rank", "3", "--op", "induce", "--subset", "1,2", "--module", "C:0"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("C{} + 3*C{0} + 2*C{1} + C{2} + C{0,2}"), "{stdout}");
}

#[test]
fn exit_codes() {
    // bad arguments
    assert_eq!(coxkit(&["element", "--type", "Q", "--rank", "2", "--op", "length", "1,2"]).0, 2);
    assert_eq!(coxkit(&["element", "--type", "B", "--rank", "2", "--op", "length", "1,1"]).0, 2);
    assert_eq!(coxkit(&["series", "--kind", "sB", "--key", "(0,2,1)", "--window", "2"]).0, 2);
    // caps
    assert_eq!(coxkit(&["element", "--type", "A", "--rank", "7", "--op", "length", "1,2,3,4,5,6,7,8"]).0, 3);
    assert_eq!(
        coxkit(&["--max-rank", "7", "element", "--type", "A", "--rank", "7", "--op", "length", "1,2,3,4,5,6,7,8"]).0,
        0
    );
    assert_eq!(coxkit(&["verify", "--suite", "hecke", "--type", "B", "--rank", "5"]).0, 3);
    // help and version
    assert_eq!(coxkit(&["--help"]).0, 0);
    assert_eq!(coxkit(&["--version"]).0, 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "verify", "--suite", "diagrams,duality", "--type", "B", "--rank", "2"];
    let first = coxkit(&args);
    assert_eq!(first.0, 0, "{}", first.2);
    assert_eq!(first, coxkit(&args));
    let series = ["--format", "json", "series", "--kind", "sD", "--key", "(0,3)", "--window", "4"];
    assert_eq!(coxkit(&series).1, coxkit(&series).1);
}

#[test]
fn in_process_matches_binary() {
    let args = ["product", "--family", "cupB", "--left", "-1", "--right", "2,1"];
    let out = cli::run(std::iter::once("coxkit").chain(args));
    let (code, stdout, _) = coxkit(&args);
    assert_eq!((out.code, out.stdout), (code, stdout));
}
