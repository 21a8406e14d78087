use std::process::Command;

use serde_json::{json, Value};

fn fcstar(args: &str) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fcstar")).args(args.split_whitespace()).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json_of(args: &str) -> Value {
    let (code, out, err) = fcstar(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn cfnf_of_w1() {
    let (code, out, _) = fcstar("cfnf --type D --n 5 0 4 3 5 2 4 6 7 1");
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "[[0,4],[3,5],[2,4,6,7],[1]]");
    let v = json_of("cfnf --type D --n 5 --format json 4 0 5 3 7 6 4 2 1");
    assert_eq!(v, json!({"family": "D", "n": 5, "layers": [[0, 4], [3, 5], [2, 4, 6, 7], [1]]}));
}

#[test]
fn quoted_word() {
    let out = Command::new(env!("CARGO_BIN_EXE_fcstar"))
        .args(["cfnf", "--n", "5", "0 4 3 5 2 4 6 7 1"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "[[0,4],[3,5],[2,4,6,7],[1]]");
}

#[test]
fn domain_errors() {
    let (code, _, err) = fcstar("cfnf --type D --n 5 0 0");
    assert_eq!(code, 1);
    assert!(err.contains("NotReduced"), "{err}");
    let (code, _, err) = fcstar("cfnf --type B --n 2 2 3 2 3");
    assert_eq!(code, 1);
    assert!(err.contains("NotFullyCommutative"), "{err}");
    let (code, _, err) = fcstar("cfnf --type D --n 2 9");
    assert_eq!(code, 1);
    assert!(err.contains("InvalidLetter"), "{err}");
    assert_eq!(fcstar("phi --type D --n 3 0").0, 1);
    assert_eq!(fcstar("classify --type D --n 3 2 3").0, 1);
}

#[test]
fn usage_errors() {
    for args in ["", "cfnf --n 3 --format yaml 0", "cfnf --type D 0", "enumerate --n 3 --max-len x", "verify"] {
        assert_eq!(fcstar(args).0, 2, "{args}");
    }
    assert_eq!(fcstar("--help").0, 0);
}

#[test]
fn afunc_witness() {
    let (code, out, _) = fcstar("afunc --type D --n 2 0 1");
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "n=2 a~=2 a=1 agree=true");
}

#[test]
fn reduce_json() {
    let v = json_of("reduce --type D --n 5 --policy left --format json 0 4 3 5 2 4 6 7 1");
    let traces = v["traces"].as_array().unwrap();
    assert_eq!(traces.len(), 1);
    assert_eq!(traces[0]["steps"].as_array().unwrap().len(), 5);
    assert_eq!(traces[0]["end"]["layers"], json!([[1, 4, 6, 7]]));
    let v = json_of("reduce --type B --n 2 --mode weak --policy exhaustive --format json 0 2 3");
    assert!(v["traces"].as_array().unwrap().iter().all(|t| t["end"] == v["traces"][0]["end"]));
}

#[test]
fn classify_and_phi() {
    let v = json_of("classify --type B --n 5 --mode weak --format json 1 3 5 2 4 6 0 3 5");
    assert_eq!(v["class"], "LeftCandy");
    let v = json_of("classify --type D --n 2 --format json 0 1 2 3 4 2 0 1");
    assert_eq!(v["class"], "CZ");
    let v = json_of("phi --type B --n 5 --format json 1 3 5 2 4 6 0 3 5");
    assert_eq!(v, json!({"family": "D", "n": 5, "layers": [[1, 3, 5], [2, 4, 6], [0, 3, 5]]}));
}

#[test]
fn diagram_round_trip() {
    let v = json_of("diagram --type D --n 2 --format json 0 2 3 4 2 0 1");
    let d = fcstar::DecoratedDiagram::from_json(&v).unwrap();
    assert_eq!(d.to_json(), v);
    let (_, ascii, _) = fcstar("diagram --type D --n 2 0 2 3 4 2 0 1");
    assert!(ascii.contains("legend: b = •, w = ◦"));
    assert!(ascii.contains("strips: "));
}

#[test]
fn heap_drawing() {
    let (code, out, _) = fcstar("heap --type D --n 5 0 4 3 5 2 4 6 7 1");
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[1].split_whitespace().collect::<Vec<_>>(), ["0/1", "2", "3", "4", "5", "6/7"]);
    assert_eq!(lines[4].split_whitespace().collect::<Vec<_>>(), [".", "2", ".", "4", ".", "67"]);
    let v = json_of("heap --type B --n 2 --format json 0 1 2");
    assert_eq!(v["heap"]["labels"], json!([0, 1, 2]));
}

#[test]
fn enumerate_streams() {
    let (code, out, _) = fcstar("enumerate --type D --n 2 --max-len 1");
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 6);
    let (_, out, _) = fcstar("enumerate --type B --n 2 --max-len 3 --format json");
    for line in out.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(fcstar::FcElement::from_json(&v).unwrap().to_json(), v);
    }
    assert_eq!(fcstar("enumerate --n 3 --max-len 6 --budget 10").0, 1);
}

#[test]
fn verify_mirrors_suite() {
    let (code, out, _) = fcstar("verify classification-D --type D --n 2 --max-len 8");
    assert_eq!(code, 0);
    assert!(out.starts_with("classification-D PASS"));
    let v = json_of("verify worked-examples --format json");
    assert_eq!(v["suite"], "worked-examples");
    assert_eq!(v["failures"], json!([]));
}
