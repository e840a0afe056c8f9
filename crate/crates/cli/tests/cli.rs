use std::process::Command;

use serde_json::Value;

fn burnside(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_burnside"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let (code, out, err) = burnside(&all);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn marks_tables() {
    let v = json(&["marks", "--group", "S3"]);
    assert_eq!(
        v["marks"],
        serde_json::json!([[6, 0, 0, 0], [3, 1, 0, 0], [2, 0, 2, 0], [1, 1, 1, 1]])
    );
    assert_eq!(
        json(&["marks", "--group", "e"])["marks"],
        serde_json::json!([[1]])
    );
    assert_eq!(
        json(&["marks", "--group", "(1 2 3)"])["marks"],
        serde_json::json!([[3, 0], [1, 1]])
    );
}

#[test]
fn power_of_two_points() {
    let (code, out, _) = burnside(&[
        "power",
        "--group",
        "e",
        "--element",
        "2",
        "--n",
        "2",
        "--oracle",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"2":2, "1+1":1}"#);
}

#[test]
fn power_of_basis_is_basis() {
    for n in 1..=3 {
        let v = json(&[
            "power",
            "--group",
            "S3",
            "--element",
            "[0,0,1,0]",
            "--n",
            &n.to_string(),
        ]);
        let coords = v["coords"].as_array().unwrap();
        assert_eq!(coords.len(), 1);
        assert_eq!(coords[0]["coeff"], 1);
        assert_eq!(
            coords[0]["partition"]["parts"],
            serde_json::json!([{"class": "C3", "size": n, "mult": 1}])
        );
    }
    let (code, out, _) = burnside(&["power", "--group", "C2", "--element", "0", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "0");
}

#[test]
fn json_element_input() {
    let x = r#"{"group":"C2","coords":[{"class":"e","coeff":1},{"class":"C2","coeff":1}]}"#;
    let v = json(&["power", "--group", "C2", "--element", x, "--n", "2"]);
    assert_eq!(v["n"], 2);
    assert_eq!(v["coords"].as_array().unwrap().len(), 3);
}

#[test]
fn parts_counts() {
    let (code, out, _) = burnside(&["parts", "--group", "S3", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 14);
}

#[test]
fn transfer_to_trivial_group() {
    let v = json(&[
        "induced-map",
        "--kind",
        "transfer",
        "--from",
        "C2",
        "--to",
        "e",
        "--n",
        "2",
    ]);
    assert_eq!(
        v["entries"][0],
        serde_json::json!(["1/2", "1/4", "0", "1/4", "0"])
    );
}

#[test]
fn norm_rows() {
    let (code, out, _) = burnside(&[
        "induced-map",
        "--kind",
        "norm",
        "--from",
        "C2",
        "--to",
        "S3",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("[S3] -> ([C2],3)"), "{out}");
}

#[test]
fn verify_suites() {
    let (code, out, _) = burnside(&["verify", "--suite", "gcd", "--group", "S3"]);
    assert_eq!(code, 0);
    assert!(out.contains("4 subgroup classes"));
    let (code, out, _) = burnside(&["verify", "--suite", "retract", "--group", "S3", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("40 partitions checked"));
    let (code, out, _) = burnside(&["verify", "--suite", "all", "--group", "C2", "--n", "4"]);
    assert_eq!(code, 0);
    assert!(out.lines().last().unwrap().starts_with("PASS"));
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "--format", "json", "verify", "--suite", "all", "--group", "S3", "--n", "2",
    ];
    assert_eq!(burnside(&args).1, burnside(&args).1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(burnside(&["marks", "--group", "Z9"]).0, 2);
    assert_eq!(
        burnside(&["verify", "--suite", "nope", "--group", "S3"]).0,
        2
    );
    assert_eq!(
        burnside(&["--cap-elements", "5", "marks", "--group", "S4"]).0,
        2
    );
    assert_eq!(
        burnside(&["power", "--group", "S3", "--element", "[1]", "--n", "2"]).0,
        2
    );
}
