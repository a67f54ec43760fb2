use std::process::{Command, Output};

use serde_json::Value;

const TRINOMIAL: &str = "-1,-1,0,0,0,0,0,0,1";

fn bertini(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bertini"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn verify_trinomial() {
    let out = bertini(&["verify", "--poly", TRINOMIAL]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "seed", "forms", "checks", "witnesses"]);
    assert_eq!(v["command"], "verify");
    assert_eq!(v["seed"]["polynomial"], "t^8 - t - 1");
    assert_eq!(v["checks"]["curve"]["genus"]["value"], 4);
    assert_eq!(v["checks"]["galois"]["verdict"], "S8-certified");
    assert_eq!(v["checks"]["passes"], true);
    assert_eq!(v["witnesses"], serde_json::json!({}));
    assert_eq!(v["forms"]["u"][0]["e"], serde_json::json!([1, 0, 2]));
    assert_eq!(v["forms"]["Q"][0]["c"], "6");
}

#[test]
fn construct_emits_forms() {
    let out = bertini(&["construct", "--poly", TRINOMIAL]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for name in ["u", "v", "w", "Q"] {
        let terms = v["forms"][name].as_array().unwrap();
        let exps: Vec<Vec<u64>> = terms
            .iter()
            .map(|t| {
                t["e"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.as_u64().unwrap())
                    .collect()
            })
            .collect();
        let mut sorted = exps.clone();
        sorted.sort_by(|a, b| (b.iter().sum::<u64>(), b).cmp(&(a.iter().sum::<u64>(), a)));
        assert_eq!(exps, sorted, "{name} is not grlex descending");
        assert!(terms.iter().all(|t| t["c"].is_string()));
    }
    assert_eq!(v["checks"]["intermediate"]["p"], "-t^6 + t^5");
}

#[test]
fn rational_seed_is_accepted() {
    let out = bertini(&["construct", "--poly", "1/2,0,-3/4,0,0,0,0,0,1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(json(&out)["seed"]["coefficients"][0], "1/2");
}

#[test]
fn invalid_seeds_exit_2() {
    let cases = [
        ("-1,-1,0,0,0,0,0,1,1", "t^7"),
        ("-1,-1,0,0,0,0,0,0,2", "monic"),
        ("-1,-1,0,1", "9 coefficients"),
        ("-1,abc,0,0,0,0,0,0,1", "malformed"),
        ("0,-1,0,0,0,0,0,0,1", "constant term"),
        ("1,0,0,0,2,0,0,0,1", "squarefree"),
    ];
    for (poly, message) in cases {
        let out = bertini(&["construct", "--poly", poly]);
        assert_eq!(out.status.code(), Some(2), "{poly}");
        assert!(stderr(&out).contains(message), "{poly}: {}", stderr(&out));
        assert!(out.stdout.is_empty());
    }
    assert_eq!(bertini(&["verify"]).status.code(), Some(2));
    assert_eq!(bertini(&["lattice", "--d", "3"]).status.code(), Some(2));
    assert_eq!(bertini(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn failing_position_carries_witness() {
    // Roots 1, 2, −3, 5, 7, −11, 13, −14.
    let poly = "-420420,598724,-123453,-75040,19999,476,-287,0,1";
    let out = bertini(&["position", "--poly", poly]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["checks"]["no_three_collinear"]["passes"], false);
    assert_eq!(
        v["witnesses"]["no_three_collinear"]["t_distinct_at_zero"],
        "0"
    );

    let out = bertini(&["verify", "--poly", poly]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!json(&out)["witnesses"].as_object().unwrap().is_empty());
}

#[test]
fn inconclusive_galois_exits_1_with_cycle_types() {
    let out = bertini(&[
        "galois",
        "--poly",
        "1,0,0,0,0,0,0,0,1",
        "--prime-bound",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["checks"]["galois"]["verdict"], "inconclusive");
    let types = v["witnesses"]["galois"]["sampled_cycle_types"]
        .as_array()
        .unwrap();
    assert!(!types.is_empty());
    assert!(types.iter().all(|t| t["parts"]
        .as_array()
        .unwrap()
        .iter()
        .all(|p| p.as_u64().unwrap() <= 4)));
}

#[test]
fn lattice_reports() {
    let out = bertini(&["lattice", "--d", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["seed"], Value::Null);
    assert_eq!(v["forms"], Value::Null);
    assert_eq!(v["checks"]["roots"]["count"], 240);
    assert_eq!(v["checks"]["complement"]["determinant_abs"], 1);
    assert_eq!(v["checks"]["census"]["q_one"], 120);
    assert_eq!(v["checks"]["census"]["q_zero"], 135);

    let out = bertini(&["lattice", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["checks"]["roots"]["count"], 126);
    assert_eq!(v["checks"]["complement"]["determinant_abs"], 2);
}

#[test]
fn text_format_mirrors_json() {
    let out = bertini(&["verify", "--poly", TRINOMIAL, "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "command = verify");
    assert!(lines.contains(&"seed = t^8 - t - 1"));
    assert!(lines.contains(&"forms.u = x*z^2 - y^3"));
    assert!(lines.contains(&"checks.curve.genus.value = 4"));
    assert!(lines.contains(&"checks.galois.verdict = S8-certified"));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = bertini(&["lattice", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "lattice");

    let bad = dir.path().join("missing").join("report.json");
    let out = bertini(&["lattice", "--output", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
