use std::process::{Command, Output};

fn gf2tr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gf2tr")).args(args).output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn synthesize_small() {
    let out = gf2tr(&["synthesize", "--n", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["rank"], 3);
    let text = gf2tr(&["synthesize", "--n", "2"]);
    assert!(String::from_utf8(text.stdout).unwrap().starts_with("n 2 modulus 7 rank 3"));
}

#[test]
fn bounds_and_step() {
    let v = json(&gf2tr(&["bounds", "--n", "26"]));
    assert_eq!(v["derivative_bound"]["num"], 999);
    assert_eq!(v["derivative_bound"]["den"], 2);
    assert_eq!(v["derivative_bound"]["decimal"], "499.5");
    let s = json(&gf2tr(&["select-step", "--n", "24"]));
    assert_eq!(s["label"], "H21");
}

#[test]
fn count_places() {
    let v = json(&gf2tr(&["count-places", "--step", "H2"]));
    assert_eq!(v["N4"], 15);
    assert_eq!(v["matches_paper"]["N4"], true);
    let v = json(&gf2tr(&["count-places", "--step", "H21"]));
    assert_eq!(v["published"]["N4"], 28);
}

#[test]
fn deterministic_output() {
    for args in [
        &["synthesize", "--n", "11", "--json"][..],
        &["synthesize", "--n", "30", "--json"],
        &["bounds", "--n", "1000"],
        &["count-places", "--step", "H21"],
    ] {
        assert_eq!(gf2tr(args).stdout, gf2tr(args).stdout, "{args:?}");
    }
}

#[test]
fn verify_and_codegen_files() {
    let dir = std::env::temp_dir().join(format!("gf2tr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.json");
    std::fs::write(&good, gf2tr(&["synthesize", "--n", "5", "--json"]).stdout).unwrap();
    let g = good.to_str().unwrap();
    assert_eq!(gf2tr(&["verify", "--file", g]).status.code(), Some(0));
    assert_eq!(gf2tr(&["verify", "--file", g, "--random", "500"]).status.code(), Some(0));
    let code = gf2tr(&["codegen", "--file", g]);
    assert_eq!(code.status.code(), Some(0));
    assert!(String::from_utf8(code.stdout).unwrap().contains(" & "));

    let mut doc = json(&gf2tr(&["synthesize", "--n", "5", "--json"]));
    doc["c"][0] = serde_json::Value::String("0".into());
    let bad = dir.join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&doc).unwrap()).unwrap();
    let out = gf2tr(&["verify", "--file", bad.to_str().unwrap(), "--exhaustive", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["passed"], false);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(gf2tr(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(gf2tr(&["synthesize"]).status.code(), Some(2));
    assert_eq!(gf2tr(&["synthesize", "--n", "2", "--bogus"]).status.code(), Some(2));
    assert_eq!(gf2tr(&["count-places", "--step", "H9"]).status.code(), Some(2));
    assert_eq!(gf2tr(&["verify", "--file", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn report_passes() {
    let out = gf2tr(&["report", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out);
    assert_eq!(rows.as_array().unwrap().len(), 8);
    assert!(rows.as_array().unwrap().iter().all(|r| r["passed"] == true));
}
