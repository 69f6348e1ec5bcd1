use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asm-tsscpp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).expect("one JSON document")
}

#[test]
fn enumerate_asm_n3() {
    let o = run(&["enumerate", "asm", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], "v1");
    assert_eq!(v["count"], 7);
    assert_eq!(v["objects"].as_array().unwrap().len(), 7);
    assert!(v["objects"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!([[0, 1, 0], [1, -1, 1], [0, 1, 0]])));
}

#[test]
fn enumerate_nilp_and_tsscpp() {
    let v = json(&run(&["enumerate", "nilp", "--n", "1"]));
    assert_eq!(v["count"], 1);
    let v = json(&run(&["enumerate", "tsscpp", "--n", "3"]));
    assert_eq!(v["count"], 7);
    let first = &v["objects"][0]["heights"];
    assert_eq!(first[0], serde_json::json!([6, 6, 6, 3, 3, 3]));
}

#[test]
fn enumerate_csv_has_header_and_count() {
    let out = stdout(&run(&["enumerate", "asm", "--n", "2", "--format", "csv"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "kind,n,index,object");
    assert_eq!(lines.len(), 4);
    assert_eq!(*lines.last().unwrap(), "asm,2,count,2");
}

#[test]
fn limits_are_refused() {
    let o = run(&["enumerate", "asm", "--n", "8"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("limit 7"));
    assert_eq!(run(&["genfun", "integral-A", "--n", "6"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "asm"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "asm", "--n", "x"]).status.code(), Some(2));
}

#[test]
fn genfun_routes_agree() {
    let brute = json(&run(&["genfun", "asm-tilde", "--n", "3"]));
    assert_eq!(brute["poly"], "x^2*y + x^2 + x*y^2 + x*y + x + y^2 + y");
    for route in ["integral-A", "integral-U", "integral-I", "nilp", "lgv"] {
        let v = json(&run(&["genfun", route, "--n", "3"]));
        assert_eq!(v["matrix"], brute["matrix"], "{route}");
    }
    let v = json(&run(&["genfun", "integral-I", "--n", "3", "--a", "y*(1-y)"]));
    assert_eq!(v["matrix"], brute["matrix"]);
}

#[test]
fn genfun_lgv_custom_weights() {
    let v = json(&run(&["genfun", "lgv", "--n", "3", "--weights", "t,s,1"]));
    let want = "s^2*t + s^2 + s*t^2 + s*t + s + t^2 + t";
    assert_eq!(v["poly"], want);
    assert!(v["matrix"].is_null());
}

#[test]
fn verify_reports() {
    let o = run(&["verify", "dyck", "--n", "1..4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], "v1");
    assert_eq!(v["checks"].as_array().unwrap().len(), 1 + 2 + 5 + 14);
    assert_eq!(v["pass"], true);

    let o = run(&["verify", "wheel", "--n", "2", "--samples", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["checks"].as_array().unwrap().is_empty());

    let o = run(&["verify", "doubly-refined", "--n-range", "1..5"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn reports_are_reproducible_across_workers() {
    let args = |w: &'static str| vec!["verify", "appendix-d", "--n", "1..3", "--seed", "17", "--workers", w];
    let a = run(&args("1"));
    let b = run(&args("4"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["verify", "appendix-d", "--n", "1..3", "--seed", "18"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn csv_and_out_file() {
    let dir = std::env::temp_dir().join(format!("asm-tsscpp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let o = run(&[
        "verify",
        "mrr",
        "--n",
        "1..3",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("suite,check,n,point,expected,got,pass\n"));
    assert_eq!(text.lines().count(), 4);
    std::fs::remove_dir_all(&dir).unwrap();
}
