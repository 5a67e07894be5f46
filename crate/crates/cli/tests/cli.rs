use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toriparam"))
        .args(args)
        .env("TORIPARAM_COLOR", "never")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = run(&all);
    (serde_json::from_slice(&o.stdout).expect("JSON on stdout"), o.status.code().unwrap())
}

const TRIANGLE_POINTS: &str = r#"{"points": [[0,1],[-1,0],[0,0],[1,0]]}"#;

#[test]
fn square_group() {
    let o = run(&["group", &data("square.json")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("G: (λ, λ, μ, μ)\n"), "{text}");
    assert!(text.contains("G delta: (λ, λ, λ^-1, λ^-1)\n"), "{text}");
    let (v, _) = json(&["group", &data("square.json")]);
    assert_eq!(v["mu_delta"], "λ*μ");
}

#[test]
fn p2_group_has_sign_torsion() {
    let (v, code) = json(&["group", &data("p2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["G_delta"], "±(1, 1, 1)");
    assert_eq!(v["torsion_order"], "2");
}

#[test]
fn pentagon_tuple_is_not_irreducible() {
    let o = run(&["irreducible", &data("pentagon.json"), "--tuple", "(u*v,1,u,v,1)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("{x1,x3}"));
    let (_, code) = json(&["irreducible", &data("pentagon.json"), "--tuple", "(1,1,u,v,1)"]);
    assert_eq!(code, 0);
}

#[test]
fn resolve_singular_triangle() {
    let (v, code) = json(&["resolve", &data("triangle.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["added_rays"][0]["ray"], serde_json::json!([0, -1]));
    let offsets: Vec<i64> =
        v["virtual_offsets"].as_array().unwrap().iter().map(|f| f["offset"].as_i64().unwrap()).collect();
    assert_eq!(offsets, [0, 1, 1, 1]);
    assert_eq!(v["original"]["smooth"], false);
}

#[test]
fn resolved_decomposition() {
    let f = data("triangle.json");
    let (v, code) = json(&["decompose", &f, "--resolved", "--system", TRIANGLE_POINTS, "--target", "(v,u,u,u)"]);
    assert_eq!(code, 0);
    // the added ray is the last variable here
    assert_eq!(v["f"], "(v, 1, 1, u)");
    assert_eq!(v["scalar"], "1");
    let (v, code) = json(&["decompose", &f, "--system", TRIANGLE_POINTS, "--target", "(v,u,u,u)"]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().starts_with("no preimage"));
}

#[test]
fn pentagon_content() {
    let (v, code) = json(&["compose", &data("pentagon.json"), "--system", "delta", "--tuple", "(u*v,1,u,v,1)"]);
    assert_eq!(code, 0);
    assert_eq!(v["content"], "u*v^2");
    assert_eq!(v["sigma_irreducible"], false);
    let raw: Vec<String> = v["raw"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect();
    let (d, code) =
        json(&["decompose", &data("pentagon.json"), "--system", "delta", "--target", &format!("({})", raw.join(", "))]);
    assert_eq!(code, 0);
    assert_eq!(d["content"], "u*v^2");
    assert_eq!(d["f"], "(1, u, 1, 1, 1)");
}

#[test]
fn steiner_with_hints_and_a_missing_preimage() {
    let p2 = data("p2.json");
    let sys = format!("@{}", data("steiner.json"));
    let target = "(2*u^2 + 2*u*v + 2*v^2, u*v + v^2, u^2 + u*v, u*v)";
    let (v, code) =
        json(&["decompose", &p2, "--system", &sys, "--target", target, "--hints", "(u + v, u^2 + u*v + v^2)"]);
    assert_eq!(code, 0);
    assert!(v["f"] == "(v, u + v, u)" || v["f"] == "(-v, -u - v, -u)", "{}", v["f"]);
    let (_, code) = json(&["decompose", &p2, "--system", &sys, "--target", target]);
    assert_eq!(code, 1);
    let (_, code) = json(&["decompose", &p2, "--system", &sys, "--target", "(u,0,0,v)"]);
    assert_eq!(code, 1);
}

#[test]
fn hull_warning_is_reported() {
    let sys = r#"{"points": [[-1,1],[-1,0],[0,0]]}"#;
    let (v, code) = json(&["compose", &data("hirzebruch.json"), "--system", sys, "--tuple", "(u, v, 1, 1)"]);
    assert_eq!(code, 0);
    assert!(v["warnings"][0].as_str().unwrap().contains("convex hull"));
    assert_eq!(v["content"], "v");
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--target", "(u*v, u, v, 1)", "--relation", "x1*x4 - x2*x3"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = run(&["verify", "--target", "(u*v, u, v, 2)", "--relation", "x1*x4 - x2*x3"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn points_and_monomials() {
    let (v, _) = json(&["points", &data("p2.json")]);
    assert_eq!(v["count"], 6);
    let (v, _) = json(&["monomials", &data("triangle.json"), "--resolved"]);
    let rows = v["monomials"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r["exponents"].as_array().unwrap().len() == 4));
    let (v, _) = json(&["fan", &data("pentagon.json")]);
    assert_eq!(v["primitive_collections"].as_array().unwrap().len(), 5);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["fan", "no-such-file.json"]).status.code(), Some(2));
    let o = run(&["compose", &data("p2.json"), "--system", "delta", "--tuple", "(u +"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("syntax error"));
    assert_eq!(run(&["compose", &data("p2.json"), "--system", "delta", "--tuple", "(u, v)"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_toriparam"))
        .args(["points", &data("p2.json")])
        .env("TORIPARAM_COLOR", "sometimes")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tuples_from_files() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("pentagon_tuple.txt");
    std::fs::write(&path, "(u*v, 1, u, v, 1)\n").unwrap();
    let arg = format!("@{}", path.display());
    let o = run(&["irreducible", &data("pentagon.json"), "--tuple", &arg]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["group", &data("pentagon.json")];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["--json", "resolve", &data("triangle.json")];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn color_is_opt_in() {
    let o = Command::new(env!("CARGO_BIN_EXE_toriparam"))
        .args(["points", &data("p2.json")])
        .env("TORIPARAM_COLOR", "always")
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&o.stdout).contains("\x1b[1;36m"));
    assert!(!stdout(&run(&["points", &data("p2.json")])).contains('\x1b'));
}
