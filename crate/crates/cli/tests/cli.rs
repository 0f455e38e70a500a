use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coverideals"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).unwrap()
}

#[test]
fn cover_ideal_of_square() {
    assert!(stdout(&["ideal", "--graph", "cycle:4", "--cover"]).starts_with("<x1*x3, x2*x4>"));
}

#[test]
fn tree_complement_cover_has_n_minus_one_generators() {
    let v = json(&["ideal", "--graph", "path:7", "--complement", "--cover"]);
    assert_eq!(v["generators"].as_array().unwrap().len(), 6);
}

#[test]
fn counterexample_entries() {
    assert_eq!(stdout(&["betti", "--counterexample", "g", "--entry", "2,16"]).trim(), "196");
    assert_eq!(stdout(&["betti", "--counterexample", "h", "--entry", "2,16"]).trim(), "195");
    assert_eq!(stdout(&["--field", "2", "betti", "--counterexample", "h", "--entry", "2,16"]).trim(), "195");
}

#[test]
fn lq_checked_against_oracle() {
    let v = json(&["betti", "--graph", "complete:4", "--cover", "--power", "2", "--method", "lq", "--check", "oracle"]);
    assert_eq!(v["check"], true);
    assert_eq!(v["regularity"], 5);
    assert_eq!(v["pdim"], 3);
}

#[test]
fn formula_table_matches_lq() {
    let out = run(&["betti", "--graph", "path:6", "--complement", "--power", "3", "--method", "formula", "--check", "lq"]);
    assert!(out.status.success());
}

#[test]
fn rees_tree_is_complete_intersection() {
    let v = json(&["rees", "--graph-gj", "tree:5"]);
    assert_eq!(v["ci"]["mu_k"], 3);
    assert_eq!(v["ci"]["verdict"], "complete-intersection");
    assert_eq!(v["k1_reduced"], true);
}

#[test]
fn rees_square_has_quadratic_coincidence() {
    let v = json(&["rees", "--graph-gj", "cycle:4", "--smax", "3"]);
    let p2 = &v["coincidences"][0];
    assert_eq!(p2["s"], 2);
    assert_eq!(p2["binomials"].as_array().unwrap().len(), 1);
    assert!(v["ci"].is_null());
}

#[test]
fn rees_pentagon_is_linear_type() {
    let v = json(&["rees", "--graph-gj", "cycle:5", "--smax", "4"]);
    assert!(v["coincidences"].as_array().unwrap().iter().all(|p| p["binomials"].as_array().unwrap().is_empty()));
    assert_eq!(v["ci"]["mu_k"], 5);
    assert_eq!(v["ci"]["expected_height"], 4);
}

#[test]
fn weighted_regularity_matches_formula() {
    let v = json(&["reg", "--graph", "complete:3", "--weights", "2,1,3", "--power", "2"]);
    assert_eq!(v["regularity"], v["formula_regularity"]);
}

#[test]
fn verify_single_experiment() {
    let out = stdout(&["verify", "chu-vandermonde"]);
    assert!(out.lines().next().unwrap().starts_with("PASS chu-vandermonde"));
}

#[test]
fn formula_evaluation() {
    assert_eq!(stdout(&["formula", "complete-power", "--n", "5", "--s", "3", "--i", "2"]).trim(), "complete-power(n=5, s=3, i=2) = 30");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["ideal"]), Some(2));
    assert_eq!(code(&["ideal", "--graph", "blob:3"]), Some(2));
    assert_eq!(code(&["ideal", "--graph", "cycle:4", "--weights", "1,2"]), Some(2));
    assert_eq!(code(&["betti", "--graph", "cycle:5", "--method", "formula"]), Some(3));
    assert_eq!(code(&["betti", "--graph", "multipartite:2,3", "--method", "lq"]), Some(3));
    assert_eq!(code(&["rees", "--graph", "cycle:5", "--edge"]), Some(3));
}
