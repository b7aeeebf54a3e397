use kaclie::cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("kaclie").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn roots_json() {
    let v = json(&["roots", "--type", "E6"]);
    assert_eq!(v["type"], "E6");
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 36);
    assert_eq!(v["cartan"][2][3], -1);
    let v = json(&["roots", "--type", "B", "--rank", "3"]);
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 9);
}

#[test]
fn chevalley_verify() {
    let v = json(&["chevalley", "--type", "G2", "--verify"]);
    assert_eq!(v["jacobi_ok"], true);
    let v = json(&["chevalley", "--type", "A2"]);
    assert_eq!(v["n_table"].as_array().unwrap().len(), 12);
}

#[test]
fn kac_classify_twisted() {
    let v = json(&["kac", "classify", "--type", "A", "--rank", "5", "--k", "2", "--s", "1,0,0,0"]);
    assert_eq!(v["order"], 2);
    assert_eq!(v["fixed_subalgebra"], "C3");
    let v = json(&["kac", "classify", "--type", "D4", "--k", "3", "--s", "1,0,0"]);
    assert_eq!(v["fixed_subalgebra"], "G2");
    assert_eq!(v["eigenspace_dims"]["1"], 7);
}

#[test]
fn symspace_or_and_tables() {
    let v = json(&["symspace", "or", "--type", "Dn", "--rank", "6", "--coords", "0,0,1,0,0,0,0", "--k", "1"]);
    assert_eq!(v["verdict"]["satisfied"], true);
    let (code, _, err) = call(&["symspace", "or", "--type", "D6", "--coords", "0,1,0,0,0,0,0"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:") && err.lines().count() == 1, "{err}");
    let v = json(&["tables", "--which", "or", "--max-n", "5"]);
    assert!(v.as_array().unwrap().iter().any(|r| r["algebra"] == "A1" && r["satisfied"] == false));
    let v = json(&["tables", "--which", "dims", "--max-n", "5"]);
    assert!(v.as_array().unwrap().iter().all(|r| r["dim_x_sigma"].as_u64().unwrap() > 0));
    let (code, text, _) = call(&["--format", "text", "symspace", "tables", "--max-n", "4"]);
    assert_eq!(code, 0);
    assert!(text.contains("dim X(s)"));
}

#[test]
fn cohom_commands() {
    let v = json(&["cohom", "poincare", "--type", "E6", "--levi", "4"]);
    assert_eq!(v["factored"], "t^29(1+t)(1+t^3)^3(1+t^5)^2");
    assert_eq!(v["coefficients"][29], 1);
    let v = json(&["cohom", "support", "--type", "C", "--rank", "8", "--degree", "28"]);
    assert_eq!(v["subsets"], serde_json::json!(["{psi2}", "{psi1,psi2}"]));
    let v = json(&["cohom", "th2", "--type", "F", "--rank", "4"]);
    let row = v["rows"].as_array().unwrap().iter().find(|r| r["degree"] == 16).unwrap();
    assert_eq!(row["dual_degree"], 36);
    assert_eq!(row["support"]["subsets"], serde_json::json!([[0], [3]]));
}

#[test]
fn numfield_commands() {
    let v = json(&["numfield", "two-nonreal", "--degree", "5", "--params", "2,2,4,6"]);
    assert_eq!(v["real_roots"], 3);
    assert_eq!(v["eisenstein_at_2"], true);
    let v = json(&["numfield", "two-nonreal", "--degree", "7"]);
    assert_eq!(v["real_roots"], 5);
    let v = json(&["numfield", "shift", "--coeffs", "-2,0,1", "--positive", "1", "--negative", "1"]);
    assert_eq!(v["r"], "0");
}

#[test]
fn usage_and_validation_errors() {
    assert_eq!(call(&["--bogus"]).0, 1);
    assert_eq!(call(&["roots"]).0, 1);
    assert_eq!(call(&["roots", "--type", "E9"]).0, 1);
    assert_eq!(call(&["roots", "--type", "D"]).0, 1);
    assert_eq!(call(&["roots", "--type", "D4", "--rank", "5"]).0, 1);
    assert_eq!(call(&["numfield", "two-nonreal", "--degree", "4", "--params", "3,2,4"]).0, 1);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn output_is_deterministic() {
    let a = call(&["--format", "text", "cohom", "th2", "--type", "D5"]);
    let b = call(&["--format", "text", "cohom", "th2", "--type", "D5"]);
    assert_eq!(a, b);
    let a = call(&["tables", "--which", "or", "--max-n", "6"]);
    assert_eq!(a, call(&["tables", "--which", "or", "--max-n", "6"]));
}
