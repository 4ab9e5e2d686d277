use std::process::{Command, Output};

use serde_json::Value;

fn genpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genpoly"))
        .args(args)
        .env_remove("GENPOLY_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = genpoly(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json", "--no-timing"]);
    serde_json::from_str(&ok(&all)).unwrap()
}

#[test]
fn s_poly_d2_plain() {
    let out = ok(&["s-poly", "--d", "2", "--format", "plain"]);
    for line in ["s_2^(2) = q^4", "s_2^(3) = q^3+q^2", "s_2^(4) = 1"] {
        assert!(out.lines().any(|l| l == line), "missing {line:?} in\n{out}");
    }
}

#[test]
fn s_poly_d1_m1() {
    assert_eq!(ok(&["s-poly", "--d", "1", "--m", "1"]), "s_1^(1) = 1\n");
}

#[test]
fn s_poly_d3_m8_json_is_nine_ones() {
    let v = json(&["s-poly", "--d", "3", "--m", "8"]);
    let terms = v["entries"][0]["poly"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 9);
    for (k, t) in terms.iter().enumerate() {
        assert_eq!(t, &serde_json::json!([k, "1", "1"]));
    }
}

#[test]
fn a_poly_two_variable_d2() {
    let out = ok(&["a-poly", "--d", "2", "--u"]);
    assert_eq!(out, "a_2(q,u) = (u^4+(-q-1)u^3+qu^2)/(q^3-q)\na_2(q,u) = (u^2(u-1)(u-q))/(q^3-q)\n");
    let v = json(&["a-poly", "--d", "2", "--u"]);
    assert_eq!(v["kind"], "a2");
    assert_eq!(v["entries"][0]["factored"]["u_power"], 2);
}

#[test]
fn a_poly_specializations() {
    assert_eq!(ok(&["a-poly", "--d", "2", "--m", "2"]), "a_2^(2) = q^5-q^4\n");
    assert_eq!(ok(&["a-poly", "--d", "2", "--m", "1"]), "a_2^(1) = 0\n");
}

#[test]
fn census_examples() {
    let v = json(&["census", "--d", "2", "--p", "2", "--m", "2"]);
    let c = &v["census"];
    assert_eq!((c["total"].as_u64(), c["generating"].as_u64()), (Some(35), Some(16)));
    assert_eq!((c["poly"].as_str(), c["agrees"].as_bool()), (Some("16"), Some(true)));

    let v = json(&["census", "--d", "2", "--p", "2", "--m", "0"]);
    let c = &v["census"];
    assert_eq!((c["total"].as_u64(), c["generating"].as_u64()), (Some(1), Some(0)));
    assert_eq!((c["poly"].as_str(), c["agrees"].as_bool()), (Some("0"), Some(true)));

    let v = json(&["census", "--d", "2", "--p", "2", "--m", "2", "--tuples"]);
    assert_eq!(v["census"]["generating"].as_u64(), Some(96));
    assert_eq!(v["census"]["agrees"].as_bool(), Some(true));
}

#[test]
fn census_over_budget_exits_3() {
    let o = genpoly(&["census", "--d", "3", "--p", "3", "--m", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("6174066262"));
}

#[test]
fn budget_env_var_is_honoured() {
    let o = Command::new(env!("CARGO_BIN_EXE_genpoly"))
        .args(["census", "--d", "2", "--p", "2", "--m", "2"])
        .env("GENPOLY_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = genpoly(&["census", "--d", "2", "--p", "2", "--m", "2", "--budget", "35"]);
    assert!(o.status.success());
}

#[test]
fn verify_golden_tables_passes() {
    let o = genpoly(&["verify", "--suite", "paper-tables"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.lines().filter(|l| !l.contains("checks passed")).all(|l| l.starts_with("PASS ")), "{out}");
}

#[test]
fn verify_identities_passes() {
    let v = json(&["verify", "--suite", "identities"]);
    assert_eq!(v["kind"], "verify-report");
    assert_eq!(v["report"]["passed"], true);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["s-poly", "--d", "0"][..],
        &["s-poly", "--d", "2", "--m", "5"],
        &["s-poly"],
        &["frobnicate"],
        &["s-poly", "--d", "2", "--format", "xml"],
        &["census", "--d", "2", "--p", "4", "--m", "1"],
        &["census", "--d", "2", "--p", "2", "--m", "1", "--budget", "lots"],
        &["verify", "--suite", "nope"],
    ] {
        assert_eq!(genpoly(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn large_d_needs_flag() {
    assert_eq!(genpoly(&["s-poly", "--d", "6", "--m", "36"]).status.code(), Some(3));
    assert_eq!(ok(&["s-poly", "--d", "6", "--m", "36", "--allow-large"]), "s_6^(36) = 1\n");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["s-poly", "--d", "3", "--format", "json", "--no-timing"][..],
        &["census", "--d", "2", "--p", "3", "--m", "2", "--workers", "3", "--format", "json", "--no-timing"],
        &["verify", "--suite", "paper-tables", "--format", "json", "--no-timing"],
    ] {
        assert_eq!(ok(args), ok(args), "{args:?}");
    }
}

#[test]
fn json_round_trips_through_every_format() {
    for args in [
        &["s-poly", "--d", "3"][..],
        &["a-poly", "--d", "3", "--u"],
        &["r-poly", "--d", "2"],
        &["mahler", "--d", "2"],
        &["table", "--kind", "a", "--max-d", "2"],
    ] {
        let v = json(args);
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(v, again);
        for format in ["plain", "latex", "csv"] {
            let mut all = args.to_vec();
            all.extend(["--format", format]);
            assert!(!ok(&all).is_empty());
        }
    }
}

#[test]
fn latex_table_layout() {
    let out = ok(&["s-poly", "--d", "3", "--format", "latex"]);
    assert!(out.starts_with("\\begin{eqnarray*}\n"));
    assert!(out.contains("s_3^{(2)}&=&q^{14}+q^{13}-q^{11}-q^{10},\\\\\n"));
    assert!(out.contains("s_3^{(9)}&=&1.\n\\end{eqnarray*}"));
    assert!(!out.contains("s_3^{(1)}"));
}

#[test]
fn r_poly_spot_values() {
    let v = json(&["r-poly", "--d", "4", "--m", "9"]);
    let terms = v["entries"][0]["poly"]["terms"].as_array().unwrap();
    assert_eq!(terms.first().unwrap(), &serde_json::json!([0, "1", "1"]));
    assert_eq!(terms.last().unwrap(), &serde_json::json!([39, "2", "1"]));
}
