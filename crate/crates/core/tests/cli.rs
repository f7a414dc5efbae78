use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn hilbcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilbcalc")).args(args).env_remove("HILBCALC_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn fixture_script_succeeds_with_expected_table() {
    let path = fixture("example52.hc");
    let out = hilbcalc(&["run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("e = (1, -1, -1)"));

    let v = json(&hilbcalc(&["--json", "run", path.to_str().unwrap()]));
    assert_eq!(v["status"], "ok");
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["results"][0]["e"], serde_json::json!([1, -1, -1]));
    assert_eq!(v["results"][2]["verdict"], "certified");
}

#[test]
fn undeclared_ideal_is_a_semantic_error() {
    let out = hilbcalc(&["run", fixture("undeclared.hc").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("undeclared.hc:2:14: undeclared ideal 'J'"), "{err}");
}

#[test]
fn non_admissible_forms_fail_verification() {
    let path = fixture("not_admissible.hc");
    let out = hilbcalc(&["run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("probably-not-admissible"));
    let v = json(&hilbcalc(&["--json", "run", path.to_str().unwrap()]));
    assert_eq!(v["status"], "verification-failed");
    assert_eq!(v["results"][0]["verdict"], "probably-not-admissible");
    assert_eq!(v["results"][0]["pass"], false);
}

#[test]
fn parse_errors_report_position_and_expectations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.hc");
    std::fs::write(&path, "ring x y;\nideal I = x*y\nseries M;\n").unwrap();
    let out = hilbcalc(&["run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("bad.hc:3:1: expected"), "{err}");
    assert!(err.contains("found keyword 'series'") || err.contains("'series'"), "{err}");
}

#[test]
fn missing_file_exits_two() {
    let out = hilbcalc(&["run", "/nonexistent/script.hc"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_reports_are_byte_identical() {
    let path = fixture("example52.hc");
    let args = ["--json", "--seed", "17", "--trials", "8", "run", path.to_str().unwrap()];
    let a = hilbcalc(&args);
    let b = hilbcalc(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 17);
}

#[test]
fn seed_comes_from_the_environment_unless_given() {
    let path = fixture("example52.hc");
    let run = |env: Option<&str>, args: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_hilbcalc"));
        c.env_remove("HILBCALC_SEED");
        if let Some(seed) = env {
            c.env("HILBCALC_SEED", seed);
        }
        let out = c.args(args).args(["--json", "run", path.to_str().unwrap()]).output().unwrap();
        json(&out)["seed"].clone()
    };
    assert_eq!(run(None, &[]), 0);
    assert_eq!(run(Some("99"), &[]), 99);
    assert_eq!(run(Some("99"), &["--seed", "5"]), 5);
}

#[test]
fn one_shot_subcommands() {
    let ring = ["--ring", "x1 x2 y1", "--ideal", "x1*y1, x2*y1"];
    let with = |cmd: &str, extra: &[&str]| {
        let mut args = vec!["--json", cmd];
        args.extend(ring);
        args.extend(extra);
        hilbcalc(&args)
    };

    let out = with("series", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"][0]["numerator"], serde_json::json!([1, 0, -2, 1]));

    let out = with("coeffs", &[]);
    assert_eq!(json(&out)["results"][0]["e"], serde_json::json!([1, -1, -1]));

    let out = with("depth", &[]);
    assert_eq!(json(&out)["results"][0]["certificate"]["depth"], 1);

    let out = with("superficial", &["--forms", "y1 - x1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"][0]["superficial_sequence"], true);

    let out = with("admissible", &["--forms", "x1, x2 + y1"]);
    assert_eq!(out.status.code(), Some(0));

    let out = with("verify", &["--forms", "y1 - x1", "--i", "1"]);
    assert_eq!(out.status.code(), Some(0));

    let out = with("verify", &["--forms", "x2", "--i", "1"]);
    assert_eq!(out.status.code(), Some(1));

    let out = with("oracle-check", &["--degree", "9"]);
    assert_eq!(out.status.code(), Some(0));

    let out = with("oracle-check", &["--degree", "90"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "truncation");

    let out = hilbcalc(&["series", "--ring", "x y", "--ideal", "x + y^2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("not homogeneous (term degrees 1, 2)"));
}

#[test]
fn quiet_prints_nothing() {
    let out = hilbcalc(&["--quiet", "run", fixture("not_admissible.hc").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}

#[test]
fn example_suites_truncation_is_a_clean_error() {
    let out = hilbcalc(&["paper-examples", "--max-degree", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("truncation"), "{}", stdout(&out));
}

#[test]
fn example_suites_pass_and_enumerate_every_index() {
    let out = hilbcalc(&["--json", "paper-examples"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let results = v["results"].as_array().unwrap();
    let embedded = results.iter().filter(|r| r["suite"] == "embedded-component").count();
    let two = results.iter().filter(|r| r["suite"] == "two-components").count();
    assert_eq!((embedded, two), (15, 10));
    // one comparison report per (suite, params, i)
    let reports: usize = results.iter().filter_map(|r| r["theorem"].as_array()).map(Vec::len).sum();
    let expected: usize =
        (2..=6).flat_map(|d| 1..d).sum::<usize>() + (2..=5).map(|s| (1..s).count() * s).sum::<usize>();
    assert_eq!(reports, expected);
    assert!(results.iter().all(|r| r["pass"] == true));
}
