use std::io::Write;
use std::process::{Command, Output};

fn realzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_realzeta")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn text_report_succeeds() {
    let o = realzeta(&["--poly", "y^2 - x^3", "--mode", "naive"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("Z_top = (5 + 4s)/((1 + s)(5 + 6s))"));
    assert!(s.ends_with("0 failed\n"));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(realzeta(&["--poly", "1 + x"]).status.code(), Some(2));
    assert_eq!(realzeta(&["--poly", "x^^2"]).status.code(), Some(2));
    assert_eq!(realzeta(&["--dl-json", "/nonexistent/datum.json"]).status.code(), Some(2));
    assert_eq!(realzeta(&["--poly", "x", "--mode", "sideways"]).status.code(), Some(2));
    assert_eq!(realzeta(&[]).status.code(), Some(2));
}

#[test]
fn json_is_stable_and_versioned() {
    let args = ["--factored", "x^2+y^6:2", "--factored", "x^2-y^3:3", "--format", "json", "--series", "4"];
    let a = realzeta(&args);
    let b = realzeta(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert!(s.starts_with("{\n  \"schemaVersion\": 1,"));
    let back = realzeta::report::ZetaReport::from_json(&s).unwrap();
    assert_eq!(back.to_json(), s);
}

#[test]
fn dot_output() {
    let o = realzeta(&["--poly", "y^2 - x^3", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("graph dual {"));
    assert!(s.contains("E3 [label=\"E3 (5,6)\", shape=doublecircle];"));
    assert!(s.contains("shape=box"));
}

#[test]
fn dl_json_file() {
    let path = std::env::temp_dir().join(format!("realzeta-cli-{}.json", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(
        f,
        r#"{{"dimension": 2, "strata": [{{"components": [1], "betaReal": [1], "betaPlus": [2], "betaMinus": [], "chiComplex": 1, "factors": [[1, 2]]}}]}}"#
    )
    .unwrap();
    let o = realzeta(&["--dl-json", path.to_str().unwrap(), "--mode", "naive", "--level", "top"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Z_top = 1/(1 + 2s)"));
}

#[test]
fn self_test_runs() {
    let o = realzeta(&["--self-test"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().filter(|l| l.starts_with("criterion")).count(), 10);
    assert!(s.contains("self-test finished in"));
}
