use realzeta::report::selftest::{check_cusp_datum, suite_inputs, Verdict};
use realzeta::report::{germ_from_input, run, to_dot, to_text, Input, Level, Options, Status, ZetaReport, SCHEMA_VERSION};
use realzeta::covering::cover_summary;
use realzeta::resolution::resolve;
use realzeta::zeta::{dl_datum, Mode};

fn poly(text: &str) -> ZetaReport {
    run(&Input::Poly(text.into()), &Options::default()).unwrap()
}

#[test]
fn json_round_trip() {
    for text in ["y^2 - x^3", "x^2 + y^6", "x*y*(x - y)*(x - 2*y)^5"] {
        let r = poly(text);
        assert_eq!(r.schema_version, SCHEMA_VERSION);
        let json = r.to_json();
        assert!(json.contains("\"schemaVersion\": 1"));
        let back = ZetaReport::from_json(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), json);
    }
    assert!(ZetaReport::from_json("{\"schemaVersion\": 1}").is_err());
}

#[test]
fn output_is_deterministic() {
    let opts = Options { modes: Mode::ALL.to_vec(), level: Level::All, series: Some(6) };
    let input = Input::Factored(vec!["x^2+y^6:2".into(), "x^2-y^3:3".into()]);
    let a = run(&input, &opts).unwrap();
    let b = run(&input, &opts).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(to_text(&a), to_text(&b));
    assert_eq!(to_dot(&a).unwrap(), to_dot(&b).unwrap());
}

#[test]
fn dot_from_report() {
    let dot = to_dot(&poly("y^2 - x^3")).unwrap();
    assert!(dot.contains("[label=\"E3 (5,6)\", shape=doublecircle]"));
    assert!(dot.contains("[label=\"E4 (1,1)\", shape=box]"));
    assert!(dot.contains("E1 -- E3;"));
}

#[test]
fn suite_has_no_failed_checks() {
    for input in suite_inputs() {
        let r = run(&input, &Options::default()).unwrap();
        let bad: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.name.clone()).collect();
        assert!(bad.is_empty(), "{:?}: {:?}", input, bad);
    }
}

#[test]
fn mode_and_level_filters() {
    let opts = Options { modes: vec![Mode::Plus], level: Level::Top, series: None };
    let r = run(&Input::Poly("y^2 - x^3".into()), &opts).unwrap();
    assert_eq!(r.zeta.len(), 1);
    let s = r.section(Mode::Plus).unwrap();
    assert!(s.top.is_some() && s.beta.is_none());
    assert_eq!(s.top.as_ref().unwrap().function, "(7 + 6s)/((1 + s)(5 + 6s))");
}

#[test]
fn dl_json_input() {
    let text = r#"{"dimension": 2, "strata": [
        {"components": [1], "betaReal": [1], "betaPlus": [2], "betaMinus": [], "chiComplex": 1, "factors": [[1, 2]]}
    ]}"#;
    let r = run(&Input::DlJson(text.into()), &Options::default()).unwrap();
    assert!(r.resolution.is_none());
    assert_eq!(r.section(Mode::Naive).unwrap().top.as_ref().unwrap().function, "1/(1 + 2s)");
    assert!(to_dot(&r).is_err());
    assert!(run(&Input::DlJson("{\"dimension\": 2}".into()), &Options::default()).is_err());
}

#[test]
fn cusp_values_and_tampered_control() {
    let germ = germ_from_input(&Input::Poly("y^2 - x^3".into())).unwrap();
    let m = resolve(&germ).unwrap();
    let mut d = dl_datum(&m, &cover_summary(&m).unwrap()).unwrap();
    assert_eq!(check_cusp_datum(&d).0, Verdict::Pass);
    for s in d.strata.iter_mut() {
        for f in s.factors.iter_mut() {
            if *f == (5, 6) {
                f.0 = 4;
            }
        }
    }
    assert_eq!(check_cusp_datum(&d).0, Verdict::Fail);
}

#[test]
fn bad_input_is_reported() {
    assert!(run(&Input::Poly("1 + x".into()), &Options::default()).is_err());
    assert!(run(&Input::Poly("x +* y".into()), &Options::default()).is_err());
    assert!(run(&Input::Factored(vec!["x:0".into()]), &Options::default()).is_err());
}
