use hb1::report::*;
use serde_json::json;

fn opts() -> Options {
    Options::default()
}

#[test]
fn verify_h_is_all_pass() {
    let r = run_suite("verify-h", None, &opts()).unwrap();
    assert!(r.len() > 40);
    assert!(r.iter().all(|c| c.status == Status::Pass), "{:?}", r.iter().find(|c| c.status != Status::Pass));
    assert_eq!(exit_code(&r), 0);
}

#[test]
fn census_summary_record() {
    let r = run_suite("census", None, &opts()).unwrap();
    assert_eq!(r.len(), 89);
    let s = r.last().unwrap();
    assert_eq!(s.name, "summary");
    assert_eq!(s.payload["sum_of_squares"], json!(256));
    assert_eq!(s.payload["count"], json!(88));
}

#[test]
fn nichols_series_record() {
    let o = Options { tag: Some("M1".into()), ..opts() };
    let r = run_suite("nichols", Some("series"), &o).unwrap();
    assert_eq!(r[0].payload["dims"], json!([1, 2, 1, 0, 0]));
    assert_eq!(r[0].status, Status::Pass);
    // The trivial character has a polynomial Nichols algebra.
    let o = Options { tag: Some("chi(0,0,0,0)".into()), max_degree: Some(5), ..opts() };
    let r = run_suite("nichols", Some("series"), &o).unwrap();
    assert_eq!(r[0].status, Status::Evidence);
}

#[test]
fn usage_errors() {
    let e = run_suite("frobnicate", None, &opts()).unwrap_err();
    assert_eq!(e.exit_code(), 2);
    let e = run_suite("nichols", Some("series"), &opts()).unwrap_err();
    assert_eq!(e.exit_code(), 2);
    let e = run_suite("census", Some("series"), &opts()).unwrap_err();
    assert_eq!(e.exit_code(), 2);
    let o = Options { tag: Some("M99".into()), ..opts() };
    assert_eq!(run_suite("yd", Some("braiding"), &o).unwrap_err().exit_code(), 2);
    let o = Options { family: Some("3".into()), ..opts() };
    assert_eq!(run_suite("lift", Some("build"), &o).unwrap_err().exit_code(), 2);
}

#[test]
fn lift_records_from_params() {
    let o = Options { family: Some("14".into()), params: Some(json!({"lambda": 1, "mu": 1, "alpha": 1})), ..opts() };
    let b = run_suite("lift", Some("build"), &o).unwrap();
    assert_eq!(b[0].payload["dim"], json!(256));
    let v = run_suite("lift", Some("verify"), &o).unwrap();
    assert!(v.iter().all(|c| c.status == Status::Pass));
    // A full spec in the parameter file works without --family.
    let o = Options { params: Some(json!({"family": "U24", "params": {"lambda": 2}})), ..opts() };
    assert_eq!(run_suite("lift", Some("build"), &o).unwrap()[0].payload["dim"], json!(256));
}

#[test]
fn lift_iso_with_target() {
    let witness = json!({
        "tau": 1,
        "images": {"p1": "p1", "p2": "p2", "q1": "q1", "q2": "q2"},
        "target": {"family": 14, "params": {"lambda": 1, "mu": 1, "alpha": 0}},
    });
    let o = Options {
        family: Some("14".into()),
        params: Some(json!({"lambda": 1, "mu": 1, "alpha": 1})),
        witness: Some(witness),
        ..opts()
    };
    let r = run_suite("lift", Some("iso"), &o).unwrap();
    assert_eq!(r[0].status, Status::Fail);
    assert_eq!(exit_code(&r), 1);
}
