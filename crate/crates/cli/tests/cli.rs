use std::process::Command;

fn hb1(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hb1")).args(args).output().expect("binary runs");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).expect("utf-8"))
}

#[test]
fn exit_codes() {
    assert_eq!(hb1(&["verify-h"]).0, 0);
    assert_eq!(hb1(&["no-such-suite"]).0, 2);
    assert_eq!(hb1(&["nichols", "series"]).0, 2);
    assert_eq!(hb1(&["lift", "verify", "--family", "14", "--params", "/nonexistent.json"]).0, 2);
}

#[test]
fn reports_are_byte_stable() {
    let a = hb1(&["yd", "braiding", "--tag", "M17"]);
    let b = hb1(&["yd", "braiding", "--tag", "M17"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v[0]["payload"]["braiding"].as_array().unwrap().len(), 4);
}

#[test]
fn out_file() {
    let path = std::env::temp_dir().join(format!("hb1-census-{}.json", std::process::id()));
    let (code, stdout) = hb1(&["census", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 89);
    std::fs::remove_file(path).unwrap();
}
