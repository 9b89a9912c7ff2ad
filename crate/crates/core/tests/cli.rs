use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn rrlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rrlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn input(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rrlab-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn compute_prints_closure() {
    let f = input("closure.rr", "ring R = QQ[X,Y];\nideal I = (X^4, X^3*Y, X*Y^3, Y^4);\nrr_closure I;\n");
    let o = rrlab(&["compute", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("rr_closure I: "), "{text}");
    assert!(text.contains("X^2*Y^2"), "{text}");
}

#[test]
fn compute_json_echoes_bounds() {
    let f = input("bounds.rr", "ring R = QQ[X,Y];\nideal I = (X^3, Y^3);\nrr_probe X^2*Y^2, I;\n");
    let o = rrlab(&["compute", f.to_str().unwrap(), "--kmax", "5", "--window", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["k_max"], 5);
    assert_eq!(v["results"][0]["result"]["verdict"], "not-member-up-to");
    assert_eq!(v["results"][0]["result"]["k_max"], 5);
}

#[test]
fn compute_exit_codes() {
    let bad = input("bad.rr", "ring R = QQ[X,Y];\nideal I = (X, Y;\n");
    let o = rrlab(&["compute", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":2:"));
    let fail = input("fail.rr", "ring R = QQ[X,Y];\nideal I = (X^2, Y);\nassert_member X, I;\n");
    assert_eq!(rrlab(&["compute", fail.to_str().unwrap()]).status.code(), Some(1));
    let ok = input("ok.rr", "ring R = QQ[X,Y];\nideal I = (X^2, Y);\nassert_member X^2*Y, I;\n");
    assert_eq!(rrlab(&["compute", ok.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(rrlab(&["compute", ok.to_str().unwrap(), "--kmax", "1"]).status.code(), Some(2));
    assert_eq!(rrlab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn gb_respects_order_and_variables() {
    let f = input("gb.rr", "ring R = QQ[X,Y];\nideal I = (X^2 - Y^3, X*Y);\n");
    let lex_xy = stdout(&rrlab(&["gb", f.to_str().unwrap(), "--order", "lex", "--vars", "X,Y"]));
    let lex_yx = stdout(&rrlab(&["gb", f.to_str().unwrap(), "--order", "lex", "--vars", "Y,X"]));
    assert!(lex_xy.starts_with("I: "), "{lex_xy}");
    assert_ne!(lex_xy, lex_yx);
    assert!(lex_yx.contains("Y^3 - X^2"), "{lex_yx}");
}

#[test]
fn corpus_list_and_glob_selection() {
    let all = stdout(&rrlab(&["corpus", "list"]));
    assert!(all.lines().count() >= 23);
    let ex1 = stdout(&rrlab(&["corpus", "list", "--filter", "EX-1.*"]));
    let ids: Vec<&str> = ex1.lines().map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(ids, ["EX-1.10", "EX-1.3", "EX-1.4", "EX-1.5-n3", "EX-1.5-n5", "EX-1.7/4.4", "EX-1.8"]);
    assert_eq!(rrlab(&["corpus", "run", "--filter", "[bad"]).status.code(), Some(2));
}

#[test]
fn corpus_report_is_byte_stable() {
    let args = ["corpus", "run", "PROP-*", "--deterministic", "--format", "json", "--seed", "7"];
    let a = rrlab(&args);
    let b = rrlab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["seed"], 7);
}

#[test]
fn corpus_run_writes_report_file() {
    let out = std::env::temp_dir().join(format!("rrlab-report-{}.json", std::process::id()));
    let o = rrlab(&["corpus", "run", "EX-4.3", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["cases"][0]["id"], "EX-4.3");
    assert!(v["cases"][0]["assertions"][1]["replay"].as_str().unwrap().contains("reduction_number I, P;"));
    assert_eq!(rrlab(&["corpus", "run", "EX-4.3", "--kmax", "1"]).status.code(), Some(2));
}
