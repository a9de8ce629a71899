//! The command-line front end, both in-process and through the binary.

use std::process::Command;

use minmodels::cli::run;
use serde_json::Value;

fn ok(args: &[&str]) -> Value {
    let out = run(std::iter::once("minmodels").chain(args.iter().copied()));
    assert_eq!(out.code, 0, "{args:?}: {}", out.stdout);
    serde_json::from_str(&out.stdout).unwrap()
}

fn err(args: &[&str]) -> Value {
    let out = run(std::iter::once("minmodels").chain(args.iter().copied()));
    assert_eq!(out.code, 1, "{args:?}: {}", out.stdout);
    serde_json::from_str(&out.stdout).unwrap()
}

const E1: &str = "1,-1,0,-617,5916";

#[test]
fn tate_example() {
    let v = ok(&["tate", "--curve", E1, "--prime", "5"]);
    assert_eq!(v["kodaira"], "III*");
    assert_eq!(v["cp"], 2);
    assert_eq!(v["vDeltaMin"], 9);
}

#[test]
fn global_count_example() {
    let v = ok(&["globalcount", "--curve", E1, "--degree", "3"]);
    assert_eq!(v["N"], 12);
    assert_eq!(v["factors"][0]["p"], 5);
    assert_eq!(v["factors"][0]["kodaira"], "III*");
    assert_eq!(v["factors"][0]["Np"], 6);
    assert_eq!(v["factors"][1]["Np"], 2);
    let w = ok(&["globalcount", "--curve", E1, "--degree", "2", "--psi", "5=1,19=1"]);
    assert_eq!(w["factors"][0]["psi"], "1");
}

#[test]
fn local_count_with_psi_and_point() {
    let v = ok(&["localcount", "--curve", E1, "--prime", "19", "--degree", "2", "--psi", "1"]);
    assert_eq!(v["psi"], "1");
    let w = ok(&["localcount", "--curve", E1, "--prime", "19", "--degree", "2", "--point", "inf"]);
    assert_eq!(w["psi"], "0");
    assert_eq!(w["total"], 2);
}

#[test]
fn invariants_and_transform() {
    let v = ok(&["invariants", "--eq-inline", "deg=1; coeffs=[1,0,1,-4,-3]"]);
    assert_eq!(v["delta"], "185");
    let t = ok(&[
        "transform",
        "--eq-inline",
        "deg=1; coeffs=[0,0,0,-625,0]",
        "--g",
        "u=5; r=0; s=0; t=0",
    ]);
    assert_eq!(t["text"], "deg=1; coeffs=[0,0,0,-1,0]");
    assert_eq!(t["integral"], true);
}

#[test]
fn equation_from_file() {
    let dir = std::env::temp_dir().join(format!("minmodels-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("e2.txt");
    std::fs::write(&path, "deg=1; coeffs=[1,0,1,-4,-3]\n").unwrap();
    let v = ok(&["invariants", "--eq", path.to_str().unwrap()]);
    assert_eq!(v["c4"], "169");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn minimality_report() {
    let v = ok(&["minimal", "--eq-inline", "deg=1; coeffs=[0,0,0,-625,0]"]);
    let by_p: Vec<(i64, bool)> =
        v.as_array().unwrap().iter().map(|r| (r["p"].as_i64().unwrap(), r["minimal"].as_bool().unwrap())).collect();
    assert_eq!(by_p, vec![(2, true), (5, false)]);
}

#[test]
fn table_lookup() {
    let out = run(["minmodels", "table1", "--type", "III*", "--cp", "2", "--degree", "3", "--psi", "0"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "6"));
    let out = run(["minmodels", "table1", "--type", "I2m", "--cp", "2m", "--m", "1", "--degree", "2", "--psi", "1"]);
    assert_eq!(out.code, 0);
    let e = err(&["table1", "--type", "I0*", "--cp", "4", "--degree", "2", "--psi", "0,0"]);
    assert_eq!(e["where"], "counting");
}

#[test]
fn sweep_csv_shape() {
    let out = run(["minmodels", "sweep-table1", "--max-m", "1"]);
    assert_eq!(out.code, 0);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("type,cp,n,m,psi,enumerate,table1,match"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.iter().any(|r| r.starts_with("I2m+1*,4,")));
    assert!(rows.iter().all(|r| r.ends_with(",true") || r.ends_with(",false")));
}

#[test]
fn errors_are_json() {
    let e = err(&["tate", "--curve", E1, "--prime", "6"]);
    assert_eq!(e["where"], "arith");
    let e = err(&["localcount", "--curve", E1, "--prime", "5", "--degree", "3", "--psi", "7,1"]);
    assert_eq!(e["where"], "counting");
    let e = err(&["localcount", "--curve", E1, "--prime", "5", "--degree", "2", "--point", "1,1"]);
    assert_eq!(e["where"], "localred");
    let e = err(&["tate", "--curve", "1,2,3", "--prime", "5"]);
    assert_eq!(e["where"], "equations");
    let e = err(&["nonsense"]);
    assert_eq!(e["where"], "cli");
}

#[test]
fn fixture_reports() {
    let v = ok(&["verify-example1"]);
    assert_eq!(v["N"], 12);
    assert_eq!(v["models"]["allValid"], true);
    let w = ok(&["verify-example2"]);
    assert_eq!(w["minimalDiscriminant"], "185");
    assert_eq!(w["N"], 1);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_minmodels");
    let good = Command::new(bin).args(["globalcount", "--curve", E1, "--degree", "3"]).output().unwrap();
    assert!(good.status.success());
    let v: Value = serde_json::from_slice(&good.stdout).unwrap();
    assert_eq!(v["N"], 12);
    let bad = Command::new(bin).args(["tate", "--curve", E1, "--prime", "1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let e: Value = serde_json::from_slice(&bad.stdout).unwrap();
    assert!(e["error"].is_string());
}
