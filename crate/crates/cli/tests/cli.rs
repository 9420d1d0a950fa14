use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn spanmu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spanmu")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const C5: &str = "spanmu-graph v1\n5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n";

#[test]
fn construct_cycle_with_alpha() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c5.txt", C5);
    let o = spanmu(&["construct", &f, "--alpha"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["mu"]["num"], "2");
    assert_eq!(v["mu"]["den"], "1");
    assert_eq!(v["alpha"], 2);
    assert_eq!(v["tree"].as_array().unwrap().len(), 4);
}

#[test]
fn construct_complete_is_star() {
    let o = spanmu(&["construct", "--gen", "COMPLETE:n=4"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["case"], "STAR");
    assert_eq!((v["mu"]["num"].as_str(), v["mu"]["den"].as_str()), (Some("3"), Some("2")));
    assert_eq!(v["alpha"], Value::Null);

    let o = spanmu(&["construct", "--gen", "COMPLETE:n=4", "--table"]);
    assert!(stdout(&o).contains("3/2"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let split = write(dir.path(), "d.txt", "spanmu-graph v1\n4 2\n0 1\n2 3\n");
    assert_eq!(spanmu(&["construct", &split]).status.code(), Some(3));
    let bad = write(dir.path(), "bad.txt", "spanmu-graph v1\n3 1\n2 1\n");
    let o = spanmu(&["construct", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"));
    assert_eq!(spanmu(&["construct", "--gen", "NOPE:n=3"]).status.code(), Some(2));
    assert_eq!(spanmu(&["oracle", "--gen", "COMPLETE:n=6", "--cap", "100"]).status.code(), Some(5));
}

#[test]
fn verify_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c5.txt", C5);
    let json = stdout(&spanmu(&["construct", &f, "--alpha"]));
    let cert = write(dir.path(), "c5.json", &json);
    let o = spanmu(&["verify", &f, &cert]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("ok"));

    let mut v: Value = serde_json::from_str(&json).unwrap();
    v["mu"]["num"] = "9".into();
    v["mu"]["den"] = "5".into();
    let forged = write(dir.path(), "forged.json", &v.to_string());
    let o = spanmu(&["verify", &f, &forged]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("mu-mismatch"));

    let mut v: Value = serde_json::from_str(&json).unwrap();
    v["alpha"] = 3.into();
    let wrong_alpha = write(dir.path(), "alpha.json", &v.to_string());
    assert!(stderr(&spanmu(&["verify", &f, &wrong_alpha])).contains("alpha-mismatch"));

    let k4 = write(dir.path(), "k4.txt", "spanmu-graph v1\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    assert_eq!(spanmu(&["verify", &k4, &cert]).status.code(), Some(4));
}

#[test]
fn oracle_reports_optimum() {
    let o = spanmu(&["oracle", "--gen", "EXTREMAL_DUMBBELL:n=8:k=2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("optimum mu         29/14"), "{out}");
    assert!(out.contains("alpha              2"));

    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c5.txt", C5);
    let out = stdout(&spanmu(&["oracle", &f]));
    assert!(out.contains("optimum mu         2 "), "{out}");
    assert!(out.contains("constructed - opt  0"));
}

fn csv_rows(text: &str) -> Vec<csv::StringRecord> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        r.headers().unwrap().iter().collect::<Vec<_>>(),
        ["name", "n", "m", "alpha", "k", "t", "case", "mu_num", "mu_den", "bound_num", "bound_den", "gap_decimal"]
    );
    r.records().map(|x| x.unwrap()).collect()
}

#[test]
fn bench_rows() {
    let o = spanmu(&["bench", "--family", "EXTREMAL_DUMBBELL:n=40:k=4"]);
    assert!(o.status.success());
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 1);
    assert_eq!(&rows[0][3], "4");

    let o = spanmu(&["bench", "--family", "COMPLETE:n=10"]);
    let rows = csv_rows(&stdout(&o));
    assert_eq!((&rows[0][6], &rows[0][7], &rows[0][8]), ("STAR", "9", "5"));
    assert_eq!(&rows[0][11], "0.2000000000");
}

#[test]
fn bench_is_deterministic_and_sorted() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.csv");
    let args = [
        "bench", "--family", "GNP_CONNECTED:n=12:p=1/4", "--family", "CYCLE:n=7", "--reps", "5", "--seed", "3",
    ];
    let o = spanmu(&[&args[..], &["--out", out.to_str().unwrap()]].concat());
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(&out).unwrap();
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 10);
    assert_eq!(&rows[0][0], "CYCLE:n=7");
    assert_eq!(&rows[9][0], "GNP_CONNECTED:n=12:p=1/4");
    let distinct: std::collections::BTreeSet<_> = rows[5..].iter().map(|r| r.iter().collect::<Vec<_>>()).collect();
    assert!(distinct.len() > 1, "random instances should differ");
    assert_eq!(stdout(&spanmu(&args)), text);
}

#[test]
fn gen_writes_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.txt");
    let o = spanmu(&["gen", "--family", "EXTREMAL_DUMBBELL:n=8:k=2", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("spanmu-graph v1\n8 13\n"));

    let text = stdout(&spanmu(&["gen", "--family", "CYCLE:n=5"]));
    assert_eq!(text, C5);
    let text = stdout(&spanmu(&["gen", "--family", "PATH:n=4"]));
    assert_eq!(text.lines().count(), 2 + 3);
    assert_eq!(spanmu(&["gen", "--family", "EXTREMAL_DUMBBELL:n=3:k=2"]).status.code(), Some(2));
}
