use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use bergekit::construction::ConstructionParams;
use serde_json::Value;

fn bergekit(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bergekit")).current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = bergekit(dir.path(), &["construct", "--r", "3", "--l", "1", "--q", "5^1", "--out", "h.txt"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let s = stdout(&o);
    assert!(s.contains("vertices 75\n") && s.contains("edges 100\n") && s.contains("regular degree 4\n"), "{s}");

    let params: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("h.params.json")).unwrap()).unwrap();
    assert_eq!(params["field"], "5^1");
    let p = ConstructionParams::from_json(&params).unwrap();
    assert_eq!((p.r(), p.l()), (3, 1));
    let labels: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("h.labels.json")).unwrap()).unwrap();
    assert_eq!(labels.as_array().unwrap().len(), 75);
    assert_eq!(labels[74]["part"], 2);

    let o = bergekit(dir.path(), &["verify", "--input", "h.txt", "--pattern", "k2t:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).starts_with("75 vertices, 100 edges"));
    let cert: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(cert["found"], false);
    assert_eq!(cert["pattern"], "k2t:3");

    let o = bergekit(dir.path(), &["verify", "--input", "h.txt", "--pattern", "k2t:2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn construct_rejections() {
    let dir = tempfile::tempdir().unwrap();
    let o = bergekit(dir.path(), &["construct", "--r", "3", "--l", "1", "--q", "2^1", "--out", "x.txt"]);
    assert_eq!(o.status.code(), Some(1));

    let o = bergekit(
        dir.path(),
        &["construct", "--r", "3", "--l", "2", "--q", "13^1", "--ms", "1", "--ms", "2", "--out", "x.txt"],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("s=1 t=2 i=1 j=2 k=3"), "{}", stderr(&o));

    let o = bergekit(dir.path(), &["construct", "--r", "3", "--l", "2", "--q", "5", "--out", "x.txt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("m_2"));

    let o = bergekit(dir.path(), &["construct", "--r", "3", "--l", "1", "--q", "5", "--out", "nowhere/x.txt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!dir.path().join("x.txt").exists());
}

#[test]
fn explicit_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let o = bergekit(
        dir.path(),
        &[
            "construct",
            "--r",
            "2",
            "--l",
            "1",
            "--q",
            "3",
            "--alphas",
            "0",
            "--alphas",
            "1",
            "--ms",
            "1",
            "--out",
            "g.txt",
            "--check",
        ],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let s = stdout(&o);
    assert!(s.contains("vertices 18\n") && s.contains("edges 18\n") && s.contains("k2t:2 free\n"), "{s}");

    let o = bergekit(
        dir.path(),
        &[
            "construct",
            "--r",
            "3",
            "--l",
            "2",
            "--q",
            "3^2",
            "--alphas",
            "0,0",
            "--alphas",
            "1,0",
            "--alphas",
            "2,0",
            "--out",
            "e.txt",
        ],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let s = stdout(&o);
    assert!(s.contains("ms 0,1 1,0\n") && s.contains("edges 1296\n") && s.contains("regular degree 16\n"), "{s}");

    let o =
        bergekit(dir.path(), &["construct", "--r", "3", "--l", "1", "--q", "3^2", "--alphas", "0", "--out", "e.txt"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("two.txt"), "3 4 2\n0 1 2\n0 1 3\n").unwrap();
    let o = bergekit(dir.path(), &["verify", "--input", "two.txt", "--pattern", "c2", "--out", "cert.json"]);
    assert_eq!(o.status.code(), Some(2));
    let cert: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("cert.json")).unwrap()).unwrap();
    assert_eq!(cert["found"], true);
    assert_eq!(cert["witness"]["core_vertices"], serde_json::json!([0, 1]));

    let o = bergekit(dir.path(), &["verify", "--input", "missing.txt", "--pattern", "c2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = bergekit(dir.path(), &["verify", "--input", "two.txt", "--pattern", "k4"]);
    assert_eq!(o.status.code(), Some(1));
    fs::write(dir.path().join("bad.txt"), "3 4 1\n0 1\n").unwrap();
    let o = bergekit(dir.path(), &["verify", "--input", "bad.txt", "--pattern", "c2"]);
    assert_eq!(o.status.code(), Some(1));

    // a path of two edges as a generic pattern
    fs::write(dir.path().join("p2.txt"), "3 2\n0 1\n1 2\n").unwrap();
    let o = bergekit(dir.path(), &["verify", "--input", "two.txt", "--pattern", "generic:p2.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bounds_output() {
    let dir = tempfile::tempdir().unwrap();
    let o = bergekit(dir.path(), &["bounds", "--r", "3", "--t", "2", "--n", "75"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("178.093"));

    let o = bergekit(dir.path(), &["bounds", "--r", "3", "--l", "1", "--q", "5^1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let edges = v["entries"].as_array().unwrap().iter().find(|e| e["name"] == "construction_edges").unwrap();
    assert_eq!(edges["value"], 100.0);
    assert_eq!(edges["kind"], "exact");

    let o = bergekit(dir.path(), &["bounds", "--r", "2", "--t", "1", "--n", "10"]);
    assert_eq!(o.status.code(), Some(1));
    let o = bergekit(dir.path(), &["bounds", "--r", "3", "--t", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn extremal_output() {
    let dir = tempfile::tempdir().unwrap();
    let o = bergekit(dir.path(), &["extremal", "--r", "3", "--n", "7", "--forbid", "c2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 7);
    assert_eq!(v["status"], "complete");

    let o = bergekit(dir.path(), &["extremal", "--r", "3", "--n", "2", "--forbid", "c2"]);
    assert_eq!(o.status.code(), Some(1));

    let o = bergekit(dir.path(), &["extremal", "--r", "3", "--n", "5", "--forbid", "c2,c3,k2t:3"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["value"].as_u64().unwrap() <= 4);
    let w = v["witness"].as_str().unwrap();
    assert_eq!(w.lines().count() as u64, 1 + v["value"].as_u64().unwrap());

    let o = bergekit(dir.path(), &["extremal", "--r", "3", "--n", "3", "--forbid", "c2", "--rpartite"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 9);

    let o = bergekit(dir.path(), &["extremal", "--r", "3", "--n", "9", "--forbid", "c2,c3", "--budget-nodes", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "incomplete");
}

#[test]
fn lemma_checks() {
    let dir = tempfile::tempdir().unwrap();
    let o = bergekit(dir.path(), &["--seed", "7", "lemmas", "--q", "11", "--samples", "200"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert!(v.as_array().unwrap().iter().all(|r| r["counterexample"].is_null()));
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(bergekit(dir.path(), &["bogus"]).status.code(), Some(1));
    assert_eq!(bergekit(dir.path(), &["--help"]).status.code(), Some(0));
    assert_eq!(
        bergekit(dir.path(), &["--threads", "0", "bounds", "--r", "3", "--t", "1", "--n", "5"]).status.code(),
        Some(1)
    );
}
