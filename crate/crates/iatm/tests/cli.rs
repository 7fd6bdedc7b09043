use std::process::{Command, Output};

fn iatm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iatm")).args(args).output().unwrap()
}

#[test]
fn solve_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for out in [&a, &b] {
        let o = iatm(&["solve", "--problem", "p2", "--iterations", "3", "--out", out.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    assert_eq!(String::from_utf8(a).unwrap().lines().count(), 26);
}

#[test]
fn table_check_exit_codes() {
    assert_eq!(iatm(&["table", "--problem", "p1", "--check"]).status.code(), Some(0));
    assert_eq!(iatm(&["table", "--problem", "p2", "--check"]).status.code(), Some(0));
    // two cells near sign changes of the error exceed the factor
    let o = iatm(&["table", "--problem", "p3", "--check"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stdout).contains("73 of 75 cells pass"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(iatm(&["solve", "--problem", "p9"]).status.code(), Some(2));
    assert_eq!(iatm(&["solve", "--problem", "p2", "--alpha", "3/2"]).status.code(), Some(2));
    assert_eq!(iatm(&["solve", "--problem", "p2", "--grid", "0.1;"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("bad.txt");
    std::fs::write(&doc, "alpha = 1\ninitial = sin(\n").unwrap();
    let o = iatm(&["solve", "--problem", doc.to_str().unwrap(), "--grid", "0.1;0.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("at 2:"));
}

#[test]
fn document_problems_solve() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("p2.txt");
    std::fs::write(&doc, iatm::problems::P2).unwrap();
    let o = iatm(&["solve", "--problem", doc.to_str().unwrap(), "--grid", "0.01;0.5", "--alpha", "9/10"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn sweep_writes_one_file_per_order_and_truncation() {
    let dir = tempfile::tempdir().unwrap();
    let o = iatm(&["sweep-alpha", "--problem", "p2", "--alphas", "4/5,1", "--out-dir", dir.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let mut names: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names, ["p2_alpha1_S2.csv", "p2_alpha1_S3.csv", "p2_alpha4_5_S2.csv", "p2_alpha4_5_S3.csv"]);
}

#[test]
fn residual_reports_each_partial_sum() {
    let o = iatm(&["residual", "--problem", "p3", "--iterations", "2", "--seed", "1"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    let labels: Vec<_> = text.lines().map(|l| l.split(' ').next().unwrap()).collect();
    assert_eq!(labels, ["exact", "S_0", "S_1", "S_2"]);
}
