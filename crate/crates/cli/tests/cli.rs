use std::fs;
use std::process::{Command, Output};

use gcdirac::algebra::StructureConstantsTable;

fn gcdirac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcdirac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_default_run() {
    let o = gcdirac(&["verify", "--samples", "200"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("gamma identities: 10/10 PASS"));
    assert!(text.contains("Adler postulate 5 on GC: FAILS (witness i,j)"));
    assert!(text.contains("KG symbol recovery: PASS"));
}

#[test]
fn verify_json() {
    let o = gcdirac(&["verify", "--samples", "50", "--seed", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["seed"], 3);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["ok"] == true));
}

#[test]
fn verify_mutated_table_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mutant.json");
    let mut data = StructureConstantsTable::gc().to_data();
    data.f[1][2][0] = 1.0;
    fs::write(&path, serde_json::to_string(&data).unwrap()).unwrap();
    let o = gcdirac(&["verify", "--samples", "50", "--table", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("BAD"));
}

#[test]
fn fig1_single_points() {
    let o = gcdirac(&["fig1", "--m-min", "1", "--m-max", "1", "--p-min", "0", "--p-max", "0", "--branch", "positive"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "m,p,branch,ratio\n1,0,positive,1\n");

    let o = gcdirac(&["fig1", "--m-min", "3", "--m-max", "3", "--p-min", "4", "--p-max", "4", "--branch", "positive"]);
    assert_eq!(stdout(&o), "m,p,branch,ratio\n3,4,positive,3\n");
}

#[test]
fn fig1_file_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = gcdirac(&["fig1", "-o", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    let (x, y) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(x, y);
    let text = String::from_utf8(x).unwrap();
    assert_eq!(text.lines().count(), 1 + 50 * 50 * 2);
    assert!(!text.contains("NaN") && !text.contains("inf"));
}

#[test]
fn fig1_negative_range_arguments() {
    let o = gcdirac(&[
        "fig1", "--m-min", "1", "--m-max", "2", "--m-steps", "2", "--p-min", "-1", "--p-max", "1", "--p-steps", "3",
        "--branch", "negative",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 1 + 2 * 3);
}

#[test]
fn fig1_errors() {
    let o = gcdirac(&["fig1", "--m-min", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = gcdirac(&["fig1", "--m-steps", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = gcdirac(&["fig1", "-o", "/nonexistent-dir/sub/out.csv"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn props_reports() {
    let o = gcdirac(&["props"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("commutative: yes; associative: NO (witness i,i,j); zero divisors: (i,j)"));
    assert!(text.contains("(ii)j = -j ≠ 0 = i(ij)"));

    let o = gcdirac(&["props", "--builtin", "complex"]);
    assert!(stdout(&o).contains("commutative: yes; associative: yes; zero divisors: none"));
}

#[test]
fn props_from_table_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("quaternion.json");
    fs::write(&path, serde_json::to_string_pretty(&StructureConstantsTable::quaternion()).unwrap()).unwrap();
    let o = gcdirac(&["props", "--table", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("commutative: NO"));
}

#[test]
fn props_malformed_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{\n  \"dim\": 2,\n  \"basis\": [\"1\", \"i\"\n}").unwrap();
    let o = gcdirac(&["props", "--table", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");

    let o = gcdirac(&["props", "--table", "/nonexistent/table.json"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn polar_conversions() {
    let o = gcdirac(&["polar", "0,0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("R = 1\n"));
    assert!(text.contains(&format!("theta = {}\n", std::f64::consts::FRAC_PI_2)));
    assert!(text.contains(&format!("phi = {}\n", std::f64::consts::FRAC_PI_2)));

    let o = gcdirac(&["polar", "-1,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(&format!("theta = {}\nphi = 0\n", std::f64::consts::PI)));

    let o = gcdirac(&["polar", "1,x,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(gcdirac(&[]).status.code(), Some(2));
    assert_eq!(gcdirac(&["verify", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(gcdirac(&["nope"]).status.code(), Some(2));
}
