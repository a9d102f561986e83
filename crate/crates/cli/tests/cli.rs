use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use anneid::{catalog, FiniteAnneid};
use tempfile::TempDir;

fn anneid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anneid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn write_anneid(dir: &Path, a: &FiniteAnneid) -> PathBuf {
    write(
        dir,
        &format!("{}.json", a.name()),
        &a.to_document().to_json(),
    )
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_triangular() {
    let dir = TempDir::new().unwrap();
    let t = write_anneid(dir.path(), &catalog::triangular());
    let o = anneid(&["validate", s(&t)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("valid anneid T"));
}

#[test]
fn validate_rejects_overlapping_blocks() {
    let dir = TempDir::new().unwrap();
    let doc = r#"{"name":"bad","elements":["0","a"],"blocks":[[1],[1]],
        "add":[[[0,1],[1,0]],[[0,1],[1,0]]],"mul":[[0,0],[0,0]]}"#;
    let p = write(dir.path(), "bad.json", doc);
    let o = anneid(&["validate", s(&p)]);
    assert_eq!(code(&o), 2);
}

#[test]
fn validate_reports_associativity_witness() {
    let dir = TempDir::new().unwrap();
    // aa = b, ba = a: (aa)a = a but a(aa) = ab = 0
    let doc = r#"{"name":"nonassoc","elements":["0","a","b"],"blocks":[[1],[2]],
        "add":[[[0,1],[1,0]],[[0,2],[2,0]]],"mul":[[0,0,0],[0,2,0],[0,1,0]]}"#;
    let p = write(dir.path(), "nonassoc.json", doc);
    let o = anneid(&["validate", s(&p)]);
    assert_eq!(code(&o), 1);
    assert!(
        stdout(&o).contains("associativity at (a, a, a)"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn malformed_json_exits_2() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "x.json", "{ not json");
    for cmd in ["validate", "ideals", "radicals", "verify"] {
        assert_eq!(code(&anneid(&[cmd, s(&p)])), 2, "{cmd}");
    }
    assert_eq!(code(&anneid(&["radicals", "/nonexistent/file.json"])), 2);
}

#[test]
fn radicals_of_triangular() {
    let dir = TempDir::new().unwrap();
    let t = write_anneid(dir.path(), &catalog::triangular());
    let o = anneid(&["radicals", s(&t)]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("G(A) = {0, b}"), "{text}");
    assert!(text.contains("G_l(A) = {0, b}"), "{text}");

    let o = anneid(&["radicals", s(&t), "--format", "structured"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["graded"], serde_json::json!(["0", "b"]));
    assert_eq!(v["large_graded"], serde_json::json!(["0", "b"]));
    assert_eq!(v["linearization"], serde_json::json!(["0", "b"]));
    for c in v["components"].as_array().unwrap() {
        assert_eq!(c["radical"], serde_json::json!(["0"]));
    }
}

#[test]
fn radicals_of_zero_multiplication_is_everything() {
    let dir = TempDir::new().unwrap();
    let z = write_anneid(dir.path(), &catalog::z2z());
    let o = anneid(&["radicals", s(&z), "--format", "structured"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["graded"], v["large_graded"]);
    assert_eq!(v["graded"].as_array().unwrap().len(), 2);
}

#[test]
fn bounds_exit_3() {
    let dir = TempDir::new().unwrap();
    let t = write_anneid(dir.path(), &catalog::triangular());
    assert_eq!(
        code(&anneid(&["radicals", s(&t), "--max-elements", "2"])),
        3
    );
    assert_eq!(code(&anneid(&["radicals", s(&t), "--max-lin", "2"])), 3);
    assert_eq!(code(&anneid(&["ideals", s(&t), "--max-ideals", "1"])), 3);
    assert_eq!(code(&anneid(&["verify", s(&t), "--max-lin", "2"])), 3);
}

#[test]
fn zero_bound_is_rejected() {
    let dir = TempDir::new().unwrap();
    let t = write_anneid(dir.path(), &catalog::triangular());
    let o = anneid(&["radicals", s(&t), "--max-elements", "0"]);
    assert_ne!(code(&o), 0);
}

#[test]
fn ideals_of_z4() {
    let dir = TempDir::new().unwrap();
    let z4 = write_anneid(dir.path(), &catalog::z4());
    let o = anneid(&["ideals", s(&z4), "--format", "structured"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["two_sided"].as_array().unwrap().len(), 3);
    assert_eq!(v["maximal_two_sided"], serde_json::json!([["0", "2"]]));
    let text = stdout(&anneid(&["ideals", s(&z4)]));
    assert!(
        text.contains("maximal right ideals (1):\n  {0, 2}\n"),
        "{text}"
    );
}

#[test]
fn verify_single_file_holds() {
    let dir = TempDir::new().unwrap();
    let t = write_anneid(dir.path(), &catalog::triangular());
    let o = anneid(&["verify", s(&t)]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("T [file:"), "{text}");
    assert!(text.ends_with("0 fails\n"), "{text}");
}

#[test]
fn verify_empty_input() {
    let o = anneid(&["verify", "--format", "structured"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["instances"], serde_json::json!([]));
    assert_eq!(v["summary"]["instances"], 0);
}

#[test]
fn verify_exits_1_on_fails() {
    let dir = TempDir::new().unwrap();
    let m = write_anneid(dir.path(), &catalog::matrix_2x2_z2());
    let o = anneid(&["verify", s(&m)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL moduloid-simple"));
}

#[test]
fn verify_generated_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        anneid(&[
            "verify",
            "--gen",
            "builtin",
            "--count",
            "50",
            "--seed",
            "0",
            "--format",
            "structured",
            "--out",
            s(p),
        ]);
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(!x.is_empty());
    assert_eq!(x, y);
    let v: serde_json::Value = serde_json::from_slice(&x).unwrap();
    assert_eq!(v["seed"], 0);
    assert_eq!(v["summary"]["instances"], 50);
}

#[test]
fn verify_random_generator() {
    let o = anneid(&["verify", "--gen", "random", "--count", "3", "--seed", "7"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("random-7 [random:seed=7"), "{text}");
    assert!(text.contains("summary: 3 instances"));
}

#[test]
fn search_small_bound() {
    let o = anneid(&["search-counterexample", "--bound", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("none found in bounds"));
    let o = anneid(&[
        "search-counterexample",
        "--bound",
        "3",
        "--format",
        "structured",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["candidates"], 8);
    assert_eq!(v["finding"], serde_json::Value::Null);
}
