use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn nlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nlie")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn catalog(dir: &Path, case: &str, extra: &[&str]) -> PathBuf {
    let mut args = vec!["catalog", "--n", "3", "--dim", "5", "--case", case];
    args.extend_from_slice(extra);
    let o = nlie(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    write(dir, &format!("{case}.nla"), &stdout(&o))
}

#[test]
fn verify_accepts_catalog_output() {
    let dir = TempDir::new().unwrap();
    for case in ["T32.b1", "T32.c5", "T32.d8"] {
        let f = catalog(dir.path(), case, &[]);
        let o = nlie(&["verify", f.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let f = catalog(dir.path(), "T32.d9", &["--param", "s=0x1", "--param", "t=0x0", "--param", "u=0x1"]);
    let o = nlie(&["verify", "--json", f.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "nlie/1");
    assert_eq!(v["n_lie"], true);
}

#[test]
fn verify_reports_violations() {
    let dir = TempDir::new().unwrap();
    let f = write(
        dir.path(),
        "bad.nla",
        "nla 1\nfield 2^1\narity 3\ndim 4\nbracket 1 2 3 = 0x1 e1\nbracket 1 2 4 = 0x1 e3\n",
    );
    let o = nlie(&["verify", "--json", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n_lie"], false);
    assert!(!v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn b1_file_has_one_bracket() {
    let o = nlie(&["catalog", "--n", "3", "--dim", "5", "--case", "T32.b1"]);
    assert_eq!(stdout(&o), "nla 1\nfield 2^1\narity 3\ndim 5\nbracket 2 3 4 = 0x1 e1\n");
}

#[test]
fn iso_b1_b2_is_negative_with_exit_zero() {
    let dir = TempDir::new().unwrap();
    let a = catalog(dir.path(), "T32.b1", &[]);
    let b = catalog(dir.path(), "T32.b2", &[]);
    let o = nlie(&["iso", "--json", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "not_isomorphic");
    assert!(v["reason"]["fields"].as_array().unwrap().iter().any(|f| f == "derived_in_center"));
}

#[test]
fn classify_random_c2() {
    let dir = TempDir::new().unwrap();
    let o = nlie(&["random", "--case", "T32.c2", "--n", "3", "--seed", "7"]);
    assert!(o.status.success());
    let f = write(dir.path(), "r.nla", &stdout(&o));
    let o = nlie(&["classify", "--json", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["case"], "T32.c2");
    assert_eq!(v["witness"].as_array().unwrap().len(), 5);

    // the witness carries the input back onto the catalog table
    let rows: Vec<String> = v["witness"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    let o = nlie(&["change-basis", f.to_str().unwrap(), "--matrix", &rows.join(";")]);
    assert!(o.status.success());
    let expected = nlie(&["catalog", "--n", "3", "--dim", "5", "--case", "T32.c2"]);
    assert_eq!(stdout(&o), stdout(&expected));
}

#[test]
fn random_is_reproducible() {
    let args = ["random", "--case", "T32.d9", "--n", "3", "--field", "2^3", "--seed", "42"];
    let first = nlie(&args);
    let second = nlie(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let other = nlie(&["random", "--case", "T32.d9", "--n", "3", "--field", "2^3", "--seed", "43"]);
    assert_ne!(first.stdout, other.stdout);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.nla", "nla 1\nfield 2^1\narity 3\ndim 5\nbracket 2 2 3 = 0x1 e1\n");
    let o = nlie(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 5"));

    let b1 = catalog(dir.path(), "T32.b1", &[]);
    let singular =
        "0x1 0x1 0x0 0x0 0x0;0x1 0x1 0x0 0x0 0x0;0x0 0x0 0x1 0x0 0x0;0x0 0x0 0x0 0x1 0x0;0x0 0x0 0x0 0x0 0x1";
    let o = nlie(&["change-basis", b1.to_str().unwrap(), "--matrix", singular]);
    assert_eq!(o.status.code(), Some(3));

    let o = nlie(&["catalog", "--n", "3", "--dim", "5", "--case", "T32.c3", "--param", "alpha=0x0"]);
    assert_eq!(o.status.code(), Some(3));

    let o = nlie(&["random", "--case", "T32.ebar5", "--n", "3", "--seed", "1", "--param", "r=5", "--param", "q=2"]);
    assert_eq!(o.status.code(), Some(3));

    // a scrambled GF(8) copy with a budget of one node cannot be settled
    let o = nlie(&["random", "--case", "T32.c2", "--n", "3", "--field", "2^3", "--seed", "3"]);
    let a = write(dir.path(), "a.nla", &stdout(&o));
    let o = nlie(&["catalog", "--n", "3", "--dim", "5", "--case", "T32.c2", "--field", "2^3"]);
    let b = write(dir.path(), "b.nla", &stdout(&o));
    let o = nlie(&["iso", a.to_str().unwrap(), b.to_str().unwrap(), "--budget", "1"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn catalog_writes_files() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("cat");
    let o = nlie(&["catalog", "--n", "3", "--dim", "4", "--out-dir", out.to_str().unwrap()]);
    assert!(o.status.success());
    let files: Vec<_> = std::fs::read_dir(&out).unwrap().collect();
    // L21.a, b1, b2, c1, c2 (beta = 1), d1 (three splits), d2 (two ranks)
    assert_eq!(files.len(), 10);
    for f in files {
        let p = f.unwrap().path();
        assert_eq!(nlie(&["verify", p.to_str().unwrap()]).status.code(), Some(0), "{}", p.display());
    }
}
