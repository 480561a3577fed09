use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spider-la"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn construct_to(dir: &Path, sig: &str) -> String {
    let path = dir.join("cert.json");
    let o = run(&["construct", sig, "-o", path.to_str().unwrap()]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    path.to_str().unwrap().to_string()
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct_to(dir.path(), "2,3,2");
    let o = run(&["verify", &path]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("4 colors"));

    let o = run(&["verify", "--json", &path]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn tampered_certificate_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct_to(dir.path(), "4,6,8");
    let mut doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let first = doc["labeling"][0]["label"].clone();
    doc["labeling"][1]["label"] = first;
    fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();

    let o = run(&["verify", &path]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("used on"));
    assert_eq!(run(&["export-dot", &path]).status.code(), Some(1));
}

#[test]
fn claimed_colors_are_checked() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct_to(dir.path(), "3,3,3");
    let mut doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    doc["claimed_color_count"] = 3.into();
    fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(run(&["verify", &path]).status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["construct", "9,15,19"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "2,x"]).status.code(), Some(3));
    assert_eq!(run(&["bounds", "2,2"]).status.code(), Some(3));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(
        run(&["verify", "/nonexistent/cert.json"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["exact", "2,2,2,2,2,5", "--budget", "100"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        run(&["sweep", "--constructor", "solver"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn exact_and_bounds() {
    let o = run(&["exact", "2,2,2,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("Sp(2,2,2,2): chi_la = 6"));

    let o = run(&["bounds", "--json", "2^4"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exact"], 6);

    let o = run(&["bounds", "2,2,3"]);
    assert!(stdout(&o).starts_with("Sp(2,2,3): lower 4, upper 4, exact 4"));
}

#[test]
fn scan_output_is_reproducible() {
    let a = run(&["scan", "--max-q", "10", "--json"]);
    let b = run(&["scan", "--max-q", "10", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&run(&["scan", "--max-q", "10"]));
    assert!(text.contains("Sp(2,2,2,2) d=4 chi_la=6 listed-exception"));
    assert!(text
        .trim_end()
        .ends_with("16 signatures, 0 unexpected, 0 unresolved"));
}

#[test]
fn sweep_one_generator() {
    let o = run(&["sweep", "--constructor", "leg7", "--grid", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "leg7: 16 instances, 0 failures\n");
}

#[test]
fn dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct_to(dir.path(), "1,1,1");
    let out = dir.path().join("star.dot");
    let o = run(&["export-dot", &path, "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = fs::read_to_string(out).unwrap();
    assert!(dot.starts_with("graph \"Sp(1,1,1)\" {"));
    assert_eq!(dot.matches(" -- ").count(), 3);
}
