use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ifmagnify"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn fixture(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ifmagnify-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

const REFERENCE_IFS: &str = "# reference subject\n0 0.3 0.4\n1 0.1 0.25\n2 0.5 0.3\n";

#[test]
fn classify_null_and_left_zero() {
    let null2 = fixture("null2.txt", "2\n0 0\n0 0\n");
    let o = run(&["classify", null2.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("regular: no, intra-regular: no, "));
    assert!(stdout(&o).contains("archimedean: yes"));

    let lz = fixture("leftzero2.txt", "2\n0 0\n1 1\n");
    let out = stdout(&run(&["classify", lz.to_str().unwrap()]));
    assert!(out.contains("regular: yes, intra-regular: yes, left-regular: yes, right-regular: yes"));
    assert!(out.contains("group: no, identity: none"));
}

#[test]
fn classify_rejects_non_associative_tables() {
    let bad = fixture("bad.txt", "2\n1 0\n0 0\n");
    let o = run(&["classify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("associativity fails at (x, y, z)"), "{}", stderr(&o));
}

#[test]
fn transform_reproduces_reference_values() {
    let a = fixture("reference.ifs", REFERENCE_IFS);
    let o = run(&["transform", a.to_str().unwrap(), "--beta", "0.2", "--alpha", "0.04"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "0 1/10 1/25\n1 3/50 1/100\n2 7/50 1/50\n");

    // output re-parses; identity parameters give the canonical input back
    let again = fixture("again.ifs", &stdout(&o));
    let o = run(&["transform", again.to_str().unwrap(), "--beta", "1", "--alpha", "0"]);
    assert_eq!(stdout(&o), "0 1/10 1/25\n1 3/50 1/100\n2 7/50 1/50\n");
}

#[test]
fn transform_reports_the_alpha_bound() {
    let a = fixture("reference2.ifs", REFERENCE_IFS);
    let o = run(&["transform", a.to_str().unwrap(), "--beta", "0.2", "--alpha", "0.06"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("max alpha = 1/20"), "{}", stderr(&o));
}

#[test]
fn transform_checks_the_carrier() {
    let a = fixture("reference3.ifs", REFERENCE_IFS);
    let s = fixture("c2.txt", "2\n0 1\n1 0\n");
    let o = run(&[
        "transform",
        a.to_str().unwrap(),
        "--beta",
        "1/2",
        "--alpha",
        "0",
        "--cayley",
        s.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn product_of_two_subsets() {
    let s = fixture("null2p.txt", "2\n0 0\n0 0\n");
    let a = fixture("full.ifs", "0 1 0\n1 1 0\n");
    let o = run(&["product", s.to_str().unwrap(), a.to_str().unwrap(), a.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 1 0\n1 0 1\n");
}

#[test]
fn enumerate_counts_and_tables() {
    assert_eq!(stdout(&run(&["enumerate", "2", "--count-only"])), "8\n");
    assert_eq!(stdout(&run(&["enumerate", "3", "--count-only"])), "113\n");
    assert_eq!(stdout(&run(&["enumerate", "1"])), "1\n0\n");
    let tables = stdout(&run(&["enumerate", "2"]));
    assert_eq!(tables.split("\n\n").count(), 8);
    assert_eq!(run(&["enumerate", "4"]).status.code(), Some(2));
}

#[test]
fn check_orders_two() {
    let o = run(&["check", "--orders", "2", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().last().unwrap().starts_with("8 semigroups, 0 counterexamples"));
}

#[test]
fn check_single_theorem_and_machine_mode() {
    let o = run(&["check", "--theorem", "fixedpoint", "--orders", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", "--theorem", "degeneration,characteristic", "--orders", "1", "--machine"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "# ifmagnify-report v1");
    assert!(lines[1].starts_with("theorem=characteristic\t"));
    assert!(lines[2].starts_with("theorem=degeneration\t"));
    assert!(lines[3].starts_with("summary\tsemigroups=1\t"));
}

#[test]
fn check_is_deterministic() {
    let args = ["check", "--orders", "1,2", "--seed", "42", "--grid-step", "1/2", "--random-count", "3", "--machine"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn check_rejects_unknown_theorems_and_bad_specs() {
    let o = run(&["check", "--theorem", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("equiv-bi-ideal"));
    assert_eq!(run(&["check", "--grid-step", "2/3", "--orders", "1"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--orders", "4"]).status.code(), Some(2));
}

#[test]
fn library_listing() {
    let list = stdout(&run(&["library"]));
    assert!(list.contains("nilpotent4"));
    assert_eq!(stdout(&run(&["library", "cyclic2"])), "2\n0 1\n1 0\n");
    assert_eq!(run(&["library", "nosuch"]).status.code(), Some(2));
}
