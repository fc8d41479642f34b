use std::path::Path;
use std::process::{Command, Output};

use path_ideals::samples::{deep_branches, three_arms, BINARY_ELEVEN};
use path_ideals::{ClassificationReport, RootedTree, SimplicialComplex, SquarefreeMonomialIdeal};
use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_path-ideals"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_tree(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_reports() {
    let dir = tempfile::tempdir().unwrap();
    let fig = write_tree(dir.path(), "eleven.txt", BINARY_ELEVEN);
    let o = bin(&["analyze", "--input", &fig, "--t", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let r: ClassificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!r.cohen_macaulay);
    assert_eq!(r.height, 1);

    let arms = write_tree(dir.path(), "arms.json", &three_arms().to_json());
    let o = bin(&["analyze", "--input", &arms, "--t", "3"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cohen_macaulay"], true);
    assert_eq!(v["proj_dim"], 3);

    let line = write_tree(
        dir.path(),
        "l6.txt",
        &RootedTree::line(6).unwrap().to_text(),
    );
    let o = bin(&["analyze", "--input", &line, "--t", "3"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cohen_macaulay"], true);
    assert_eq!(v["gorenstein"], false);

    let o = bin(&["analyze", "--input", &line, "--t", "3", "--format", "text"]);
    assert!(stdout(&o).contains("cohen_macaulay: true"));
}

#[test]
fn analyze_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_tree(dir.path(), "bad.txt", "root 1\n1 2\n2 1\n");
    let o = bin(&["analyze", "--input", &bad, "--t", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));

    let line = write_tree(dir.path(), "l3.txt", "root 1\n1 2\n2 3\n");
    assert_eq!(
        bin(&["analyze", "--input", &line, "--t", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bin(&["analyze", "--input", &line, "--t", "1"])
            .status
            .code(),
        Some(2)
    );
    let missing = dir.path().join("nope.txt");
    assert_eq!(
        bin(&["analyze", "--input", missing.to_str().unwrap(), "--t", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn oracle_check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let deep = write_tree(dir.path(), "deep.txt", &deep_branches().to_text());
    let o = bin(&["oracle-check", "--input", &deep, "--t", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for oracle in v["oracles"].as_array().unwrap() {
        assert_eq!(oracle["verdict"], false, "{oracle}");
    }

    let l4 = write_tree(
        dir.path(),
        "l4.txt",
        &RootedTree::line(4).unwrap().to_text(),
    );
    let o = bin(&["oracle-check", "--input", &l4, "--t", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for oracle in v["oracles"].as_array().unwrap() {
        let unmixed = matches!(oracle["name"].as_str(), Some("unmixed" | "konig_unmixed"));
        assert_eq!(oracle["verdict"], unmixed, "{oracle}");
    }

    let big = write_tree(
        dir.path(),
        "big.txt",
        &RootedTree::random(30, 1).unwrap().to_text(),
    );
    assert_eq!(
        bin(&["oracle-check", "--input", &big, "--t", "3"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn batch_is_deterministic() {
    let args = ["batch", "--n-max", "10", "--count", "100", "--seed", "7"];
    let a = bin(&args);
    let b = bin(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let last = stdout(&a).lines().last().unwrap().to_string();
    let summary: Value = serde_json::from_str(&last).unwrap();
    assert_eq!(summary["summary"]["divergences"], 0);

    let empty = bin(&["batch", "--count", "0"]);
    assert_eq!(empty.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&empty).trim()).unwrap();
    assert_eq!(v["summary"]["instances"], 0);
}

#[test]
fn gen_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("corpus.jsonl");
    let o = bin(&[
        "gen",
        "--n-max",
        "9",
        "--count",
        "5",
        "--seed",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let trees: Vec<RootedTree> = text
        .lines()
        .map(|l| RootedTree::parse(l).unwrap())
        .collect();
    assert_eq!(trees, RootedTree::random_corpus(5, 9, 3).unwrap());
}

#[test]
fn export_formats() {
    let dir = tempfile::tempdir().unwrap();
    let fig = write_tree(dir.path(), "eleven.txt", BINARY_ELEVEN);
    let o = bin(&["export", "--input", &fig, "--t", "4", "--which", "ideal"]);
    let ideal = SquarefreeMonomialIdeal::from_json(&stdout(&o)).unwrap();
    assert_eq!(
        ideal.monomials(),
        ["x1*x2*x4*x8", "x1*x2*x4*x9", "x1*x3*x6*x10", "x1*x3*x7*x11"]
    );

    let l3 = write_tree(dir.path(), "l3.txt", "root 1\n1 2\n2 3\n");
    let o = bin(&[
        "export",
        "--input",
        &l3,
        "--t",
        "3",
        "--which",
        "stanley-reisner",
    ]);
    let sr = SimplicialComplex::from_json(&stdout(&o)).unwrap();
    assert_eq!(
        sr.facets().iter().map(|f| f.to_vec()).collect::<Vec<_>>(),
        vec![vec![1, 2], vec![1, 3], vec![2, 3]]
    );

    let o = bin(&["export", "--input", &fig, "--t", "4", "--which", "facet"]);
    assert_eq!(
        SimplicialComplex::from_json(&stdout(&o))
            .unwrap()
            .facet_count(),
        4
    );

    let o = bin(&["export", "--input", &fig, "--t", "4", "--which", "dot"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    let v5 = dot
        .lines()
        .find(|l| l.trim_start().starts_with("5 ["))
        .unwrap();
    assert!(v5.contains("dashed"));
    assert_eq!(dot.matches("dashed").count(), 2);
}
