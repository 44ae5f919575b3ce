use std::process::{Command, Output};

use forcing_lab::expr::GraphExpr;
use forcing_lab::{edgelist, Graph};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forcing-lab"))
        .args(args)
        .env_remove("FORCING_LAB_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Value of `key` in a `key: value` report.
fn field(report: &str, key: &str) -> Option<String> {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix(": ").map(str::to_string))
}

#[test]
fn compute_tensor_path() {
    let o = run(&["compute", "--family", "tensor(path:3, complete:3)", "--inv", "zf"]);
    assert!(o.status.success());
    let r = stdout(&o);
    assert_eq!(field(&r, "zf.status").as_deref(), Some("exact"));
    assert_eq!(field(&r, "zf.value").as_deref(), Some("5"));
    assert_eq!(field(&r, "pd.status").as_deref(), Some("skipped"));
}

#[test]
fn compute_torus() {
    let o = run(&["compute", "--family", "cartesian(cycle:3, cycle:4)", "--inv", "zf"]);
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "zf.value").as_deref(), Some("6"));
}

#[test]
fn compute_edge_list_file_with_budget() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.edges");
    let g = Graph::cartesian(&Graph::cycle(4).unwrap(), &Graph::cycle(5).unwrap());
    std::fs::write(&path, edgelist::write(&g)).unwrap();
    let o = run(&["compute", "--graph", path.to_str().unwrap(), "--inv", "pd", "--budget", "1e7"]);
    assert!(o.status.success());
    let r = stdout(&o);
    let status = field(&r, "pd.status").unwrap();
    assert!(status == "exact" || status == "bounded", "{r}");

    // the descriptor rebuilds the same graph
    let e = GraphExpr::parse(&field(&r, "graph").unwrap()).unwrap();
    assert_eq!(e.build().unwrap(), g);
}

#[test]
fn over_budget_is_bounded_not_an_error() {
    let o = run(&["compute", "--family", "cartesian(cycle:4,cycle:5)", "--inv", "zf", "--budget", "100"]);
    assert!(o.status.success());
    let r = stdout(&o);
    assert_eq!(field(&r, "zf.status").as_deref(), Some("bounded"));
    let lower: usize = field(&r, "zf.lower").unwrap().parse().unwrap();
    let upper: usize = field(&r, "zf.upper").unwrap().parse().unwrap();
    assert!(lower <= 8 && 8 <= upper);
}

#[test]
fn environment_budget_applies_and_flag_wins() {
    let bin = env!("CARGO_BIN_EXE_forcing-lab");
    let args = ["compute", "--family", "cartesian(cycle:4,cycle:5)", "--inv", "zf"];
    let o = Command::new(bin).args(args).env("FORCING_LAB_BUDGET", "100").output().unwrap();
    assert_eq!(field(&stdout(&o), "zf.status").as_deref(), Some("bounded"));
    let o = Command::new(bin)
        .args(args)
        .args(["--budget", "1e7"])
        .env("FORCING_LAB_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(field(&stdout(&o), "zf.status").as_deref(), Some("exact"));
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        vec!["compute", "--family", "tensor(path:3"],
        vec!["compute", "--family", "star:5"],
        vec!["compute", "--graph", "/nonexistent/graph.edges"],
        vec!["compute", "--family", "path:3", "--budget", "lots"],
        vec!["compute"],
        vec!["verify", "thm9.9"],
        vec!["table", "nothing"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["compute", "--family", "lex(complete:2, cycle:4)", "--matrix", "adjacency"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains("time_ms"));
    let timed = stdout(&run(&["compute", "--family", "path:4", "--timings"]));
    assert!(timed.contains("zf.time_ms"));
}

#[test]
fn verify_examples() {
    let o = run(&["verify", "thm2.5", "--t", "3..6", "--n", "3..4"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.lines().last().unwrap().contains("0 failed"));
    let o = run(&["verify", "ex2.2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS ex2.2 Z(threesun×K_3)"));
    let o = run(&["verify", "cor3.8", "--n", "2..3", "--m", "3..4"]);
    assert!(o.status.success());
}

#[test]
fn verify_failure_exits_nonzero() {
    // K_2 * 2K_1 breaks the lexicographic power domination formula
    let o = run(&["verify", "eq1", "--n", "2", "--m", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL eq1"));
}

#[test]
fn tables() {
    let o = run(&["table", "certificates", "--t", "2..5", "--n", "3..4"]);
    assert!(o.status.success());
    let csv = stdout(&o);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("family,t,n,nullity,construction,construction_valid,equal"));
    assert!(lines.all(|l| l.ends_with(",true,true")));

    let o = run(&["table", "thm3.6", "--family", "path", "--t", "2..4", "--n", "3..4", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);
}
