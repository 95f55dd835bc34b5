use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

use dinterval::cli::representation_in;
use dinterval::repfile::rep_to_value;
use dinterval::{parse_graph, parse_rep, write_rep};
use dinterval_core::generators::{counterexample_graph, counterexample_two_interval_rep};
use dinterval_core::interval::d_intersection_graph;
use dinterval_core::split::{verify_split, Mode, SplitSolution};
use dinterval_core::Graph;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dinterval"));
    cmd.env_remove("DINTERVAL_LOG");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn shipped() -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/counterexample0.el");
    p.to_str().unwrap().to_string()
}

/// A fresh scratch directory per test.
fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(format!("cli-{name}"));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn documented_examples() {
    let dir = scratch("examples");
    let el = shipped();
    assert_eq!(code(&run(&["check-split", "--mode", "disjoint", &el])), 1);
    let rep = dir.join("rep.json");
    let rep = rep.to_str().unwrap();
    assert_eq!(code(&run(&["build-unit", "-d", "2", &el, "-o", rep])), 0);
    assert_eq!(code(&run(&["verify", "--unit", rep, &el])), 0);
    let k15 = run(&["claw-check", "-t", "5", &el]);
    assert_eq!(code(&k15), 0);
    assert_eq!(stdout(&k15), "K_{1,5}-free\n");
}

#[test]
fn shipped_file_is_the_counterexample() {
    let g = parse_graph(&std::fs::read_to_string(shipped()).unwrap()).unwrap();
    assert_eq!(g, counterexample_graph(0).unwrap());
    assert_eq!((g.n(), g.edge_count()), (14, 30));
}

#[test]
fn verdict_exit_codes() {
    let el = shipped();
    let k14 = run(&["claw-check", "-t", "4", &el]);
    assert_eq!(code(&k14), 1);
    assert!(stdout(&k14).starts_with("induced K_{1,4}: "));
    assert_eq!(code(&run(&["claw-check", "--e-claw", &el])), 1);
    assert_eq!(code(&run(&["build-unit", "-d", "1", &el])), 1);
    assert_eq!(code(&run(&["build-disjoint-unit", "-d", "2", &el])), 1);
    let budget = run(&[
        "check-split",
        "--mode",
        "disjoint",
        "--node-budget",
        "10",
        &el,
    ]);
    assert_eq!(code(&budget), 3);
    assert!(stdout(&budget).starts_with("exhausted\nnodes="));

    let dir = scratch("codes");
    let c4 = write(&dir, "c4.el", "p 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n");
    assert_eq!(code(&run(&["recognize-interval", &c4])), 1);
    let p4 = write(&dir, "p4.el", "p 4\ne 1 2\ne 2 3\ne 3 4\n");
    let out = dir.join("p4.json");
    let out = out.to_str().unwrap();
    assert_eq!(
        code(&run(&["build-disjoint-unit", "-d", "2", &p4, "--out", out])),
        0
    );
    assert_eq!(code(&run(&["verify", "--unit", "--disjoint", out, &p4])), 0);
}

#[test]
fn input_errors_exit_two_with_line_numbers() {
    let dir = scratch("errors");
    let bad = write(&dir, "bad.el", "p 3\ne 1 2\ne 2 2\n");
    let o = run(&["recognize-interval", &bad]);
    assert_eq!(code(&o), 2);
    assert!(
        stderr(&o).contains("line 3: self-loop at vertex 2"),
        "{}",
        stderr(&o)
    );
    let o = run(&["check-split", "--mode", "diagonal", &bad]);
    assert_eq!(code(&o), 2);
    let rep = write(
        &dir,
        "bad.json",
        r#"{"d": 1, "vertices": {"1": [["3", "1"]]}}"#,
    );
    let o = run(&["render", &rep]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("left endpoint 3 exceeds right endpoint 1"));
    assert_eq!(code(&run(&["gen", "random:0,2,1"])), 2);
    assert_eq!(code(&run(&["claw-check"])), 2);
    assert_eq!(
        code(&run(&["check-split", "--threads", "0", &shipped()])),
        2
    );
}

#[test]
fn json_outputs_round_trip() {
    let el = shipped();
    let g = counterexample_graph(0).unwrap();

    let o = run(&["recognize-interval", "--json", &el]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["interval"], Value::Bool(true));
    let rep = representation_in(&v).unwrap();
    assert_eq!(d_intersection_graph(&rep), g);

    let o = run(&["build-unit", "-d", "2", "--json", &el]);
    let v = json(&o);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["ok", "d", "representation"]);
    let built = representation_in(&v).unwrap();
    assert_eq!(rep_to_value(&built), v["representation"]);
    assert_eq!(d_intersection_graph(&built), g);

    let o = run(&["claw-check", "-t", "4", "--json", &el]);
    let v = json(&o);
    assert_eq!(v["free"], Value::Bool(false));
    assert_eq!(v["witness"]["leaves"].as_array().unwrap().len(), 4);

    let dir = scratch("json");
    let two = write(
        &dir,
        "two.json",
        &write_rep(&counterexample_two_interval_rep()),
    );
    let o = run(&["verify", "--disjoint", "--json", &two, &el]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["ok"], Value::Bool(false));
    assert_eq!(v["violations"][0]["kind"], "same-vertex-overlap");
    assert_eq!(v["violations"][0]["vertices"], serde_json::json!([8]));
}

#[test]
fn split_certificate_in_json() {
    let dir = scratch("split");
    let star = write(&dir, "k14.el", "p 5\ne 1 2\ne 1 3\ne 1 4\ne 1 5\n");
    let o = run(&["check-split", "--mode", "disjoint", "--json", &star]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["verdict"], "yes");
    assert_eq!(v["solution"]["split"], serde_json::json!([1]));
    let mut s = SplitSolution::default();
    s.split.extend(
        v["solution"]["split"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap() as usize),
    );
    for e in v["solution"]["rep_edges"].as_array().unwrap() {
        let u = e["edge"][0].as_u64().unwrap() as usize;
        let w = e["edge"][1].as_u64().unwrap() as usize;
        let pairs = e["pairs"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| (p[0].as_u64().unwrap() as u8, p[1].as_u64().unwrap() as u8))
            .collect();
        s.rep_edges.insert((u, w), pairs);
    }
    let g = Graph::from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
    assert!(verify_split(&g, &s, Mode::Disjoint).ok());

    let text = run(&[
        "check-split",
        "--mode",
        "nondisjoint",
        "--threads",
        "2",
        &star,
    ]);
    assert_eq!(code(&text), 0);
    let out = stdout(&text);
    assert!(out.starts_with("yes\nsplit: {1}\n1_1: "), "{out}");
}

#[test]
fn refutation_log() {
    let dir = scratch("log");
    let star = write(&dir, "k15.el", "p 6\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 1 6\n");
    let o = bin()
        .env("DINTERVAL_LOG", "trace")
        .args(["check-split", &star])
        .output()
        .unwrap();
    assert_eq!(code(&o), 1);
    let err = stderr(&o);
    assert!(
        err.starts_with("0\troot\tk15\nsplit search disjoint: no in "),
        "{err}"
    );
    let o = bin()
        .env("DINTERVAL_LOG", "info")
        .args(["check-split", &shipped()])
        .output()
        .unwrap();
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("v-not-unit-interval="));
    let o = bin()
        .env("DINTERVAL_LOG", "verbose")
        .args(["check-split", &star])
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn generators_and_render() {
    for name in [
        "counterexample:0",
        "counterexample:5",
        "counterexample-d:3",
        "balanced-gadget:3",
        "kbip:5,3",
    ] {
        let o = run(&["gen", name]);
        assert_eq!(code(&o), 0, "{name}");
        parse_graph(&stdout(&o)).unwrap();
    }
    let g = parse_graph(&stdout(&run(&["gen", "balanced-gadget:3"]))).unwrap();
    assert_eq!(g.n(), 82);
    let rep = parse_rep(&stdout(&run(&["gen", "random:30,4,9"]))).unwrap();
    assert_eq!(rep.len(), 30);

    let dir = scratch("render");
    let two = write(
        &dir,
        "two.json",
        &write_rep(&counterexample_two_interval_rep()),
    );
    let svg = stdout(&run(&["render", &two]));
    assert_eq!(svg.matches("<line ").count(), 19);
    let out = dir.join("fig.svg");
    assert_eq!(
        code(&run(&["render", &two, "-o", out.to_str().unwrap()])),
        0
    );
    assert_eq!(std::fs::read_to_string(out).unwrap(), svg);
}

#[test]
fn stdin_input_and_rep_input() {
    let mut child = bin()
        .args(["build-unit", "-d", "2", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    {
        use std::io::Write;
        let mut stdin = child.stdin.take().unwrap();
        stdin
            .write_all(std::fs::read_to_string(shipped()).unwrap().as_bytes())
            .unwrap();
    }
    let o = child.wait_with_output().unwrap();
    assert_eq!(code(&o), 0);
    let rep = parse_rep(&stdout(&o)).unwrap();
    assert_eq!(d_intersection_graph(&rep), counterexample_graph(0).unwrap());

    let dir = scratch("repin");
    let random = dir.join("random.json");
    assert_eq!(
        code(&run(&[
            "gen",
            "random:40,4,3",
            "-o",
            random.to_str().unwrap()
        ])),
        0
    );
    let o = run(&["build-unit", "-d", "2", random.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let built = parse_rep(&stdout(&o)).unwrap();
    let source = parse_rep(&std::fs::read_to_string(&random).unwrap()).unwrap();
    assert_eq!(d_intersection_graph(&built), d_intersection_graph(&source));
}

#[test]
fn bench_table() {
    let o = run(&["bench", "--sizes", "200,400", "--repeats", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = run(&["bench", "--sizes", "200", "--repeats", "1", "--json"]);
    let v = json(&o);
    assert_eq!(v["rows"][0]["n"], 200);
}
