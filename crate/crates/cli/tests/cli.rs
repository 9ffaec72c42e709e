use std::process::{Command, Output};

use domorder::monotone::{CounterexamplePair, ForbiddenSet};
use domorder::{from_graph6, is_isomorphic, parse_partition, Partition, SmallGraph};
use serde_json::Value;

fn domorder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domorder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("exactly one JSON document")
}

fn part(v: &Value) -> Partition {
    parse_partition(v.as_str().unwrap()).unwrap()
}

#[test]
fn majorize_answers_with_exit_status() {
    let o = domorder(&["majorize", "3221", "2222"]);
    assert_eq!((stdout(&o).trim(), code(&o)), ("true", 0));
    let o = domorder(&["majorize", "2222", "3221"]);
    assert_eq!((stdout(&o).trim(), code(&o)), ("false", 1));
    let v = json(&domorder(&["majorize", "3 2^2 1", "2^4", "--format", "json"]));
    assert_eq!(v["strict"], true);
    assert_eq!(part(&v["d"]), parse_partition("3221").unwrap());
}

#[test]
fn five_cycle_is_the_only_realization_of_2_5() {
    let o = domorder(&["realize", "2^5", "--format", "graph6"]);
    assert_eq!(code(&o), 0);
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 1);
    let g = from_graph6(&lines[0]).unwrap();
    assert!(is_isomorphic(&g, &SmallGraph::cycle(5).unwrap()));
}

#[test]
fn search_reports_the_certificate_and_exits_one() {
    let o = domorder(&["search", "--set", "2*K2, C4", "--max-sum", "10"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(part(&v["counterexample"]["d"]), parse_partition("32221").unwrap());
    assert_eq!(part(&v["counterexample"]["e"]), parse_partition("2^5").unwrap());
    let pair: CounterexamplePair = serde_json::from_value(v["counterexample"].clone()).unwrap();
    assert!(pair.validate(&ForbiddenSet::parse("2*K2, C4").unwrap()).unwrap());

    let o = domorder(&["search", "--set", "K2", "--max-sum", "10"]);
    assert_eq!(code(&o), 0);
    assert!(json(&o)["counterexample"].is_null());
}

#[test]
fn lattice_json_round_trips() {
    let o = domorder(&["lattice", "8", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let nodes: Vec<Partition> = v["nodes"].as_array().unwrap().iter().map(part).collect();
    let order = domorder::build_dominance_order(8, true).unwrap();
    assert_eq!(nodes, order.nodes);
    let dot = stdout(&domorder(&["lattice", "8", "--format", "dot"]));
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), order.covers.len());
}

#[test]
fn error_classes_map_to_exit_codes() {
    assert_eq!(code(&domorder(&["majorize", "3x", "1"])), 2);
    assert_eq!(code(&domorder(&["realize", "22"])), 2);
    assert_eq!(code(&domorder(&["lattice", "7"])), 2);
    assert_eq!(code(&domorder(&["lattice", "64"])), 3);
    assert_eq!(code(&domorder(&["lattice", "8", "--format", "graph6"])), 2);
    assert_eq!(code(&domorder(&["no-such-verb"])), 2);
    assert_eq!(code(&domorder(&["search", "--set", "K2", "--max-sum", "40"])), 3);
    assert_eq!(code(&domorder(&["verify-lemma", "nope"])), 2);
    let o = domorder(&["realize", "22"]);
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn forcibly_check_pair_and_screen() {
    assert_eq!(code(&domorder(&["forcibly", "2222", "--set", "P4"])), 0);
    let o = domorder(&["forcibly", "2211", "--set", "P4", "--format", "json"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["forcibly_free"], false);
    assert_eq!(code(&domorder(&["check-pair", "211", "1111", "--set", "P3, K3"])), 1);
    assert_eq!(code(&domorder(&["check-pair", "3221", "2222", "--set", "K2"])), 0);
    assert_eq!(code(&domorder(&["screen", "--set", "2*K2, P4, diamond"])), 0);
    assert_eq!(code(&domorder(&["screen", "--set", "K3"])), 1);
}

#[test]
fn classify_output_is_independent_of_thread_count() {
    let args = |t: &'static str| ["classify", "--size", "2", "--format", "json", "--threads", t];
    let one = domorder(&args("1"));
    let four = domorder(&args("4"));
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    let v = json(&one);
    assert_eq!(v["candidates"].as_array().unwrap().len(), 153);
    assert_eq!(v["budget"]["max_sum"], 16);
}

#[test]
fn complement_experiment_is_reported_separately() {
    let o = domorder(&["classify", "--size", "1", "--complement-experiment", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert!(json(&o)["complement_experiment"].is_array());
}

#[test]
fn construction_and_family_verbs() {
    assert_eq!(code(&domorder(&["verify-lemma", "subdivided-k6"])), 0);
    let o = domorder(&["verify-lemma", "matching-cone", "--param", "a=3", "--format", "graph6"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 3);
    assert_eq!(code(&domorder(&["verify-family", "--t", "3"])), 0);
    assert_eq!(code(&domorder(&["verify-family", "--t", "3", "--variant", "edges"])), 1);
}

#[test]
fn verify_paper_single_criteria() {
    let o = domorder(&["verify-paper", "--criterion", "5", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 1);
    assert_eq!(code(&domorder(&["verify-paper", "--criterion", "10"])), 1);
    assert_eq!(code(&domorder(&["verify-paper", "--criterion", "13"])), 2);
}
