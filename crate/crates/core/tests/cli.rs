use std::fs;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn polymat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polymat"))
        .args(args)
        .env_remove("POLYMAT_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn gorenstein_verdict_for_path_five() {
    let o = polymat(&["gorenstein", "--family", "path:5", "--cap", "1,1,2,1,1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["gorenstein"], json!(true));
    assert_eq!(v["k"], json!(2));
    assert_eq!(v["delta"], json!(2));
}

#[test]
fn bases_of_doubled_cycle() {
    let o = polymat(&["bases", "--family", "cycle:4", "--cap", "uniform:2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o), json!({"delta": 4, "bases": [[2, 2, 2, 2]]}));
    // keys come out sorted
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), r#"{"bases":[[2,2,2,2]],"delta":4}"#);
}

#[test]
fn delta_from_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c5.txt");
    fs::write(&file, "# five-cycle\n5\n1 2\n2 3\n3 4\n4 5\n5 1\n").unwrap();
    let o = polymat(&["delta", "--graph", file.to_str().unwrap(), "--cap", "uniform:1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o), json!(2));
}

#[test]
fn cameron_walker_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("h.txt");
    fs::write(&file, "1 3\n1 4\n").unwrap();
    let spec = format!("cmcw:1,2,{}", file.display());
    let o = polymat(&["bases", "--family", &spec, "--cap", "uniform:2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["bases"], json!([vec![2; 8]]));
}

#[test]
fn closed_sets_and_rank_table() {
    let o = polymat(&["closed-sets", "--family", "complete:3", "--cap", "uniform:1"]);
    let v = stdout_json(&o);
    let sets: Vec<&Value> = v.as_array().unwrap().iter().map(|e| &e["set"]).collect();
    assert_eq!(sets, vec![&json!([1]), &json!([2]), &json!([3]), &json!([1, 2, 3])]);
    let o = polymat(&["rank-table", "--family", "complete:3", "--cap", "uniform:1"]);
    let v = stdout_json(&o);
    assert_eq!(v["ranks"].as_array().unwrap().len(), 8);
    assert_eq!(v["ranks"][7], json!({"rank": 2, "set": [1, 2, 3]}));
}

#[test]
fn verify_hrep_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("p3.json");
    let bad = dir.path().join("cube.json");
    let cube = r#"{"a":[1,0,0],"b":1},{"a":[0,1,0],"b":1},{"a":[0,0,1],"b":1}"#;
    fs::write(&good, format!(r#"{{"ineqs":[{cube},{{"a":[1,1,1],"b":2}}]}}"#)).unwrap();
    fs::write(&bad, format!(r#"{{"ineqs":[{cube}]}}"#)).unwrap();
    for (file, want) in [(&good, true), (&bad, false)] {
        let o = polymat(&["verify-hrep", "--family", "complete:3", "--cap", "uniform:1", "--hrep", file.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout_json(&o), json!({ "verified": want }));
    }
}

#[test]
fn usage_and_validation_errors_exit_two() {
    for args in [
        &["delta", "--family", "path:4"][..],
        &["delta", "--family", "path:4", "--cap", "1,1"],
        &["delta", "--family", "path:4", "--graph", "x.txt", "--cap", "uniform:1"],
        &["delta", "--family", "nope:4", "--cap", "uniform:1"],
        &["delta", "--graph", "/nonexistent/graph.txt", "--cap", "uniform:1"],
        &["frobnicate"],
        &["sweep", "--predicate", "nope"],
    ] {
        let o = polymat(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn graph_file_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    fs::write(&file, "3\n1 2\n2 2\n").unwrap();
    let o = polymat(&["delta", "--graph", file.to_str().unwrap(), "--cap", "uniform:1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains('2'));
}

#[test]
fn max_n_cap_from_environment_and_flag() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_polymat"));
        cmd.args(["rank-table", "--family", "path:5", "--cap", "uniform:1"]).args(extra);
        match env {
            Some(v) => cmd.env("POLYMAT_MAX_N", v),
            None => cmd.env_remove("POLYMAT_MAX_N"),
        };
        cmd.output().unwrap().status.code()
    };
    assert_eq!(run(None, &[]), Some(0));
    assert_eq!(run(Some("4"), &[]), Some(2));
    assert_eq!(run(Some("4"), &["--max-n", "5"]), Some(0));
}

#[test]
fn sweep_passes_and_is_deterministic() {
    let a = polymat(&["sweep", "--predicate", "cmcw_9_2", "--seed", "3"]);
    let b = polymat(&["sweep", "--predicate", "cmcw_9_2", "--seed", "3", "--threads", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let summary: Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(summary["passed"], json!(true));
    assert_eq!(summary["mismatched"], json!(0));
    let table = polymat(&["sweep", "--predicate", "regular_c2_7_3", "--format", "text"]);
    assert_eq!(table.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&table.stdout).contains("petersen"));
}

#[test]
fn exceptional_scan_on_small_paths() {
    let o = polymat(&["exceptional-scan", "--family", "path:5", "--family", "cycle:4", "--max-entry", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let effective: Vec<Value> = String::from_utf8(o.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["effective_cap"].clone())
        .collect();
    assert!(!effective.is_empty());
    for e in &effective {
        assert!(
            [json!([1, 1, 1, 1, 1]), json!([1, 1, 2, 1, 1]), json!([2, 2, 2, 2, 2])].contains(e),
            "{e}"
        );
    }
}
