use std::process::{Command, Output};

use minbetti::coning::TreeNodeJson;
use minbetti::hochster::BettiJson;
use minbetti::io::{ComplexJson, ComplexOrIdeal};
use minbetti::search::PosetJson;
use minbetti::BettiDiagram;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minbetti"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const EXAMPLE_GENS: &str = "[[1,2],[1,3],[2,3,4]]";

#[test]
fn betti_text_matches_library_rendering() {
    let out = run(&["betti", "--gens", EXAMPLE_GENS, "--n", "4", "--char", "101"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "total: 1 3 2\n    0: 1 0 0\n    1: 0 2 1\n    2: 0 1 1\n");
}

#[test]
fn betti_json_round_trips() {
    let out = run(&[
        "betti",
        "--gens",
        EXAMPLE_GENS,
        "--n",
        "4",
        "--format",
        "json",
        "--char",
        "2",
    ]);
    let json: BettiJson = serde_json::from_str(&stdout(&out)).unwrap();
    let d = BettiDiagram::from_json(&json).unwrap();
    assert_eq!(d.char(), 2);
    assert_eq!(d.to_json(), json);
    assert_eq!(d.total_betti().as_slice(), &[1, 3, 2]);
}

#[test]
fn facets_gens_and_file_inputs_agree() {
    let a = stdout(&run(&["betti", "--facets", "[[1,4],[2,3],[2,4],[3,4]]", "--n", "4"]));
    let b = stdout(&run(&["betti", "--gens", "x1*x2, x1*x3, x2*x3*x4", "--n", "4"]));
    let path = std::env::temp_dir().join(format!("minbetti-cli-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"n": 4, "gens": [[1,2],[1,3],[2,3,4]]}"#).unwrap();
    let c = stdout(&run(&["betti", "--input", path.to_str().unwrap()]));
    std::fs::remove_file(&path).unwrap();
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn degree_cap_truncates_output() {
    let out = run(&[
        "betti",
        "--gens",
        EXAMPLE_GENS,
        "--n",
        "4",
        "--degree-cap",
        "2",
        "--format",
        "json",
    ]);
    let json: BettiJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(json.entries.iter().all(|e| e.j <= 2));
}

#[test]
fn cone_on_fvector_and_complex() {
    let out = run(&["cone", "--fvector", "4,4,1,0", "--seq", "1", "--format", "json"]);
    let f: Vec<u64> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(f, vec![5, 8, 1, 0, 0]);
    let out = run(&[
        "cone",
        "--facets",
        "[[1,2,4],[3,4]]",
        "--n",
        "4",
        "--seq",
        "inf",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let complex: ComplexJson = serde_json::from_value(v["complex"].clone()).unwrap();
    assert_eq!(complex.to_complex().unwrap().f_vector().entries(), &[5, 8, 5, 1, 0]);
    assert_eq!(v["betti"], Value::Null);
}

#[test]
fn family_json_lists_leaves() {
    let out = run(&[
        "family",
        "--fvector",
        "6,8,4,0,0,0",
        "--pre-cones",
        "inf,inf,inf",
        "--j",
        "5",
        "--depth",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let nodes: Vec<TreeNodeJson> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(nodes.len(), 8);
    assert!(nodes
        .iter()
        .all(|n| n.index.split(',').count() == 3 && n.fvector.len() == 12));
}

#[test]
fn family_reports_collisions_with_exit_one() {
    let out = run(&[
        "family",
        "--fvector",
        "2,0",
        "--j",
        "5",
        "--depth",
        "2",
        "--verify-distinct",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn lex_reports_ideal_and_single_degree() {
    let out = run(&["lex", "--fvector", "6,8,4,0,0,0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let ideal: ComplexOrIdeal = serde_json::from_value(v["ideal"].clone()).unwrap();
    assert_eq!(ideal.to_complex().unwrap().f_vector().entries(), &[6, 8, 4, 0, 0, 0]);
    assert_eq!(
        run(&["lex", "--fvector", "4,6,0,0", "--single-degree"]).status.code(),
        Some(0)
    );
    assert_eq!(
        run(&["lex", "--fvector", "4,3,0,0", "--single-degree"]).status.code(),
        Some(1)
    );
}

#[test]
fn search_poset_json_round_trips() {
    let out = run(&[
        "search",
        "--fvector",
        "4,3,0,0",
        "--mod-iso",
        "--report",
        "poset",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let poset: PosetJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(poset.fvector, vec![4, 3, 0, 0]);
    assert_eq!(poset.char, 101);
    assert_eq!(poset.diagrams.len(), 2);
    assert_eq!(poset.edges.len(), 1);
    assert!(poset.unique_min);
    let again = serde_json::to_string_pretty(&poset).unwrap();
    assert_eq!(again.trim(), stdout(&out).trim());
}

#[test]
fn search_respects_complex_cap() {
    let out = run(&[
        "search",
        "--fvector",
        "5,5,0,0,0",
        "--max-complexes",
        "3",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["complexes_seen"], 3);
    assert_eq!(v["truncated"], true);
}

#[test]
fn verify_subcommands_pass() {
    for args in [
        vec!["verify", "paper-examples"],
        vec!["verify", "reference-pair"],
        vec!["verify", "path", "--n", "4"],
        vec!["verify", "cycle", "--n", "6", "--char", "2"],
        vec!["verify", "coning", "--samples", "10", "--seed", "3"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stdout(&out));
        assert!(!stdout(&out).contains("FAIL"));
    }
    let out = run(&["verify", "paper-examples", "--format", "json"]);
    let checks: Vec<Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn verify_tworow_on_path() {
    let dir = std::env::temp_dir().join(format!("minbetti-tworow-{}.json", std::process::id()));
    let out = run(&["betti", "--facets", "[[1,2],[2,3]]", "--n", "4", "--format", "json"]);
    std::fs::write(&dir, out.stdout).unwrap();
    let res = run(&[
        "verify",
        "tworow",
        "--fvector",
        "4,2,0,0",
        "--diagram",
        dir.to_str().unwrap(),
    ]);
    std::fs::remove_file(&dir).unwrap();
    assert_eq!(res.status.code(), Some(0), "{}", stdout(&res));
}

#[test]
fn input_errors_exit_two() {
    for args in [
        vec!["betti", "--gens", "x1^2", "--n", "3"],
        vec!["betti", "--gens", "x1*x2"],
        vec!["betti", "--gens", "[[1]]", "--n", "3"],
        vec!["betti", "--gens", "[[1,2]]", "--n", "3", "--char", "4"],
        vec!["betti", "--facets", "[[1,5]]", "--n", "3"],
        vec!["lex", "--fvector", "4,7,0,0"],
        vec!["search", "--fvector", "3,3,2"],
        vec!["search", "--fvector", "9,1,0,0,0,0,0,0,0"],
        vec!["cone", "--fvector", "3,0,0", "--seq", "x"],
        vec!["nonsense"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn threads_flag_keeps_output_deterministic() {
    let a = stdout(&run(&["search", "--fvector", "5,4,0,0,0", "--threads", "1"]));
    let b = stdout(&run(&["search", "--fvector", "5,4,0,0,0", "--threads", "3"]));
    assert_eq!(a, b);
}
