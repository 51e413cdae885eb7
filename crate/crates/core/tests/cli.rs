mod common;

use std::io::Cursor;

use causinf::cli::{library, parse_resource_file, run, serialize_resource_file};
use serde_json::Value;

fn invoke(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("causinf").chain(args.iter().copied());
    let code = run(
        argv,
        &mut Cursor::new(stdin.as_bytes().to_vec()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str], stdin: &str) -> Value {
    let (code, out, err) = invoke(args, stdin);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

const PB4_LINE: &str = r#"{"name":"A","domain":2,"codomain":2,"support":[{"map":[1,0],"prob":"1/3"},{"map":[0,0],"prob":"2/3"}]}"#;

#[test]
fn convert_summary() {
    let v = json(&["convert", "PB1", "PB2"], "");
    assert_eq!(v["summary"], "PB1→PB2: yes, PB2→PB1: no");
    assert_eq!(v["forward"]["convertible"], true);
    assert_eq!(v["forward"]["monotone_rule"], true);
    assert!(v["forward"]["certificate"].is_array());
    assert!(v["backward"]["certificate"].is_null());
}

#[test]
fn monotones_triple() {
    let v = json(&["monotones", "PB5", "PB2"], "");
    assert_eq!(v["resources"][0]["triple"], "(1/3, 1, 1/3)");
    assert_eq!(v["resources"][1]["triple"], "(0, undefined, 0)");
    assert_eq!(v["resources"][1]["monotones"]["m_abs_alpha"], Value::Null);
    let v = json(&["monotones", "sector_shift"], "");
    assert_eq!(
        v["resources"][0]["cumulative_monotones"],
        serde_json::json!(["1", "1", "1/3"])
    );
    assert!(v["resources"][0].get("triple").is_none());
}

#[test]
fn hasse_dot_output() {
    let (code, out, _) = invoke(&["hasse", "PB1", "PB2", "PB3", "PB4", "PB5", "PB6"], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph hasse {"));
    assert_eq!(out.matches("->").count(), 6);
    for edge in [
        "c2 -> c0", "c3 -> c4", "c3 -> c5", "c0 -> c5", "c4 -> c1", "c5 -> c1",
    ] {
        assert!(out.contains(edge), "{edge} missing from\n{out}");
    }
    let (_, again, _) = invoke(&["hasse", "PB1", "PB2", "PB3", "PB4", "PB5", "PB6"], "");
    assert_eq!(out, again);
}

#[test]
fn hasse_merges_classes() {
    let (code, out, _) = invoke(&["hasse", "eq_F1", "PB1", "PB2", "--format", "report"], "");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["classes"], serde_json::json!([["eq_F1", "PB1"], ["PB2"]]));
    assert_eq!(v["edges"], serde_json::json!([[0, 1]]));
}

#[test]
fn reads_standard_input() {
    let v = json(&["-i", "-", "game", "A"], PB4_LINE);
    assert_eq!(v["guessing_probability"], "2/3");
    assert_eq!(v["posterior_causal_connection"]["1"], "1");
    let v = json(&["-i", "-", "monotones"], PB4_LINE);
    assert_eq!(v["resources"][0]["name"], "A");
}

#[test]
fn reads_files() {
    let dir = tempdir();
    let path = dir.join("res.jsonl");
    std::fs::write(&path, serialize_resource_file(&library::all())).unwrap();
    let v = json(&["-i", path.to_str().unwrap(), "closure", "PB4"], "");
    assert_eq!(v["vertex_count"], 6);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    assert!(v["vertices"][0]["tetra"].is_array());
    std::fs::remove_dir_all(dir).unwrap();
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("causinf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn game_with_prior() {
    let v = json(&["game", "PB4", "--prior", "1/4,3/4"], "");
    assert_eq!(v["guessing_probability"], "5/6");
    let (code, _, err) = invoke(&["game", "PB4", "--prior", "1/2,1/3"], "");
    assert_eq!(code, 2);
    assert!(err.contains("prior"));
}

#[test]
fn ace_report() {
    let v = json(&["ace", "PB4"], "");
    assert_eq!(v["ace"], "-1/3");
    assert_eq!(v["ace_dist"], "-1/3");
    assert_eq!(v["min_beta_over_preimage"]["value"], "1/3");
    assert_eq!(
        v["min_beta_over_preimage"]["witness"]["support"],
        serde_json::json!({"F": "1/3", "R0": "2/3"})
    );
}

#[test]
fn exit_statuses() {
    let bad = r#"{"name":"B","domain":2,"codomain":2,"support":[{"map":[1,0],"prob":"1/2"},{"map":[0,0],"prob":"1/3"}]}"#;
    let (code, out, err) = invoke(&["-i", "-", "monotones"], &format!("# header\n{bad}"));
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(
        err.contains("line 2") && err.contains("resource B") && err.contains("5/6"),
        "{err}"
    );

    let (code, _, err) = invoke(&["closure", "PB4", "--budget", "10"], "");
    assert_eq!(code, 3);
    assert!(err.contains("budget"));

    assert_eq!(invoke(&["monotones", "nope"], "").0, 2);
    assert_eq!(invoke(&["frobnicate"], "").0, 2);
    assert_eq!(invoke(&["closure", "PB4", "--format", "dot"], "").0, 2);
    assert_eq!(invoke(&["hasse", "PB1", "sector_shift"], "").0, 1);
    assert_eq!(invoke(&["--help"], "").0, 0);
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["convert", "PB4", "PB5"][..],
        &["closure", "PB7"],
        &["monotones", "PB1", "PB8"],
    ] {
        assert_eq!(invoke(args, ""), invoke(args, ""));
    }
}

#[test]
fn resource_file_round_trip() {
    let mut rng = common::rng(201);
    let resources: Vec<_> = (0..30)
        .map(|i| {
            let (x, y) = common::random_sizes(&mut rng, 3);
            (
                format!("r{i}"),
                common::random_distribution(&mut rng, x, y, 5),
            )
        })
        .collect();
    let text = serialize_resource_file(&resources);
    assert_eq!(parse_resource_file(&text).unwrap(), resources);
    assert_eq!(
        serialize_resource_file(&parse_resource_file(&text).unwrap()),
        text
    );
}
