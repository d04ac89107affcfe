use std::collections::BTreeSet;
use std::process::{Command, Output};

use blockdual::quiver::QuiverGraph;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blockdual")).args(args).env_remove("BLOCKDUAL_CAP").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn hp_text() {
    assert_eq!(stdout(&["hp", "--n", "3", "--parts", "1,1,1"]), "1 + 2z + 2z^2 + z^3\n");
    assert_eq!(stdout(&["hp", "--n", "4", "--parts", "2,2"]), "1 + z + 2z^2 + z^3 + z^4\n");
    assert_eq!(stdout(&["hp", "--cartan", "A2", "--lambda", "1,2", "--coinvariant"]), "1 + 2z^2 + 2z^4 + z^6\n");
}

#[test]
fn classify_specs() {
    let spec = r#"[{"n":4,"stabilizer":[2,2]}]"#;
    assert_eq!(stdout(&["classify", "--spec", spec, "--spec2", spec]), "equivalent\n");
    let other = r#"[{"n":4,"stabilizer":[3,1]}]"#;
    assert_eq!(stdout(&["classify", "--spec", spec, "--spec2", other]), "not equivalent\n");
    let v: Value = serde_json::from_str(&stdout(&["classify", "--cartan", "A3", "--lambda", "1,2", "--format", "json"])).unwrap();
    assert_eq!(v["spec"], serde_json::json!([{"n": 4, "stabilizer": [3, 1]}]));
}

#[test]
fn quiver_json_round_trips() {
    let text = stdout(&["quiver", "--cartan", "A3", "--lambda", "3", "--mu", "1", "--format", "json"]);
    let q: QuiverGraph = serde_json::from_str(&text).unwrap();
    assert_eq!(q.vertices.len(), 5);
    assert_eq!(q.edges.len(), 5);
    assert_eq!(serde_json::to_string_pretty(&q).unwrap(), text.trim_end());
    let lengths: BTreeSet<usize> = q.vertices.iter().map(|v| v.length).collect();
    assert_eq!(lengths, [1, 2, 3, 4].into_iter().collect());
    let dot = stdout(&["quiver", "--cartan", "A3", "--lambda", "3", "--mu", "1", "--format", "dot"]);
    assert_eq!(dot.matches(" -- ").count(), 5);
}

#[test]
fn quiver_text_is_stable() {
    assert_eq!(
        stdout(&["quiver", "--cartan", "A1"]),
        "vertices (2):\n  e (length 0)\n  s1 (length 1)\nedges (1):\n  e -- s1\n"
    );
}

#[test]
fn selfdual_verdict() {
    let v: Value =
        serde_json::from_str(&stdout(&["selfdual", "--cartan", "A3", "--lambda", "3", "--mu", "1", "--format", "json"]))
            .unwrap();
    assert_eq!(v["verdict"], "NOT_EQUIVALENT");
    assert_eq!(v["dual"], serde_json::json!({"cartan": "A3", "lambda": [3], "mu": [3]}));
    let v: Value = serde_json::from_str(&stdout(&["selfdual", "--cartan", "A2", "--format", "json"])).unwrap();
    assert_eq!(v["verdict"], "TRIVIALLY_SELF_DUAL");
}

#[test]
fn every_subcommand_runs() {
    let cases: &[&[&str]] = &[
        &["group", "--cartan", "B3", "--subset", "1", "--side", "right"],
        &["decompose", "--cartan", "A3", "--x", "s1s2s3", "--subset", "3"],
        &["decompose", "--cartan", "A3", "--x", "1,2,3", "--subset", "1", "--side", "right"],
        &["translate", "--cartan", "A2", "--lambda", "1", "--x", "2"],
        &["translate", "--cartan", "A2", "--lambda", "1", "--mu", "2", "--x", "1", "--direction", "out"],
        &["translate", "--cartan", "A2", "--lambda", "1", "--x", "2,1", "--direction", "on-simple"],
        &["bott", "--cartan", "A3", "--mu", "1,2,3", "--x", "2,1"],
        &["wallcross", "--cartan", "A3", "--lambda", "1,2"],
        &["wallcross", "--cartan", "B2", "--mu", "1", "--zuckerman"],
        &["ringel", "--cartan", "A3", "--lambda", "3", "--mu", "1"],
        &["koszul", "--cartan", "A3", "--lambda", "3", "--mu", "1"],
        &["phi", "--cartan", "A3", "--lambda", "3", "--mu", "1", "--x", "3", "--kind", "simple"],
        &["thmD", "--cartan", "A3", "--nu", "1,2,3", "--mu", "1"],
    ];
    for args in cases {
        for format in ["text", "json"] {
            let mut a = args.to_vec();
            a.extend(["--format", format]);
            let out = stdout(&a);
            if format == "json" {
                serde_json::from_str::<Value>(&out).unwrap_or_else(|e| panic!("{a:?}: {e}"));
            }
        }
    }
}

#[test]
fn ringel_json_modules() {
    let v: Value = serde_json::from_str(&stdout(&[
        "ringel", "--cartan", "A3", "--lambda", "3", "--mu", "1", "--x", "3", "--format", "json",
    ]))
    .unwrap();
    let twist = &v["images"][0]["twist"];
    assert_eq!(twist["kind"], "Costandard");
    assert_eq!(twist["hshift"], 1);
    assert_eq!(twist["block"]["mu"], serde_json::json!([3]));
}

#[test]
fn thm_d_dictionary() {
    let v: Value =
        serde_json::from_str(&stdout(&["thmD", "--cartan", "A3", "--nu", "1,2,3", "--mu", "1,2", "--format", "json"]))
            .unwrap();
    assert_eq!(v["mu_prime"], serde_json::json!([2, 3]));
    assert_eq!(v["dictionary"], serde_json::json!([[1, 3], [2, 2], [3, 1]]));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["quiver", "--cartan", "Q3"]).status.code(), Some(2));
    assert_eq!(run(&["quiver", "--cartan", "A3", "--lambda", "7"]).status.code(), Some(2));
    assert_eq!(run(&["hp", "--n", "3", "--parts", "2,2"]).status.code(), Some(2));
    assert_eq!(run(&["phi", "--cartan", "A3", "--lambda", "3", "--mu", "1", "--x", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["group", "--cartan", "A4", "--cap", "100"]).status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_blockdual"))
        .args(["group", "--cartan", "A4"])
        .env("BLOCKDUAL_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    assert_eq!(run(&["hp", "--n", "2", "--format", "dot"]).status.code(), Some(2));
}
