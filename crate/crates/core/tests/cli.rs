//! End-to-end runs of the `qfodc` binary: golden output, exit codes, determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn qfodc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfodc")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const BUILD_SL2: &str = r#"{
  "config": "SL_q(2)",
  "corep": "u",
  "corep_dim": 2,
  "zeta": "-1",
  "invariant_dim": 4,
  "certified_dim": 4,
  "cert_degree": 1,
  "rank_with_counit": 5,
  "counit_cert_degree": 1,
  "basis": [
    "X[1,1]",
    "X[1,2]",
    "X[2,1]",
    "X[2,2]"
  ],
  "theta": [
    "ω[1,1]",
    "ω[2,2]"
  ]
}
"#;

#[test]
fn build_golden() {
    let o = qfodc(&["build", "--series", "sl", "--n", "2", "--zeta", "-1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), BUILD_SL2);
}

#[test]
fn build_dimensions() {
    let cases: [(&[&str], usize, usize); 4] = [
        (&["--corep", "1"], 1, 0),
        (&["--n", "3", "--zeta", "w"], 9, 9),
        (&["--series", "sp", "--n", "1", "--zeta", "-1"], 4, 4),
        (&["--corep", "sum(1,u)", "--zeta", "-1"], 9, 5),
    ];
    for (extra, m2, dim) in cases {
        let mut args = vec!["build"];
        args.extend_from_slice(extra);
        let o = qfodc(&args);
        assert_eq!(code(&o), 0, "{extra:?}: {}", stderr(&o));
        let v = json(&o);
        assert_eq!(v["invariant_dim"], m2, "{extra:?}");
        assert_eq!(v["certified_dim"], dim, "{extra:?}");
    }
}

#[test]
fn markdown_and_out_file() {
    let o = qfodc(&["build", "--format", "markdown"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("# Γ_1(u) on SL_q(2)"), "{text}");
    assert!(text.contains("| certified dim | 4 (degree 1) |"));

    let path = std::env::temp_dir().join(format!("qfodc-out-{}.json", std::process::id()));
    let o = qfodc(&["build", "--zeta", "-1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), BUILD_SL2);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn every_claim_passes_on_sl2() {
    for claim in [
        "minor-tau",
        "centrality",
        "tensor-identity",
        "coideal",
        "leibniz",
        "factorizability",
        "central-generates",
    ] {
        let o = qfodc(&["verify", "--claim", claim, "--zeta", "-1", "--degree", "2"]);
        assert_eq!(code(&o), 0, "{claim}: {}", String::from_utf8_lossy(&o.stdout));
        let v = json(&o);
        assert_eq!(v["claim"], claim);
        assert_eq!(v["status"], "pass");
    }
    let o = qfodc(&["verify", "--claim", "direct-sum", "--corep", "sum(1,u)", "--zeta", "-1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["data"]["part_ranks"], serde_json::json!([1, 4]));
}

#[test]
fn failing_claims_exit_one() {
    // X_1(u) and X_1(u) coincide, so their union is not direct
    let o = qfodc(&["verify", "--claim", "direct-sum", "--corep", "sum(u,u)"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["status"], "fail");
    // the trivial calculus has nothing inside X for the projection to land in
    let o = qfodc(&["verify", "--claim", "centrality", "--corep", "1"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["data"]["projection_nonzero"], false);
}

#[test]
fn undecided_exits_two() {
    let o = qfodc(&["build", "--corep", "1", "--window", "4", "--d-max", "2"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("did not stabilize"), "{}", stderr(&o));
}

#[test]
fn configuration_errors_exit_three_and_name_the_token() {
    let cases: [(&[&str], &str); 7] = [
        (&["build", "--zeta", "i"], "zeta = i"),
        (&["build", "--zeta", "banana"], "banana"),
        (&["build", "--corep", "foo"], "foo"),
        (&["build", "--n", "1"], "SL_q(1)"),
        (&["build", "--series", "sp", "--z-choice", "2"], "got 2"),
        (&["verify", "--claim", "minor-tau", "--k", "3"], "3"),
        (&["verify", "--claim", "nope"], "nope"),
    ];
    for (args, token) in cases {
        let o = qfodc(args);
        assert_eq!(code(&o), 3, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(stderr(&o).contains(token), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn classify_reports_components() {
    let o = qfodc(&["classify", "--corep", "sum(1,u)", "--zeta", "-1"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let dims: Vec<u64> = v["components"].as_array().unwrap().iter().map(|c| c["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [4, 1]);
    assert_eq!(v["complete"], true);
    assert_eq!(v["residual_rank"], 0);

    let o = qfodc(&["classify", "--corep", "u", "--zeta", "-1", "--source", "central"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["total_dim"], 4);
}

#[test]
fn incomplete_classification_still_exits_zero() {
    // the library holds only trivial frames, none of which lies in X_-1(u)
    let o = qfodc(&["classify", "--zeta", "-1", "--bound", "0"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["complete"], false);
    assert_eq!(v["total_dim"], 0);
    assert_eq!(v["residual_rank"], 4);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["report", "--zeta", "-1", "--degree", "2"][..],
        &["classify", "--n", "3", "--zeta", "w", "--format", "markdown"][..],
        &["verify", "--claim", "leibniz", "--seed", "7", "--n", "3", "--zeta", "w^2"][..],
    ] {
        let a = qfodc(args);
        let b = qfodc(args);
        assert_eq!(code(&a), 0, "{args:?}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
