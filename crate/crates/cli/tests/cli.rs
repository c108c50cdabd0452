use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", &format!("{name}.json")].iter().collect();
    p.to_string_lossy().into_owned()
}

fn lielab(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lielab"));
    cmd.args(args);
    for var in ["LIELAB_SEARCH_HEIGHT", "LIELAB_TRIALS", "LIELAB_ENUM_CAP", "LIELAB_SYMBOLIC_DIM"] {
        cmd.env_remove(var);
    }
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("spawn lielab")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let out = lielab(args, &[]);
    (code(&out), json(&out))
}

#[test]
fn exit_code_matrix() {
    // (fixture, [validate, rank, regular, anisotropic, nilpotent-free, h2])
    let table: &[(&str, [i32; 6])] = &[
        ("sl2_q", [0, 0, 1, 1, 1, 0]),
        ("sl2_f5", [0, 0, 1, 1, 1, 0]),
        ("su2q", [0, 0, 0, 0, 0, 0]),
        ("h3", [0, 0, 0, 1, 1, 0]),
        ("r2_f3", [0, 0, 1, 1, 1, 0]),
        ("gl2_q", [0, 0, 1, 1, 1, 0]),
        ("psl3_f3", [0, 0, 1, 1, 1, 0]),
        ("sl2xo_f5", [0, 2, 2, 1, 1, 0]),
        ("jacobi_fails", [3, 3, 3, 3, 3, 3]),
        ("bad_order", [3, 3, 3, 3, 3, 3]),
    ];
    let commands = ["validate", "rank", "regular", "anisotropic", "nilpotent-free", "h2"];
    for (name, expected) in table {
        let file = fixture(name);
        for (cmd, want) in commands.iter().zip(expected) {
            let out = lielab(&[cmd, &file], &[]);
            assert_eq!(code(&out), *want, "{cmd} {name}: {}", String::from_utf8_lossy(&out.stderr));
        }
    }
}

#[test]
fn associative_input_only_validates() {
    let file = fixture("quaternion_q");
    assert_eq!(code(&lielab(&["validate", &file], &[])), 0);
    let out = lielab(&["rank", &file], &[]);
    assert_eq!(code(&out), 3);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn reports_carry_the_expected_values() {
    let (c, v) = run_json(&["rank", &fixture("sl2_q")]);
    assert_eq!(c, 0);
    assert_eq!((v["rank"].as_u64(), v["method"].as_str()), (Some(1), Some("symbolic")));

    let (_, v) = run_json(&["rank", &fixture("h3")]);
    assert_eq!(v["rank"].as_u64(), Some(3));

    let (_, v) = run_json(&["h2", &fixture("psl3_f3")]);
    assert_eq!(
        v["cocycles_dim"].as_u64().unwrap() - v["coboundaries_dim"].as_u64().unwrap(),
        v["dim"].as_u64().unwrap()
    );

    let (_, v) = run_json(&["h2", &fixture("sl2_q")]);
    assert_eq!(v["dim"].as_u64(), Some(0));

    let (c, v) = run_json(&["enumerate", "--dim", "2", "--field", "F2"]);
    assert_eq!(c, 0);
    assert_eq!(v["generated"].as_u64(), Some(4));
    assert_eq!(v["rank_eq_dim_iff_nilpotent"].as_bool(), Some(true));
}

#[test]
fn elements_accept_coordinates_and_labels() {
    let sl2 = fixture("sl2_q");
    let a = json(&lielab(&["fitting", &sl2, "--element", "0,1,0"], &[]));
    let b = json(&lielab(&["fitting", &sl2, "--element", "h"], &[]));
    assert_eq!(a, b);
    assert_eq!((a["dim_l0"].as_u64(), a["dim_l1"].as_u64()), (Some(1), Some(2)));
    let c = json(&lielab(&["fitting", &sl2, "--element", "2*e - 1/2*f"], &[]));
    let d = json(&lielab(&["fitting", &sl2, "--element", "2,0,-1/2"], &[]));
    assert_eq!(c, d);
    // e is nilpotent: everything is in L0
    let e = json(&lielab(&["fitting", &sl2, "--element", "-e"], &[]));
    assert_eq!(e["dim_l0"].as_u64(), Some(3));
    assert_eq!(code(&lielab(&["fitting", &sl2, "--element", "q"], &[])), 3);
    assert_eq!(code(&lielab(&["fitting", &sl2, "--element", "1,2"], &[])), 3);
}

#[test]
fn commutator_witnesses_recheck() {
    let (c, v) = run_json(&["commutator", &fixture("gl2_q"), "--target", "E12"]);
    assert_eq!(c, 0);
    assert_eq!(v["target"], serde_json::json!(["0", "1", "0", "0"]));
    assert!(v["witness"]["y"].is_array() && v["witness"]["z"].is_array());

    let (c, v) = run_json(&["commutator", &fixture("su2q"), "--target", "1,0,0", "--form", "killing"]);
    assert_eq!(c, 0);
    assert_eq!(v["witness"]["provenance"].as_str(), Some("rank1-solver"));
}

#[test]
fn regularity_modes() {
    let su2q = fixture("su2q");
    assert_eq!(code(&lielab(&["regular", &su2q], &[])), 0);
    assert_eq!(code(&lielab(&["regular", &su2q, "--mode", "certificate"], &[])), 0);
    // a search cannot prove regularity over Q
    assert_eq!(code(&lielab(&["regular", &su2q, "--mode", "search"], &[])), 2);
    assert_eq!(code(&lielab(&["regular", &fixture("sl2_f5"), "--mode", "exhaustive"], &[])), 1);
    // usage errors are bad input
    assert_eq!(code(&lielab(&["regular", &su2q, "--mode", "guess"], &[])), 3);
    assert_eq!(code(&lielab(&["regular"], &[])), 3);
    assert_eq!(code(&lielab(&["--help"], &[])), 0);
}

#[test]
fn minimal_non() {
    let r2 = fixture("r2_f3");
    for p in ["abelian", "nilpotent", "regular"] {
        assert_eq!(code(&lielab(&["minimal-non", &r2, "--property", p], &[])), 0, "{p}");
    }
    assert_eq!(code(&lielab(&["minimal-non", &fixture("sl2_f5"), "--property", "abelian"], &[])), 1);
    assert_eq!(code(&lielab(&["minimal-non", &r2, "--property", "solvable"], &[])), 3);
}

#[test]
fn budget_overrides_from_the_environment() {
    let big = fixture("sl2xo_f5");
    assert_eq!(code(&lielab(&["rank", &big], &[])), 2);
    let out = lielab(&["rank", &big], &[("LIELAB_SYMBOLIC_DIM", "9")]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["rank"].as_u64(), Some(3));
    assert_eq!(code(&lielab(&["rank", &fixture("sl2_q")], &[("LIELAB_TRIALS", "abc")])), 3);
    assert_eq!(code(&lielab(&["enumerate", "--dim", "3", "--field", "F2"], &[("LIELAB_ENUM_CAP", "10")])), 2);
}

#[test]
fn catalog_emit_round_trips() {
    let out = lielab(&["catalog", "emit", "sl", "2"], &[]);
    assert_eq!(code(&out), 0);
    let expected = std::fs::read(fixture("sl2_q")).unwrap();
    assert_eq!(out.stdout, expected);
    let list = json(&lielab(&["catalog", "list"], &[]));
    assert!(list.as_array().unwrap().iter().any(|e| e["name"] == "psl"));
    assert_eq!(code(&lielab(&["catalog", "emit", "sl", "2", "--field", "F4"], &[])), 3);
    assert_eq!(code(&lielab(&["catalog", "emit", "nonsense"], &[])), 3);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["analyze".to_string(), fixture("psl3_f3")],
        vec!["regular".to_string(), fixture("sl2_q")],
        vec!["commutator".to_string(), fixture("gl2_q"), "--target".into(), "E12".into()],
        vec!["verify".to_string()],
    ] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = lielab(&args, &[]);
        let b = lielab(&args, &[]);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn human_output_is_plain_text() {
    let out = lielab(&["rank", &fixture("sl2_q"), "--human"], &[]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("rank: 1"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}
