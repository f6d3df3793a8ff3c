use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use borderidx_core::json::{gf_from_value, index_table_from_value};
use borderidx_core::poly::rational;
use borderidx_core::{ind_gf, ExponentVector, OrderIdeal, Polynomial, RationalGf};
use serde_json::Value;

const GOLDEN: &str = "\
5 6 7 8 9 10 11 12
4 5 6 7 8 9 10 11
3 4 5 6 7 8 9 10
2 3 4 5 6 7 8 9
1 2 3 4 5 6 7 8
0 1 2 3 4 5 6 7
0 1 1 2 3 4 5 6
0 0 0 1 2 3 4 5
";

fn data(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name]
        .iter()
        .collect();
    path.to_string_lossy().into_owned()
}

fn borderidx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_borderidx"))
        .args(args)
        .env_remove("BORDERIDX_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn temp_json(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn golden_matrix_byte_for_byte() {
    let out = borderidx(&[
        "index",
        "--input",
        &data("example.json"),
        "--bounds",
        "7,7",
        "--format",
        "matrix",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), GOLDEN);
}

#[test]
fn partition_shorthand_gives_same_matrix() {
    let out = borderidx(&[
        "index",
        "--input",
        &data("example_partition.json"),
        "--bounds",
        "7,7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), GOLDEN);
}

#[test]
fn origin_box_is_single_zero() {
    for file in ["example.json", "example_partition.json"] {
        let out = borderidx(&["index", "--input", &data(file), "--bounds", "0,0"]);
        assert_eq!(stdout(&out), "0\n");
    }
}

#[test]
fn index_json_round_trips() {
    let out = borderidx(&[
        "index",
        "--input",
        &data("example.json"),
        "--bounds",
        "7,7",
        "--format",
        "json",
    ]);
    let r = report(&out);
    assert_eq!(r["command"][0], "borderidx");
    assert!(r["input_digest"].as_str().unwrap().starts_with("sha256:"));
    let table = index_table_from_value(&r["output"]).unwrap();
    assert_eq!(table.get(&ExponentVector::new(vec![7, 7])), Some(12));
    assert_eq!(table.get(&ExponentVector::new(vec![1, 1])), Some(1));
}

#[test]
fn json_reports_are_deterministic_apart_from_timing() {
    let args = [
        "gf",
        "--input",
        &data("example.json"),
        "--verify-bounds",
        "7,7",
        "--format",
        "json",
    ];
    let mut a = report(&borderidx(&args));
    let mut b = report(&borderidx(&args));
    a["elapsed_ms"] = Value::Null;
    b["elapsed_ms"] = Value::Null;
    assert_eq!(a, b);
}

#[test]
fn border_lists_the_five_exponents() {
    let out = borderidx(&[
        "border",
        "--input",
        &data("example.json"),
        "--k",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let mut got: Vec<Vec<u32>> = serde_json::from_value(r["output"]["border"].clone()).unwrap();
    got.sort();
    assert_eq!(
        got,
        vec![vec![0, 3], vec![1, 1], vec![1, 2], vec![2, 1], vec![3, 0]]
    );
}

#[test]
fn gf_of_origin_in_one_variable() {
    let f = temp_json(r#"{"dim":1,"elements":[[0]]}"#);
    let out = borderidx(&["gf", "--input", path(&f), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let g = gf_from_value(&report(&out)["output"]["gf"]).unwrap();
    let y = RationalGf::new(
        Polynomial::monomial(ExponentVector::new(vec![1]), rational(1)),
        ExponentVector::new(vec![2]),
    )
    .unwrap();
    assert_eq!(g, y);
}

#[test]
fn gf_methods_agree_and_verify() {
    let ideal = OrderIdeal::from_partition(&[3, 1, 1]).unwrap();
    let expected = ind_gf(&ideal).unwrap().gf;
    for method in ["box", "2d"] {
        let out = borderidx(&[
            "gf",
            "--input",
            &data("example.json"),
            "--method",
            method,
            "--verify-bounds",
            "7,7",
            "--format",
            "json",
        ]);
        assert_eq!(out.status.code(), Some(0));
        let r = report(&out);
        assert_eq!(gf_from_value(&r["output"]["gf"]).unwrap(), expected);
        assert_eq!(r["output"]["method"], method);
        assert_eq!(r["verdicts"]["verify"]["agrees"], true);
        assert_eq!(r["verdicts"]["denominator_divides_square"], true);
    }
}

#[test]
fn gf_latex() {
    let f = temp_json(r#"{"dim":1,"elements":[[0]]}"#);
    let out = borderidx(&["gf", "--input", path(&f), "--format", "latex"]);
    assert_eq!(stdout(&out), "\\frac{y_{1}}{(1-y_{1})^{2}}\n");
}

#[test]
fn gf_2d_rejects_other_dimensions() {
    let f = temp_json(r#"{"dim":3,"generators":[[1,1,1]]}"#);
    let out = borderidx(&["gf", "--input", path(&f), "--method", "2d"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pn_closed_form_and_checks() {
    let out = borderidx(&[
        "pn",
        "--a",
        "1,1",
        "--b",
        "3",
        "--check-bounds",
        "5,5",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["verdicts"]["series"]["agrees"], true);
    assert_eq!(r["verdicts"]["derivative"]["agrees"], true);
    let g = gf_from_value(&r["output"]["gf"]).unwrap();
    let series = g.expand(&ExponentVector::new(vec![2, 2])).unwrap();
    assert_eq!(
        series.get(&ExponentVector::new(vec![2, 1])).unwrap(),
        &rational(6)
    );
}

#[test]
fn pn_negative_and_fractional_weights() {
    let out = borderidx(&[
        "pn",
        "--a",
        "-1/2,2",
        "--b",
        "-3",
        "--check-bounds",
        "4,4",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["output"]["a"][0], "-1/2");
    assert_eq!(r["verdicts"]["series"]["agrees"], true);
    assert!(r["verdicts"]["derivative"]["skipped"].is_string());
}

#[test]
fn pn_latex() {
    let out = borderidx(&["pn", "--a", "1", "--b", "0", "--format", "latex"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "\\frac{y_{1}}{(1-y_{1})^{2}}\n");
}

#[test]
fn decompose_default_is_valid_and_proved() {
    let out = borderidx(&[
        "decompose",
        "--input",
        &data("example.json"),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(
        r["output"]["decomposition"]["cones"]
            .as_array()
            .unwrap()
            .len(),
        11
    );
    assert_eq!(r["verdicts"]["partition"]["valid"], true);
    assert_eq!(r["verdicts"]["admissibility"]["verdict"], "proved");
}

#[test]
fn decompose_check_economic_is_sampled_ok() {
    let out = borderidx(&[
        "decompose",
        "--input",
        &data("example.json"),
        "--check",
        &data("economic.json"),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["verdicts"]["partition"]["valid"], true);
    assert_eq!(r["verdicts"]["admissibility"]["verdict"], "sampled_ok");
    let ideal = OrderIdeal::from_partition(&[3, 1, 1]).unwrap();
    assert_eq!(
        gf_from_value(&r["output"]["gf"]).unwrap(),
        ind_gf(&ideal).unwrap().gf
    );
}

#[test]
fn decompose_check_inadmissible_is_falsified() {
    let out = borderidx(&[
        "decompose",
        "--input",
        &data("example.json"),
        "--check",
        &data("inadmissible.json"),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let r = report(&out);
    assert_eq!(r["verdicts"]["partition"]["valid"], true);
    let adm = &r["verdicts"]["admissibility"];
    assert_eq!(adm["verdict"], "falsified");
    assert_eq!(adm["cone"], 2);
    assert_eq!(adm["beta"], serde_json::json!([1, 0]));
    assert_eq!(adm["expected"], 2);
    assert_eq!(adm["actual"], 1);
}

#[test]
fn decompose_check_overlap_fails_verification() {
    let f = temp_json(r#"{"cones":[{"anchor":[3,0],"free":[1]},{"anchor":[4,0],"free":[]}]}"#);
    let out = borderidx(&[
        "decompose",
        "--input",
        &data("example.json"),
        "--check",
        path(&f),
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains("# partition: cones 0 and 1 both contain (4,0)"));
}

#[test]
fn verify_input_and_sweep() {
    let out = borderidx(&["verify", "--input", &data("example.json")]);
    assert_eq!(out.status.code(), Some(0));

    let f = temp_json(r#"{"dim":3,"generators":[[2,1,0],[0,0,3],[1,2,1]]}"#);
    let out = borderidx(&[
        "verify",
        "--input",
        path(&f),
        "--bounds",
        "5,5,6",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["verdicts"][0]["ok"], true);

    let out = borderidx(&[
        "verify",
        "--count",
        "8",
        "--max-dim",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["output"]["cases"], 8);
    assert_eq!(r["output"]["failed"], 0);
}

#[test]
fn verify_sweep_is_seeded() {
    let run = |seed: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_borderidx"))
            .args(["verify", "--count", "4", "--format", "json"])
            .env("BORDERIDX_SEED", seed)
            .output()
            .unwrap();
        let mut r = report(&out);
        r["elapsed_ms"] = Value::Null;
        r
    };
    assert_eq!(run("7"), run("7"));
    assert_eq!(run("7")["output"]["seed"], 7);
    assert_ne!(run("7")["verdicts"], run("8")["verdicts"]);
}

#[test]
fn exit_code_parse_errors() {
    let malformed = temp_json("{not json");
    let neither = temp_json(r#"{"dim":2}"#);
    let unknown = temp_json(r#"{"dim":2,"elements":[[0,0]],"extra":1}"#);
    for f in [&malformed, &neither, &unknown] {
        let out = borderidx(&["index", "--input", path(f), "--bounds", "1,1"]);
        assert_eq!(
            out.status.code(),
            Some(2),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let missing = borderidx(&[
        "index",
        "--input",
        "/nonexistent/ideal.json",
        "--bounds",
        "1,1",
    ]);
    assert_eq!(missing.status.code(), Some(2));
    let bad_bounds = borderidx(&["index", "--input", &data("example.json"), "--bounds", "1,x"]);
    assert_eq!(bad_bounds.status.code(), Some(2));
    let wrong_dim = borderidx(&[
        "index",
        "--input",
        &data("example.json"),
        "--bounds",
        "1,1,1",
    ]);
    assert_eq!(wrong_dim.status.code(), Some(2));
    let bad_format = borderidx(&[
        "border",
        "--input",
        &data("example.json"),
        "--format",
        "matrix",
    ]);
    assert_eq!(bad_format.status.code(), Some(2));
    let bad_rational = borderidx(&["pn", "--a", "1/0", "--b", "1"]);
    assert_eq!(bad_rational.status.code(), Some(2));
    let no_command = borderidx(&[]);
    assert_eq!(no_command.status.code(), Some(2));
}

#[test]
fn exit_code_invalid_ideals() {
    let not_closed = temp_json(r#"{"dim":2,"elements":[[0,0],[1,1]]}"#);
    let increasing = temp_json(r#"{"partition":[1,3]}"#);
    let empty = temp_json(r#"{"dim":2,"elements":[]}"#);
    for f in [&not_closed, &increasing, &empty] {
        let out = borderidx(&["gf", "--input", path(f)]);
        assert_eq!(
            out.status.code(),
            Some(3),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}
