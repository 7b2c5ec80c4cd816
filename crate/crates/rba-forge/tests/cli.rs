//! End-to-end checks of the command-line interface: the exit-code
//! contract (0 verified, 1 mathematical failure, 2 usage/parse failure),
//! format rendering, scan determinism, and JSON round trips.

use std::path::Path;
use std::process::{Command, Output};

fn rba_forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rba-forge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn construct_verifies_and_exits_zero() {
    let output = rba_forge(&[
        "construct",
        "dim5",
        "--d",
        "6",
        "6",
        "6",
        "--signs",
        "+",
        "+",
        "+",
    ]);
    assert_eq!(output.status.code(), Some(0), "{output:?}");
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(doc["report"]["passed"], serde_json::Value::Bool(true));
    assert_eq!(doc["order"], serde_json::Value::String("25".into()));
    assert_eq!(doc["report"]["flags"]["max_denominator"], "8");
    assert_eq!(doc["degree_map_positive"], serde_json::Value::Bool(true));
    // the two-dimensional character has multiplicity (n−1)/2 = 12
    let characters = doc["characters"].as_array().unwrap();
    assert_eq!(characters.len(), 2);
}

#[test]
fn construct_rejects_bad_parameters_with_usage_exit() {
    let output = rba_forge(&[
        "construct",
        "dim5",
        "--d",
        "0",
        "1",
        "1",
        "--signs",
        "+",
        "+",
        "+",
    ]);
    assert_eq!(output.status.code(), Some(2));
    let output = rba_forge(&["construct", "mn", "--n", "1"]);
    assert_eq!(output.status.code(), Some(2));
    let output = rba_forge(&[
        "construct",
        "dim5",
        "--d",
        "1",
        "1",
        "1",
        "--signs",
        "?",
        "+",
        "+",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn construct_decimal_shows_the_off_diagonal_entry() {
    // w = 5/√6 = 2.041241… at the n = 25 point
    let output = rba_forge(&[
        "construct",
        "dim5",
        "--d",
        "6",
        "6",
        "6",
        "--signs",
        "+",
        "+",
        "+",
        "--format",
        "decimal",
        "--digits",
        "6",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(
        stdout_of(&output).contains("2.041241"),
        "{}",
        stdout_of(&output)
    );
}

#[test]
fn construct_latex_factors_denominators() {
    let output = rba_forge(&[
        "construct",
        "cm",
        "--m",
        "3",
        "--delta",
        "7",
        "--format",
        "latex",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("\\frac{1}{9}\\begin{bmatrix}"), "{text}");
    assert!(text.contains("-1 - 16\\sqrt{3}"), "{text}");
}

#[test]
fn verify_accepts_exported_bases() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("basis.json");
    // produce a basis file through construct --out, then re-verify it
    let construct = rba_forge(&[
        "construct",
        "cm",
        "--m",
        "2",
        "--delta",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(construct.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let basis_json = serde_json::to_string(&doc["basis"]).unwrap();
    let basis_path = write(dir.path(), "just-basis.json", &basis_json);

    let verify = rba_forge(&["verify", &basis_path]);
    assert_eq!(verify.status.code(), Some(0), "{verify:?}");
    let verdict: serde_json::Value = serde_json::from_str(&stdout_of(&verify)).unwrap();
    assert_eq!(verdict["input"], "basis");
    assert_eq!(verdict["report"]["passed"], serde_json::Value::Bool(true));
    assert_eq!(
        verdict["degree_map_positive"],
        serde_json::Value::Bool(true)
    );
}

#[test]
fn verify_flags_axiom_violations_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    // two-element presentation with a negative loop constant
    let bad_loop = write(
        dir.path(),
        "bad-loop.json",
        r#"{"d":1,"star":[0,1],"lambda":[
            {"i":0,"j":0,"k":0,"value":[{"num":"1","den":"1","rad":"1"}]},
            {"i":0,"j":1,"k":1,"value":[{"num":"1","den":"1","rad":"1"}]},
            {"i":1,"j":0,"k":1,"value":[{"num":"1","den":"1","rad":"1"}]},
            {"i":1,"j":1,"k":0,"value":[{"num":"-1","den":"1","rad":"1"}]}
        ]}"#,
    );
    let output = rba_forge(&["verify", &bad_loop]);
    assert_eq!(output.status.code(), Some(1), "{output:?}");
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(doc["report"]["passed"], serde_json::Value::Bool(false));
    let checks = doc["report"]["checks"].as_array().unwrap();
    let loop_check = checks
        .iter()
        .find(|c| c["name"] == "loop-positivity")
        .unwrap();
    assert_eq!(loop_check["passed"], serde_json::Value::Bool(false));

    // broken associativity carries a four-index witness
    let bad_assoc = write(
        dir.path(),
        "bad-assoc.json",
        r#"{"d":2,"star":[0,1,2],"lambda":[
            {"i":0,"j":0,"k":0,"value":[{"num":"1","den":"1","rad":"1"}]},
            {"i":0,"j":1,"k":1,"value":[{"num":"1","den":"1","rad":"1"}]},
            {"i":1,"j":0,"k":1,"value":[{"num":"1","den":"1","rad":"1"}]},
            {"i":0,"j":2,"k":2,"value":[{"num":"1","den":"1","rad":"1"}]},
            {"i":2,"j":0,"k":2,"value":[{"num":"1","den":"1","rad":"1"}]},
            {"i":1,"j":1,"k":0,"value":[{"num":"1","den":"1","rad":"1"}]},
            {"i":2,"j":2,"k":0,"value":[{"num":"1","den":"1","rad":"1"}]},
            {"i":1,"j":2,"k":1,"value":[{"num":"1","den":"1","rad":"1"}]},
            {"i":2,"j":1,"k":1,"value":[{"num":"1","den":"1","rad":"1"}]}
        ]}"#,
    );
    let output = rba_forge(&["verify", &bad_assoc]);
    assert_eq!(output.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    let checks = doc["report"]["checks"].as_array().unwrap();
    let assoc = checks
        .iter()
        .find(|c| c["name"] == "associativity")
        .unwrap();
    assert_eq!(assoc["passed"], serde_json::Value::Bool(false));
    assert_eq!(assoc["failures"][0]["indices"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_rejects_malformed_input_with_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let garbage = write(dir.path(), "garbage.json", "{not json");
    assert_eq!(rba_forge(&["verify", &garbage]).status.code(), Some(2));
    let wrong_kind = write(dir.path(), "wrong.json", r#"{"hello": 1}"#);
    assert_eq!(rba_forge(&["verify", &wrong_kind]).status.code(), Some(2));
    assert_eq!(
        rba_forge(&["verify", "/nonexistent/file.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn export_round_trips_and_renders() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("doc.json");
    let construct = rba_forge(&[
        "construct",
        "dim5",
        "--d",
        "3/2",
        "1/6",
        "2/3",
        "--signs",
        "-",
        "+",
        "+",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(construct.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let basis_path = write(
        dir.path(),
        "basis.json",
        &serde_json::to_string(&doc["basis"]).unwrap(),
    );

    // the all-rational family point re-verifies from its file with a
    // positive degree map
    let verify = rba_forge(&["verify", &basis_path]);
    assert_eq!(verify.status.code(), Some(0));
    let verdict: serde_json::Value = serde_json::from_str(&stdout_of(&verify)).unwrap();
    assert_eq!(verdict["degree_map_positive"], serde_json::Value::Bool(true));
    assert_eq!(verdict["report"]["flags"]["is_rational"], serde_json::Value::Bool(true));

    // json export is canonical: exporting twice is byte-identical
    let first = rba_forge(&["export", &basis_path, "--format", "json"]);
    assert_eq!(first.status.code(), Some(0));
    let reexport_path = write(dir.path(), "basis2.json", &stdout_of(&first));
    let second = rba_forge(&["export", &reexport_path, "--format", "json"]);
    assert_eq!(stdout_of(&first), stdout_of(&second));

    // latex and decimal render without error
    let latex = rba_forge(&["export", &basis_path, "--format", "latex"]);
    assert_eq!(latex.status.code(), Some(0));
    assert!(stdout_of(&latex).contains("\\begin{bmatrix}"));
    let decimal = rba_forge(&[
        "export",
        &basis_path,
        "--format",
        "decimal",
        "--digits",
        "3",
    ]);
    assert_eq!(decimal.status.code(), Some(0));

    // presentations export too
    let pres_path = write(
        dir.path(),
        "pres.json",
        &serde_json::to_string(&doc["presentation"]).unwrap(),
    );
    let latex_table = rba_forge(&["export", &pres_path, "--format", "latex"]);
    assert_eq!(latex_table.status.code(), Some(0));
    assert!(stdout_of(&latex_table).contains("\\lambda_{111}"));
}

#[test]
fn scan_is_byte_deterministic_and_finds_the_known_point() {
    let args = [
        "scan",
        "dim5",
        "--d",
        "5..7",
        "5..7",
        "5..7",
        "--filter",
        "rational",
        "--filter",
        "nonnegative",
    ];
    let first = rba_forge(&args);
    let second = rba_forge(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(
        first.stdout, second.stdout,
        "identical grids give identical bytes"
    );
    let text = stdout_of(&first);
    assert!(
        text.lines()
            .any(|line| line.contains("\"delta\":[\"6\",\"6\",\"6\"]")),
        "{text}"
    );
    for line in text.lines() {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(
            record["flags"]["is_rational"],
            serde_json::Value::Bool(true)
        );
        assert_eq!(
            record["flags"]["nonnegative"],
            serde_json::Value::Bool(true)
        );
    }
}

#[test]
fn scan_cm_reports_radicand_sets() {
    // constants of the equal-degree family live in the biquadratic field
    // ℚ(√m, √n) with n = 1 + m²δ (pure ℚ(√m) exactly when n is a square),
    // so the radicand set is inside the square-free parts of {1, m, n, mn}
    let output = rba_forge(&["scan", "cm", "--m", "2", "--delta", "1..3"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert_eq!(text.lines().count(), 3);
    let square_free = |v: u64| {
        let decomposition = rba_forge::exact::square_free_decompose(
            &num_bigint::BigUint::from(v),
            rba_forge::exact::DEFAULT_FACTOR_BOUND,
        )
        .unwrap();
        decomposition
            .primes
            .iter()
            .product::<num_bigint::BigUint>()
            .to_string()
    };
    for (line, n) in text.lines().zip([5u64, 9, 13]) {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        let allowed = [
            "1".to_string(),
            square_free(2),
            square_free(n),
            square_free(2 * n),
        ];
        let radicands: Vec<String> = record["radicands"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().to_string())
            .collect();
        assert!(
            radicands.iter().all(|r| allowed.contains(r)),
            "n = {n}: radicands {radicands:?} outside {allowed:?}"
        );
    }
}

#[test]
fn scan_rejects_empty_grids_with_usage_exit() {
    let output = rba_forge(&["scan", "dim5", "--d", "5..1", "1", "1"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verify_reports_closure_failures_as_mathematical() {
    // {I, E₀₁, E₁₀} parses but E₀₁E₁₀ leaves the span
    let dir = tempfile::tempdir().unwrap();
    let one = r#"[{"num":"1","den":"1","rad":"1"}]"#;
    let not_closed = write(
        dir.path(),
        "not-closed.json",
        &format!(
            r#"{{"shape":[2],"elements":[
                [[[{one},[]],[[],{one}]]],
                [[[[],{one}],[[],[]]]],
                [[[[],[]],[{one},[]]]]
            ]}}"#
        ),
    );
    let output = rba_forge(&["verify", &not_closed]);
    assert_eq!(output.status.code(), Some(1), "{output:?}");
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("outside the span"), "{stderr}");
}

#[test]
fn factor_bound_env_var_is_honored() {
    // radicand 10403 = 101·103 factors under the default bound but not
    // under a tiny one
    let dir = tempfile::tempdir().unwrap();
    let one = r#"[{"num":"1","den":"1","rad":"1"}]"#;
    let root = r#"[{"num":"1","den":"1","rad":"10403"}]"#;
    let negated = r#"[{"num":"-1","den":"1","rad":"10403"}]"#;
    // {I₂, Diag(√10403, −√10403)}: a valid two-element diagonal basis
    let file = write(
        dir.path(),
        "big-radicand.json",
        &format!(
            r#"{{"shape":[2],"elements":[
                [[[{one},[]],[[],{one}]]],
                [[[{root},[]],[[],{negated}]]]
            ]}}"#
        ),
    );
    let default_bound = rba_forge(&["verify", &file]);
    assert_eq!(default_bound.status.code(), Some(0), "{default_bound:?}");

    let tiny_bound = Command::new(env!("CARGO_BIN_EXE_rba-forge"))
        .args(["verify", &file])
        .env("RBA_FORGE_FACTOR_BOUND", "10")
        .output()
        .unwrap();
    assert_eq!(tiny_bound.status.code(), Some(2), "{tiny_bound:?}");
    let stderr = String::from_utf8_lossy(&tiny_bound.stderr);
    assert!(stderr.contains("trial-division bound"), "{stderr}");
}
