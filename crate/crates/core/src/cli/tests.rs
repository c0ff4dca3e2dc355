use super::*;

fn run(command: Command, text: &str) -> ReportDocument {
    run_text(command, text, &RunOptions::default())
}

#[test]
fn linear_polynomial_over_q_is_consistent() {
    let r = run(Command::Obstruct, r#"{"polynomial": "t + 1"}"#);
    assert_eq!(r.exit_code, EXIT_OK);
    assert_eq!(r.verdict.as_deref(), Some("CONSISTENT"));
}

#[test]
fn obstructed_exit_code() {
    let r = run(Command::Obstruct, r#"{"polynomial": "t^2 - 1", "lift": "minus"}"#);
    assert_eq!(r.verdict.as_deref(), Some("OBSTRUCTED"));
    assert_eq!(r.exit_code, EXIT_OBSTRUCTED);
}

#[test]
fn bad_json_is_a_parse_error() {
    let r = run(Command::Factor, "{ not json");
    assert_eq!(r.exit_code, EXIT_PARSE);
    assert_eq!(r.error.as_ref().unwrap().kind, "parse");
}

#[test]
fn unknown_key_is_a_parse_error() {
    let r = run(Command::Factor, r#"{"polynomial": "t", "bogus": 1}"#);
    assert_eq!(r.exit_code, EXIT_PARSE);
}

#[test]
fn malformed_word_reports_position() {
    let doc = r#"{"group": "gens: a b; rel: a b q", "representation": {}}"#;
    let r = run(Command::Torsion, doc);
    assert_eq!(r.exit_code, EXIT_PARSE);
    assert!(r.error.unwrap().message.contains('q'));
}

#[test]
fn reducible_field_is_a_validation_error() {
    let doc = r#"{"field": {"min_poly": "z^2 - 4"}, "polynomial": "t + z"}"#;
    let r = run(Command::Factor, doc);
    assert_eq!(r.exit_code, EXIT_VALIDATION);
}

#[test]
fn bad_determinant_is_a_validation_error() {
    let doc = r#"{
        "group": "gens: a b; rel: a b a B A B; meridian: a; kind: sphere-knot",
        "representation": {"a": [["2", "0"], ["0", "1"]], "b": [["1", "0"], ["0", "1"]]}
    }"#;
    let r = run(Command::Torsion, doc);
    assert_eq!(r.exit_code, EXIT_VALIDATION);
}

#[test]
fn polynomial_and_group_together_are_rejected_by_obstruct() {
    let doc = r#"{
        "polynomial": "t + 1",
        "group": "gens: a; rel:",
        "representation": {"a": [["1", "1"], ["0", "1"]]}
    }"#;
    assert_eq!(run(Command::Obstruct, doc).exit_code, EXIT_VALIDATION);
}

#[test]
fn batch_exit_code_prefers_errors() {
    let ok = ReportDocument {
        exit_code: EXIT_OK,
        ..Default::default()
    };
    let obs = ReportDocument {
        exit_code: EXIT_OBSTRUCTED,
        ..Default::default()
    };
    let bad = ReportDocument {
        exit_code: EXIT_VALIDATION,
        ..Default::default()
    };
    assert_eq!(batch_exit_code(std::slice::from_ref(&ok)), EXIT_OK);
    assert_eq!(batch_exit_code(&[ok.clone(), obs.clone()]), EXIT_OBSTRUCTED);
    assert_eq!(batch_exit_code(&[obs, bad, ok]), EXIT_VALIDATION);
    assert_eq!(batch_exit_code(&[]), EXIT_OK);
}

#[test]
fn seed_does_not_change_results() {
    let doc = r#"{"field": {"min_poly": "z^2 + 1"}, "polynomial": "t^4 - 1"}"#;
    let a = run_text(Command::Factor, doc, &RunOptions::default());
    let b = run_text(
        Command::Factor,
        doc,
        &RunOptions {
            factor: FactorOptions::with_seed(99),
            lift: None,
        },
    );
    assert_eq!(a.factorization, b.factorization);
}
