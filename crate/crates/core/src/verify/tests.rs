use super::*;

fn all_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

#[test]
fn check_ids_are_unique_kebab_case() {
    let ids = all_ids();
    assert!(ids.len() >= 25, "{} checks", ids.len());
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    for id in ids {
        assert!(id.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-'), "{id}");
    }
}

#[test]
fn full_suite_passes_for_n3() {
    let report = run_suite(3, &[]).unwrap();
    assert_eq!(report.n, 3);
    assert_eq!(report.checks.len(), CHECKS.len());
    for c in &report.checks {
        assert_eq!(c.status, Status::Pass, "{c:?}");
        assert!(c.exact);
        assert!(c.oracle_residual < ORACLE_TOLERANCE);
    }
    assert!(report.all_pass());
    assert_eq!(report.failures().count(), 0);
    let ids: Vec<&str> = report.checks.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, all_ids(), "registry order is preserved");
}

#[test]
fn single_check_selection() {
    let report = run_suite(7, &["chebyshev-factorization".to_string()]).unwrap();
    assert_eq!(report.checks.len(), 1);
    assert_eq!(report.checks[0].id, "chebyshev-factorization");
    assert!(report.all_pass());
}

#[test]
fn invalid_inputs_are_rejected() {
    assert_eq!(run_suite(4, &[]).unwrap_err(), Error::InvalidOrder(4));
    assert_eq!(run_suite(1, &[]).unwrap_err(), Error::InvalidOrder(1));
    assert_eq!(
        run_suite(3, &["no-such-check".to_string()]).unwrap_err(),
        Error::UnknownCheck("no-such-check".into())
    );
    assert_eq!(validate_order(15, 13).unwrap_err(), Error::OrderTooLarge { n: 15, max: 13 });
    assert!(validate_order(15, 15).is_ok());
    assert!(run_suites(&[3, 6], &[]).is_err());
}

#[test]
fn failing_outcomes_are_reported() {
    fn broken(_: &SuiteContext) -> Result<Outcome> {
        Ok(Outcome::new(false, 0.0).with_detail(Some("counterexample".into())))
    }
    fn oracle_disagrees(_: &SuiteContext) -> Result<Outcome> {
        Ok(Outcome::new(true, 1e-3))
    }
    fn errors(_: &SuiteContext) -> Result<Outcome> {
        Err(Error::Internal("boom".into()))
    }
    let cx = SuiteContext::new(3).unwrap();
    let spec = |run| CheckSpec { id: "synthetic", summary: "", run };
    let r = run_one(&spec(broken), &cx);
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.detail.as_deref(), Some("counterexample"));
    let r = run_one(&spec(oracle_disagrees), &cx);
    assert_eq!(r.status, Status::Fail);
    assert!(r.exact);
    assert!(r.detail.unwrap().contains("oracle"));
    let r = run_one(&spec(errors), &cx);
    assert_eq!(r.status, Status::Fail);
    assert!(r.detail.unwrap().contains("boom"));
}

#[test]
fn reports_serialize_deterministically() {
    let sel: Vec<String> = ["pbw-dimension", "fusion-matrix", "charpoly-table"].map(String::from).to_vec();
    let a = run_suites(&[3, 5], &sel).unwrap();
    let b = run_suites(&[3, 5], &sel).unwrap();
    let ja = emit_report(&a, ReportFormat::Json, false);
    assert_eq!(ja, emit_report(&b, ReportFormat::Json, false));
    assert!(!ja.contains("elapsed_ms"));
    let back: Vec<SuiteReport> = serde_json::from_str(&ja).unwrap();
    assert_eq!(back.len(), 2);
    assert_eq!(back[1].n, 5);
    assert_eq!(back[0].checks.iter().map(|c| c.id.as_str()).collect::<Vec<_>>(), sel);
    assert!(emit_report(&a, ReportFormat::Json, true).contains("elapsed_ms"));

    let text = emit_report(&a, ReportFormat::Text, false);
    assert!(text.starts_with("n = 3: 3/3 checks pass\n"));
    assert_eq!(text.matches('✓').count(), 6);
    assert!(!text.contains('✗'));
}

#[test]
fn text_report_marks_failures() {
    let report = SuiteReport {
        n: 3,
        checks: vec![CheckResult {
            id: "x".into(),
            status: Status::Fail,
            exact: false,
            oracle_residual: 0.0,
            elapsed_ms: None,
            detail: Some("why".into()),
        }],
    };
    let text = emit_report(&[report], ReportFormat::Text, true);
    assert!(text.contains("✗ x"));
    assert!(text.contains("why"));
    assert_eq!("json".parse::<ReportFormat>().unwrap(), ReportFormat::Json);
    assert!("yaml".parse::<ReportFormat>().is_err());
}
