use regmeasure::suite::{run_suite, SuiteConfig};

#[test]
fn corrupted_density_engine_breaks_the_complement_law() {
    let report = run_suite(&SuiteConfig::mutated().with_only(Some("algebra".into()))).unwrap();
    assert!(!report.passed);
    let details = &report.results[0].details;
    assert!(
        details.iter().any(|d| d.starts_with("FAIL complement law")),
        "{details:?}"
    );
}

#[test]
fn intact_engine_passes_the_algebra_criterion() {
    let report = run_suite(&SuiteConfig::default().with_only(Some("algebra".into()))).unwrap();
    assert!(report.passed, "{}", report.render_table());
}

#[test]
fn json_report_round_trips() {
    let report = run_suite(&SuiteConfig::default().with_only(Some("density".into()))).unwrap();
    let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(v["results"][0]["tag"], "density");
    assert_eq!(v["passed"], true);
}
