use rrlab::corpus::{all_cases, run_corpus, Outcome, Overrides, DEFAULT_SEED};

#[test]
fn full_corpus_passes() {
    let report = run_corpus(None, Overrides::default(), DEFAULT_SEED).unwrap();
    let failed: Vec<String> = report
        .cases
        .iter()
        .flat_map(|c| c.assertions.iter().filter(|a| a.verdict == Outcome::Fail).map(move |a| format!("{}: {}", c.id, a.assertion)))
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
    assert_eq!(report.exit_code(), 0);
    assert_eq!(report.summary.cases, all_cases().len());
}

#[test]
fn every_assertion_is_traceable_and_replayable_commands_parse() {
    let report = run_corpus(None, Overrides::default(), DEFAULT_SEED).unwrap();
    for c in &report.cases {
        assert!(!c.assertions.is_empty(), "{}", c.id);
        for a in &c.assertions {
            assert!(!a.source.is_empty(), "{}: {}", c.id, a.assertion);
            if let Some(r) = &a.replay {
                rrlab::lang::parse_program(r).unwrap_or_else(|e| panic!("{}: {e}", c.id));
            }
        }
    }
}

#[test]
fn bounded_assertions_report_bounded_pass() {
    let report = run_corpus(Some("EX-INTRO-B"), Overrides::default(), DEFAULT_SEED).unwrap();
    let verdicts: Vec<Outcome> = report.cases[0].assertions.iter().map(|a| a.verdict).collect();
    assert_eq!(verdicts, [Outcome::Pass, Outcome::Pass, Outcome::BoundedPass, Outcome::BoundedPass]);
}
