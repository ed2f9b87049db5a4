//! Shape and content checks for the invariant suite reports.

use fracalc_core::axioms::{all_passed, run_all, SuiteReport};

#[test]
fn eleven_suites_are_reported_in_order() {
    let reports = run_all();
    assert_eq!(reports.len(), 11);
    for (i, r) in reports.iter().enumerate() {
        assert_eq!(r.number, i + 1);
        assert!(!r.title.is_empty());
        assert!(!r.checks.is_empty());
        for c in &r.checks {
            assert_eq!(c.suite, r.number);
            assert!(!c.detail.is_empty());
        }
    }
}

#[test]
fn established_suites_pass() {
    let reports = run_all();
    for r in &reports {
        if r.number == 10 {
            // convergence order of the stepping scheme is asserted separately
            continue;
        }
        for c in &r.checks {
            assert!(c.passed, "suite {} check '{}' failed: {}", r.number, c.name, c.detail);
        }
    }
}

#[test]
fn overall_verdict_aggregates_every_suite() {
    let reports = run_all();
    assert_eq!(all_passed(&reports), reports.iter().all(SuiteReport::passed));
    let mut truncated = run_all();
    truncated.retain(|r| r.number != 10);
    assert!(all_passed(&truncated) == truncated.iter().all(SuiteReport::passed));
}
