use weylcode::verify::{run_suite, Options};
use weylcode::Execution;

#[test]
fn reports_do_not_depend_on_the_strategy_or_the_run() {
    let seq = run_suite(4, 6, None, Options::with_exec(Execution::Sequential));
    let par = run_suite(4, 6, None, Options::with_exec(Execution::Parallel));
    let again = run_suite(4, 6, None, Options::with_exec(Execution::Parallel));
    assert_eq!(seq.len(), 9);
    for ((a, b), c) in seq.iter().zip(&par).zip(&again) {
        assert_eq!(a.outcome(), b.outcome());
        assert_eq!(b.outcome(), c.outcome());
    }
}

#[test]
fn mutated_failures_are_reproducible() {
    let run = |exec| {
        run_suite(
            4,
            6,
            None,
            Options {
                exec,
                mutation: Some(99),
            },
        )
    };
    let seq = run(Execution::Sequential);
    let par = run(Execution::Parallel);
    for (a, b) in seq.iter().zip(&par) {
        assert!(!a.passed(), "{}", a.check);
        assert_eq!(a.outcome(), b.outcome());
    }
}

#[test]
fn filter_selects_by_name() {
    let reports = run_suite(3, 4, Some("orbit"), Options::default());
    let names: Vec<&str> = reports.iter().map(|r| r.check.as_str()).collect();
    assert_eq!(names, vec!["orbit_torus", "orbit_certificates"]);
}
