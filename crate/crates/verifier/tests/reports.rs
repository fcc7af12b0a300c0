use std::time::Duration;

use proptest::prelude::*;
use regpd::{find_check, find_hunt, load, run, CheckReport, ClutterSpec, Kind, RunOptions, Verdict};
use regpd_core::homology::Field;

fn report(kind: Kind, id: &str, corpus: &str, opts: &RunOptions) -> CheckReport {
    let check = match kind {
        Kind::Check => find_check(id),
        Kind::Hunt => find_hunt(id),
    }
    .unwrap();
    let c = load(corpus, opts.clutters).unwrap();
    run(kind, check, corpus, &c, opts)
}

fn verdicts(r: &CheckReport) -> Vec<(String, Option<Field>, Verdict)> {
    r.instances.iter().map(|i| (i.instance.clone(), i.field, i.verdict)).collect()
}

fn balanced(r: &CheckReport) -> bool {
    r.holds + r.fails + r.skipped + r.exceeded == r.instances_tested && r.instances.len() == r.instances_tested
}

#[test]
fn documented_examples_hold() {
    let opts = RunOptions::default();
    let t7 = report(Kind::Check, "T7", "labeled:n<=5,no-isolated", &opts);
    assert_eq!(t7.fails, 0);
    assert!(t7.holds > 0);
    let t5 = report(Kind::Check, "T5", "labeled:n<=4", &opts);
    assert_eq!(t5.fails, 0);
    assert_eq!(t5.fields, Field::ALL.to_vec());
    let t14 = report(Kind::Check, "T14", "labeled:n<=4", &opts);
    assert_eq!((t14.fails, t14.skipped), (0, 0));
}

#[test]
fn results_do_not_depend_on_job_count() {
    let mut opts = RunOptions {
        jobs: 1,
        clutters: Some(ClutterSpec { count: 40, max_n: 6, seed: 3 }),
        ..RunOptions::default()
    };
    let one = report(Kind::Check, "T17", "graphs:n<=5,connected", &opts);
    opts.jobs = 4;
    let four = report(Kind::Check, "T17", "graphs:n<=5,connected", &opts);
    assert_eq!(verdicts(&one), verdicts(&four));
    assert_eq!(four.jobs, 4);
}

#[test]
fn tiny_timeout_is_budget_exceeded_not_failure() {
    let opts = RunOptions {
        timeout: Duration::from_nanos(1),
        fields: vec![Field::Gf2],
        ..RunOptions::default()
    };
    let r = report(Kind::Check, "T16", "graphs:n<=6,connected", &opts);
    assert_eq!(r.fails, 0);
    assert!(r.exceeded > 0);
    assert!(balanced(&r));
}

#[test]
fn exhausted_budget_marks_the_rest() {
    let opts = RunOptions {
        budget: Some(Duration::from_nanos(1)),
        jobs: 1,
        ..RunOptions::default()
    };
    let r = report(Kind::Check, "T12", "graphs:n<=5", &opts);
    assert!(r.exceeded > 0);
    assert!(balanced(&r));
}

#[test]
fn hunt_reports_first_counterexample() {
    let r = report(Kind::Hunt, "H3", "graphs:n<=6,connected", &RunOptions::default());
    let found = r.found.as_ref().unwrap();
    assert_eq!(found.input, "Ejmw");
    assert_eq!(r.outcome.as_deref(), Some("counterexample found"));
    assert_eq!(r.first_failure().unwrap().instance, found.instance);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn counts_add_up(seed in any::<u64>(), idx in 0usize..6) {
        let id = ["T1", "T2", "T3", "T4", "T17", "T18"][idx];
        let opts = RunOptions {
            clutters: Some(ClutterSpec { count: 15, max_n: 5, seed }),
            ..RunOptions::default()
        };
        let r = report(Kind::Check, id, "graphs:n<=4", &opts);
        prop_assert!(balanced(&r));
        prop_assert_eq!(r.fails, 0);
        let text = serde_json::to_value(&r).unwrap();
        prop_assert_eq!(text["instances_tested"].as_u64().unwrap() as usize, r.instances_tested);
    }
}
