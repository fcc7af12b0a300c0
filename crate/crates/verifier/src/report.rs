//! JSON reports of checks and hunts, and the parallel runner producing them.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use regpd_core::budget::{with_limits, Limits};
use regpd_core::homology::Field;
use regpd_core::Error;
use serde::Serialize;
use serde_json::{json, Value as Json};

use crate::checks::{Check, Outcome};
use crate::corpus::{Corpus, Item, RecordError};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Check,
    Hunt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "fails")]
    Fails,
    #[serde(rename = "skipped-precondition")]
    Skipped,
    #[serde(rename = "budget-exceeded")]
    Exceeded,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceResult {
    pub instance: String,
    /// graph6 of the corpus graph, or the clutter text.
    pub input: String,
    pub field: Option<Field>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Json>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precondition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ClutterSpec {
    pub count: usize,
    pub max_n: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub schema: u32,
    pub kind: Kind,
    pub id: String,
    pub statement: String,
    pub corpus: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clutters: Option<ClutterSpec>,
    pub fields: Vec<Field>,
    pub jobs: usize,
    pub timeout_secs: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget_secs: Option<f64>,
    pub instances_tested: usize,
    pub holds: usize,
    pub fails: usize,
    pub skipped: usize,
    pub exceeded: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub corpus_errors: Vec<RecordError>,
    /// For hunts: the first counterexample in corpus order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub found: Option<InstanceResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcome: Option<String>,
    pub wall_clock_ms: f64,
    pub cpu_ms: f64,
    pub instances: Vec<InstanceResult>,
}

impl CheckReport {
    pub fn first_failure(&self) -> Option<&InstanceResult> {
        self.instances.iter().find(|r| r.verdict == Verdict::Fails)
    }

    /// One line for terminals and logs.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "{} {} on {}: {} tested, {} hold, {} fail, {} skipped, {} exceeded, {:.0} ms",
            match self.kind {
                Kind::Check => "check",
                Kind::Hunt => "hunt",
            },
            self.id,
            self.corpus,
            self.instances_tested,
            self.holds,
            self.fails,
            self.skipped,
            self.exceeded,
            self.wall_clock_ms
        );
        if let Some(o) = &self.outcome {
            s.push_str(&format!(" ({o})"));
        }
        s
    }
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub fields: Vec<Field>,
    /// Worker threads; 0 picks the number of CPUs.
    pub jobs: usize,
    pub timeout: Duration,
    pub budget: Option<Duration>,
    pub clutters: Option<ClutterSpec>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            fields: Field::ALL.to_vec(),
            jobs: 0,
            timeout: Duration::from_secs(10),
            budget: None,
            clutters: None,
        }
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1000.0
}

fn evaluate(check: &Check, item: &Item, field: Option<Field>, opts: &RunOptions, over: &AtomicBool) -> Vec<InstanceResult> {
    let input = item.subject.encode();
    let base = |suffix: &str, verdict, elapsed| InstanceResult {
        instance: if suffix.is_empty() {
            item.label.clone()
        } else {
            format!("{}:{suffix}", item.label)
        },
        input: input.clone(),
        field,
        verdict,
        witness: None,
        precondition: None,
        reason: None,
        elapsed_ms: elapsed,
    };
    if over.load(Ordering::Relaxed) {
        let mut r = base("", Verdict::Exceeded, 0.0);
        r.reason = Some("global budget exhausted".into());
        return vec![r];
    }
    let start = Instant::now();
    let subs = with_limits(Limits::timeout(opts.timeout), || {
        (check.run)(&item.subject, field.unwrap_or(Field::Gf2))
    });
    let elapsed = ms(start.elapsed());
    let per = elapsed / subs.len().max(1) as f64;
    subs.into_iter()
        .map(|s| match s.result {
            Ok(Outcome::Holds) => base(&s.suffix, Verdict::Holds, per),
            Ok(Outcome::Fails(values)) => {
                let mut r = base(&s.suffix, Verdict::Fails, per);
                r.witness = Some(json!({"input": input, "part": s.suffix, "field": field, "values": values}));
                r
            }
            Ok(Outcome::Skip(why)) => {
                let mut r = base(&s.suffix, Verdict::Skipped, per);
                r.precondition = Some(why);
                r
            }
            Err(Error::BudgetExceeded) => {
                let mut r = base(&s.suffix, Verdict::Exceeded, per);
                r.reason = Some(format!("instance timeout of {} s", opts.timeout.as_secs_f64()));
                r
            }
            Err(Error::Inconsistent(msg)) => {
                let mut r = base(&s.suffix, Verdict::Fails, per);
                r.witness = Some(json!({"input": input, "part": s.suffix, "field": field, "error": msg}));
                r
            }
            Err(e) => {
                let mut r = base(&s.suffix, Verdict::Skipped, per);
                r.precondition = Some(e.to_string());
                r
            }
        })
        .collect()
}

/// Runs `check` over every corpus item (and field, when it matters) on a
/// bounded pool; results come back in corpus order.
pub fn run(kind: Kind, check: &Check, descriptor: &str, corpus: &Corpus, opts: &RunOptions) -> CheckReport {
    let start = Instant::now();
    let fields: Vec<Option<Field>> = if check.uses_field {
        opts.fields.iter().copied().map(Some).collect()
    } else {
        vec![None]
    };
    let units: Vec<(&Item, Option<Field>)> = corpus
        .items
        .iter()
        .flat_map(|it| fields.iter().map(move |&f| (it, f)))
        .collect();
    let over = AtomicBool::new(false);
    let deadline = opts.budget.map(|b| start + b);
    let work = || {
        units
            .par_iter()
            .map(|&(item, f)| {
                if deadline.is_some_and(|d| Instant::now() > d) {
                    over.store(true, Ordering::Relaxed);
                }
                evaluate(check, item, f, opts, &over)
            })
            .collect::<Vec<_>>()
    };
    let nested = if opts.jobs == 0 {
        work()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool")
            .install(work)
    };
    let instances: Vec<InstanceResult> = nested.into_iter().flatten().collect();
    let count = |v| instances.iter().filter(|r| r.verdict == v).count();
    let found = match kind {
        Kind::Hunt => instances.iter().find(|r| r.verdict == Verdict::Fails).cloned(),
        Kind::Check => None,
    };
    let outcome = (kind == Kind::Hunt).then(|| {
        if found.is_some() {
            "counterexample found".to_string()
        } else {
            "none found within corpus/budget".to_string()
        }
    });
    CheckReport {
        schema: SCHEMA,
        kind,
        id: check.id.to_string(),
        statement: check.statement.to_string(),
        corpus: descriptor.to_string(),
        clutters: opts.clutters,
        fields: opts.fields.clone(),
        jobs: if opts.jobs == 0 {
            rayon::current_num_threads()
        } else {
            opts.jobs
        },
        timeout_secs: opts.timeout.as_secs_f64(),
        budget_secs: opts.budget.map(|b| b.as_secs_f64()),
        instances_tested: instances.len(),
        holds: count(Verdict::Holds),
        fails: count(Verdict::Fails),
        skipped: count(Verdict::Skipped),
        exceeded: count(Verdict::Exceeded),
        corpus_errors: corpus.errors.clone(),
        cpu_ms: instances.iter().map(|r| r.elapsed_ms).sum(),
        found,
        outcome,
        wall_clock_ms: ms(start.elapsed()),
        instances,
    }
}

/// Exit status for a finished report: 1 iff something fails.
pub fn exit_code(r: &CheckReport) -> i32 {
    i32::from(r.fails > 0)
}
