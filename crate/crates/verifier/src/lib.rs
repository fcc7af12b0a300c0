//! Corpus ingestion, the theorem-check registry and counterexample hunts.

pub mod checks;
pub mod corpus;
pub mod invariants;
pub mod report;

pub use checks::{find_check, find_hunt, Check, Outcome, CHECKS, HUNTS};
pub use corpus::{enumerate_corpus, random_clutters, Corpus, CorpusError, Item, Subject};
pub use report::{exit_code, run, CheckReport, ClutterSpec, InstanceResult, Kind, RunOptions, Verdict};

/// Corpus plus the optional seeded clutters, ready for [`run`].
pub fn load(descriptor: &str, clutters: Option<ClutterSpec>) -> Result<Corpus, CorpusError> {
    let mut corpus = enumerate_corpus(descriptor)?;
    if let Some(c) = clutters {
        corpus.items.extend(random_clutters(c.count, c.max_n, c.seed));
    }
    Ok(corpus)
}
