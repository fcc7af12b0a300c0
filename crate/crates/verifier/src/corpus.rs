//! Corpus descriptors and the graph streams they name.
//!
//! Descriptors:
//! - `labeled:n<=K` (also `a<=n<=K`, `≤` accepted): every labeled graph,
//!   `K ≤ 6`.
//! - `graphs:n<=K`: one graph per isomorphism class.
//! - `bipartite:n<=K`: one bipartite graph per isomorphism class.
//! - any other string is a path: a graph6 file, or a directory of edge-list
//!   files read in file-name order.
//!
//! Generators take comma-separated filters after the range: `connected`,
//! `no-isolated`, `chordal`, `bipartite`, `edges`.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use regpd_core::graph::io::{parse_edge_list, parse_graph6, to_graph6};
use regpd_core::graph::{canonical_form, is_chordal, CanonicalKey};
use regpd_core::{Clutter, Error, Graph, VertexSet};
use serde::Serialize;

pub const MAX_LABELED: usize = 6;

#[derive(Debug, Clone)]
pub enum Subject {
    Graph(Graph),
    Clutter(Clutter),
}

impl Subject {
    /// Text that rebuilds the subject: graph6, or the clutter file format.
    pub fn encode(&self) -> String {
        match self {
            Subject::Graph(g) => to_graph6(g),
            Subject::Clutter(c) => c.to_text(),
        }
    }

    pub fn as_graph(&self) -> Option<&Graph> {
        match self {
            Subject::Graph(g) => Some(g),
            Subject::Clutter(_) => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Item {
    pub label: String,
    pub subject: Subject,
}

/// A record that could not be read; the stream goes on without it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordError {
    pub source: String,
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Default)]
pub struct Corpus {
    pub items: Vec<Item>,
    pub errors: Vec<RecordError>,
}

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("bad corpus descriptor `{0}`: {1}")]
    Descriptor(String, String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    Connected,
    NoIsolated,
    Chordal,
    Bipartite,
    Edges,
}

impl Filter {
    fn parse(s: &str) -> Option<Filter> {
        Some(match s {
            "connected" => Filter::Connected,
            "no-isolated" | "noisolated" => Filter::NoIsolated,
            "chordal" => Filter::Chordal,
            "bipartite" => Filter::Bipartite,
            "edges" => Filter::Edges,
            _ => return None,
        })
    }

    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::Connected => g.n() > 0 && g.is_connected(),
            Filter::NoIsolated => g.isolated_vertices().is_empty(),
            Filter::Chordal => is_chordal(g),
            Filter::Bipartite => g.is_bipartite(),
            Filter::Edges => g.has_edges(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Generator {
    Labeled,
    Classes,
    Bipartite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct GenSpec {
    kind: Generator,
    lo: usize,
    hi: usize,
    filters: Vec<Filter>,
}

fn parse_range(s: &str) -> Option<(usize, usize)> {
    let s = s.replace('≤', "<=").replace(' ', "");
    let parts: Vec<&str> = s.split("<=").collect();
    match parts[..] {
        ["n", hi] => Some((1, hi.parse().ok()?)),
        [lo, "n", hi] => Some((lo.parse().ok()?, hi.parse().ok()?)),
        _ => None,
    }
}

fn parse_generator(desc: &str) -> Option<Result<GenSpec, CorpusError>> {
    let (head, body) = desc.split_once(':')?;
    let kind = match head {
        "labeled" => Generator::Labeled,
        "graphs" => Generator::Classes,
        "bipartite" => Generator::Bipartite,
        _ => return None,
    };
    let bad = |msg: String| Some(Err(CorpusError::Descriptor(desc.to_string(), msg)));
    let mut tokens = body.split(',').map(str::trim).filter(|t| !t.is_empty());
    let Some((lo, hi)) = tokens.next().and_then(parse_range) else {
        return bad("expected a range such as n<=5".into());
    };
    if kind == Generator::Labeled && hi > MAX_LABELED {
        return bad(format!("labeled enumeration is limited to n <= {MAX_LABELED}"));
    }
    if hi > regpd_core::vset::MAX_VERTICES {
        return bad(format!("n <= {hi} is too large"));
    }
    let mut filters = Vec::new();
    for t in tokens {
        match Filter::parse(t) {
            Some(f) => filters.push(f),
            None => return bad(format!("unknown filter `{t}`")),
        }
    }
    Some(Ok(GenSpec { kind, lo, hi, filters }))
}

/// Reads or generates the corpus named by `desc`.
pub fn enumerate_corpus(desc: &str) -> Result<Corpus, CorpusError> {
    if let Some(spec) = parse_generator(desc) {
        let spec = spec?;
        let graphs: Vec<(String, Graph)> = match spec.kind {
            Generator::Labeled => (spec.lo..=spec.hi)
                .flat_map(|n| {
                    labeled_graphs(n)
                        .enumerate()
                        .map(move |(i, g)| (format!("n{n}#{i}"), g))
                })
                .collect(),
            Generator::Classes | Generator::Bipartite => {
                let levels = graph_classes(spec.hi, spec.kind == Generator::Bipartite);
                levels
                    .into_iter()
                    .enumerate()
                    .filter(|(n, _)| *n >= spec.lo)
                    .flat_map(|(n, gs)| {
                        gs.into_iter()
                            .enumerate()
                            .map(move |(i, g)| (format!("n{n}#{i}"), g))
                    })
                    .collect()
            }
        };
        let items = graphs
            .into_iter()
            .filter(|(_, g)| spec.filters.iter().all(|f| f.accepts(g)))
            .map(|(label, g)| Item {
                label,
                subject: Subject::Graph(g),
            })
            .collect();
        return Ok(Corpus {
            items,
            errors: vec![],
        });
    }
    let path = Path::new(desc);
    let io = |e| CorpusError::Io {
        path: desc.to_string(),
        source: e,
    };
    if path.is_dir() {
        let mut names: Vec<_> = fs::read_dir(path)
            .map_err(io)?
            .map(|e| e.map(|e| e.path()))
            .collect::<Result<_, _>>()
            .map_err(io)?;
        names.retain(|p| p.is_file());
        names.sort();
        let mut corpus = Corpus::default();
        for p in names {
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            let text = fs::read_to_string(&p).map_err(|e| CorpusError::Io {
                path: p.display().to_string(),
                source: e,
            })?;
            match parse_edge_list(&text) {
                Ok(g) => corpus.items.push(Item {
                    label: name,
                    subject: Subject::Graph(g),
                }),
                Err(e) => corpus.errors.push(RecordError {
                    line: match e {
                        Error::Parse { line, .. } => line,
                        _ => 0,
                    },
                    source: name,
                    message: e.to_string(),
                }),
            }
        }
        Ok(corpus)
    } else {
        let text = fs::read_to_string(path).map_err(io)?;
        Ok(read_graph6_lines(desc, &text))
    }
}

/// One graph per non-empty line; bad lines become [`RecordError`]s.
pub fn read_graph6_lines(source: &str, text: &str) -> Corpus {
    let mut corpus = Corpus::default();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line == ">>graph6<<" {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => corpus.items.push(Item {
                label: format!("line{}", i + 1),
                subject: Subject::Graph(g),
            }),
            Err(e) => corpus.errors.push(RecordError {
                source: source.to_string(),
                line: i + 1,
                message: e.to_string(),
            }),
        }
    }
    corpus
}

/// All labeled graphs on `n` vertices, by edge mask over the pairs in
/// lexicographic order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::new(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .expect("pairs are distinct and in range")
    })
}

/// Isomorphism classes on `0..=max_n` vertices, level by level in key
/// order. Each class on `n` vertices is some class on `n − 1` vertices plus
/// one vertex, so the levels are grown by vertex addition.
pub fn graph_classes(max_n: usize, bipartite_only: bool) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::edgeless(0).unwrap()]];
    for n in 1..=max_n {
        let prev = &levels[n - 1];
        let keys: BTreeSet<CanonicalKey> = prev
            .par_iter()
            .flat_map_iter(|g| {
                VertexSet::full(n - 1).subsets().filter_map(move |s| {
                    let mut adj: Vec<VertexSet> = g
                        .adjacency()
                        .iter()
                        .enumerate()
                        .map(|(v, &a)| if s.contains(v) { a.with(n - 1) } else { a })
                        .collect();
                    adj.push(s);
                    let h = Graph::from_adjacency(adj).expect("simple graph");
                    (!bipartite_only || h.is_bipartite()).then(|| canonical_form(&h).0)
                })
            })
            .collect();
        levels.push(keys.into_iter().map(|k| k.to_graph()).collect());
    }
    levels
}

/// `count` random clutters on `2..=max_n` vertices from a seeded stream.
pub fn random_clutters(count: usize, max_n: usize, seed: u64) -> Vec<Item> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_n = max_n.max(2);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(2..=max_n);
            let m = rng.gen_range(1..=n + 2);
            let mut sets: Vec<VertexSet> = (0..m)
                .map(|_| loop {
                    let s = VertexSet::from_bits(rng.gen::<u64>() & VertexSet::full(n).bits());
                    if s.len() >= 2 {
                        break s;
                    }
                })
                .collect();
            sets.sort_by_key(|s| s.bits());
            sets.dedup();
            let minimal: Vec<VertexSet> = sets
                .iter()
                .filter(|a| !sets.iter().any(|b| b.is_proper_subset(**a)))
                .copied()
                .collect();
            Item {
                label: format!("clutter#{i}"),
                subject: Subject::Clutter(Clutter::new(n, minimal).expect("antichain of sets of size >= 2")),
            }
        })
        .collect()
}
