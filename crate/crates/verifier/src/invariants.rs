//! Invariant reports for a single graph.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use regpd_core::complex::independence_complex_of_graph;
use regpd_core::domination::{h_side, Invariant, InvariantRecord};
use regpd_core::graph::io::{parse_edge_list, parse_graph6, to_graph6};
use regpd_core::homology::{betti_table, graph_regularity, BettiTable, Field, DEFAULT_BETTI_CAP};
use regpd_core::prime::cached_proj_dim;
use regpd_core::{BipartiteGraph, Error, Graph, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selected {
    Domination(Invariant),
    HSide,
    Pd,
    Reg,
    Betti,
}

impl FromStr for Selected {
    type Err = Error;

    fn from_str(s: &str) -> Result<Selected> {
        Ok(match s {
            "pd" => Selected::Pd,
            "reg" => Selected::Reg,
            "betti" => Selected::Betti,
            "h_side" => Selected::HSide,
            _ => Selected::Domination(s.parse()?),
        })
    }
}

pub fn parse_selection(s: &str) -> Result<Vec<Selected>> {
    let sel: Vec<Selected> = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    if sel.is_empty() {
        return Err(Error::InvalidParameter("empty selection".into()));
    }
    Ok(sel)
}

/// A graph from graph6 text or an edge list (recognised by its `n m` header).
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text.lines().next().unwrap_or("").trim();
    if first.split_whitespace().count() == 2 {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub schema: u32,
    pub graph: String,
    pub n: usize,
    pub m: usize,
    #[serde(flatten)]
    pub record: InvariantRecord,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub pd: BTreeMap<Field, usize>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub reg: BTreeMap<Field, usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub betti: Vec<BettiTable>,
    pub timings_ms: BTreeMap<String, f64>,
}

fn timed<T>(timings: &mut BTreeMap<String, f64>, key: String, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timings.insert(key, start.elapsed().as_secs_f64() * 1000.0);
    out
}

/// Computes exactly the selected values; failures are reported in-band.
pub fn invariants(g: &Graph, selection: &[Selected], fields: &[Field]) -> InvariantReport {
    let mut r = InvariantReport {
        schema: crate::report::SCHEMA,
        graph: to_graph6(g),
        n: g.n(),
        m: g.edge_count(),
        record: InvariantRecord::default(),
        pd: BTreeMap::new(),
        reg: BTreeMap::new(),
        betti: vec![],
        timings_ms: BTreeMap::new(),
    };
    for &sel in selection {
        match sel {
            Selected::Domination(inv) => {
                let v = timed(&mut r.timings_ms, inv.name().into(), || inv.compute(g));
                r.record.insert(inv, v);
            }
            Selected::HSide => {
                let v = timed(&mut r.timings_ms, "h_side".into(), || {
                    BipartiteGraph::from_graph(g.clone()).and_then(|b| h_side(&b, 0))
                });
                match v {
                    Ok(v) => {
                        r.record.h_side = Some(v.value);
                        r.record.witnesses.insert("h_side".into(), v.witness);
                    }
                    Err(e) => {
                        r.record.errors.insert("h_side".into(), e.to_string());
                    }
                }
            }
            Selected::Pd | Selected::Reg | Selected::Betti => {
                for &f in fields {
                    let name = match sel {
                        Selected::Pd => "pd",
                        Selected::Reg => "reg",
                        _ => "betti",
                    };
                    let key = format!("{name}:{f}");
                    let out = timed(&mut r.timings_ms, key.clone(), || -> Result<()> {
                        match sel {
                            Selected::Pd => {
                                r.pd.insert(f, cached_proj_dim(g, f)?);
                            }
                            Selected::Reg => {
                                r.reg.insert(f, graph_regularity(g, f)?.value);
                            }
                            _ => {
                                let d = independence_complex_of_graph(g)?;
                                r.betti.push(betti_table(&d, f, DEFAULT_BETTI_CAP)?);
                            }
                        }
                        Ok(())
                    });
                    if let Err(e) = out {
                        r.record.errors.insert(key, e.to_string());
                    }
                }
            }
        }
    }
    r
}
