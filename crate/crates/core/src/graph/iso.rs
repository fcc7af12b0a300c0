//! Canonical labelling by partition refinement and individualisation.
//!
//! Adequate for the desk-scale graphs used here (up to ~20 vertices). Twin
//! vertices in the branching cell are explored once, which tames complete,
//! edgeless and complete bipartite pieces.

use serde::{Deserialize, Serialize};

use crate::vset::VertexSet;

use super::Graph;

/// Isomorphism-invariant key: equal keys iff isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalKey {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_adjacency(self.rows.iter().map(|&r| VertexSet::from_bits(r)).collect())
            .expect("canonical rows describe a simple graph")
    }
}

type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next: Partition = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = c
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|m| (g.neighbors(v) & *m).len()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn leaf_rows(g: &Graph, cells: &Partition) -> (Vec<u64>, Vec<usize>) {
    let mut perm = vec![0usize; g.n()];
    for (i, c) in cells.iter().enumerate() {
        perm[c[0]] = i;
    }
    let mut rows = vec![0u64; g.n()];
    for v in 0..g.n() {
        rows[perm[v]] = g.neighbors(v).map(&perm).bits();
    }
    (rows, perm)
}

fn are_twins(g: &Graph, u: usize, w: usize) -> bool {
    g.neighbors(u).without(w) == g.neighbors(w).without(u)
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let leaf = leaf_rows(g, &cells);
        if best.as_ref().is_none_or(|b| leaf.0 < b.0) {
            *best = Some(leaf);
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&u| u != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        search(g, refine(g, next), best);
    }
}

/// Canonical relabelling: returns the key and `perm` with `perm[v]` the
/// canonical position of `v`.
pub fn canonical_form(g: &Graph) -> (CanonicalKey, Vec<usize>) {
    if g.n() == 0 {
        return (CanonicalKey { n: 0, rows: vec![] }, vec![]);
    }
    let start = refine(g, vec![(0..g.n()).collect()]);
    let mut best = None;
    search(g, start, &mut best);
    let (rows, perm) = best.expect("search visits at least one leaf");
    (CanonicalKey { n: g.n(), rows }, perm)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g).0 == canonical_form(h).0
}
