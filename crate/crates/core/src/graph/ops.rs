use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;

use super::{BipartiteGraph, Graph};

/// `S(G)`: vertices `0..n` are the original vertices (side 0), vertex `n + k`
/// subdivides the `k`-th edge of `g.edges()` (side 1).
pub fn subdivision(g: &Graph) -> Result<BipartiteGraph> {
    let n = g.n();
    let edges: Vec<_> = g.edges().collect();
    let mut s = Graph::edgeless(n + edges.len())?;
    for (k, &(u, v)) in edges.iter().enumerate() {
        s.link(u, n + k);
        s.link(v, n + k);
    }
    let mut side = vec![0u8; n];
    side.resize(n + edges.len(), 1);
    BipartiteGraph::new(s, side)
}

/// `G²`: same vertices, `xy` an edge iff `dist(x, y) <= 2`.
pub fn square(g: &Graph) -> Graph {
    let adj = (0..g.n())
        .map(|v| g.neighborhood_of(g.closed_neighbors(v)).without(v))
        .collect();
    Graph::from_adjacency(adj).expect("square of a simple graph is simple")
}

/// `G * H`: vertices of `h` follow those of `g`, every cross pair is an edge.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let mut j = g.disjoint_union(h)?;
    for u in 0..g.n() {
        for v in 0..h.n() {
            j.link(u, g.n() + v);
        }
    }
    Ok(j)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(k) => Some(k),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(k) => write!(f, "{k}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

pub fn girth(g: &Graph) -> Girth {
    let mut best = usize::MAX;
    for s in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for v in g.neighbors(u).iter() {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if parent[u] != v {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// If `b ≅ S(G)` for some graph `G`, return such a `G`.
///
/// Tries side 1 as the subdivision side first, then side 0. The returned
/// graph numbers the other side's vertices in increasing order.
pub fn recognize_subdivision(b: &BipartiteGraph) -> Option<Graph> {
    let g = b.graph();
    // C4-free bipartite graph: no two vertices share two neighbours.
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if (g.neighbors(u) & g.neighbors(v)).len() >= 2 {
                return None;
            }
        }
    }
    [1u8, 0].into_iter().find_map(|i| {
        let mid = b.side(i);
        if !mid.iter().all(|v| g.degree(v) == 2) {
            return None;
        }
        let (_, old) = g.induced(b.side(1 - i));
        let mut new_of = vec![usize::MAX; g.n()];
        for (k, &v) in old.iter().enumerate() {
            new_of[v] = k;
        }
        let edges = mid.iter().map(|m| {
            let ends = g.neighbors(m).to_vec();
            (new_of[ends[0]], new_of[ends[1]])
        });
        Graph::new(old.len(), edges).ok()
    })
}
