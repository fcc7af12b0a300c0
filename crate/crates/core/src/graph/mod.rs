//! Simple undirected graphs on vertices `0..n`.
//!
//! Vertex identity is positional. Every construction in this module documents
//! the numbering it produces.

mod chordal;
mod families;
pub mod io;
mod iso;
mod ops;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

pub use chordal::{is_chordal, is_cochordal, perfect_elimination_order};
pub use families::{build_family, disjoint_copies, Family};
pub use iso::{are_isomorphic, canonical_form, CanonicalKey};
pub use ops::{girth, join, recognize_subdivision, square, subdivision, Girth};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Build a graph, rejecting loops, out-of-range endpoints and repeated edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut g = Graph::edgeless(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            labels: None,
        })
    }

    /// Build from adjacency rows; rows must be symmetric and loop-free.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        for (u, row) in adj.iter().enumerate() {
            if row.contains(u) {
                return Err(Error::Loop(u));
            }
            for v in row.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if !adj[v].contains(u) {
                    return Err(Error::Inconsistent(format!("asymmetric adjacency {u}-{v}")));
                }
            }
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn has_edges(&self) -> bool {
        self.adj.iter().any(|r| !r.is_empty())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `N(U)`: union of open neighbourhoods.
    pub fn neighborhood_of(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// `N[U]`.
    pub fn closed_neighborhood_of(&self, set: VertexSet) -> VertexSet {
        self.neighborhood_of(set) | set
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Induced subgraph on `keep`, renumbered in increasing order. Returns the
    /// subgraph and the map from new to old vertex numbers.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| (self.adj[v] & keep).iter().map(|u| new_of[u]).collect())
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| old.iter().map(|&v| l[v].clone()).collect());
        (
            Graph {
                n: old.len(),
                adj,
                labels,
            },
            old,
        )
    }

    /// `G - U`.
    pub fn remove(&self, set: VertexSet) -> Graph {
        self.induced(self.vertices() - set).0
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.remove(VertexSet::singleton(v))
    }

    /// `G°`: the graph with isolated vertices removed.
    pub fn without_isolated(&self) -> Graph {
        self.remove(self.isolated_vertices())
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n)
            .map(|v| full - self.adj[v] - VertexSet::singleton(v))
            .collect();
        Graph {
            n: self.n,
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::edgeless(n)?;
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self.neighborhood_of(frontier) - comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Breadth-first distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let d = dist[u].unwrap();
            for v in self.adj[u].iter() {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    q.push_back(v);
                }
            }
        }
        dist
    }

    /// A proper 2-colouring if one exists; each component's smallest vertex gets side 0.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for v in self.adj[u].iter() {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        q.push_back(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Relabel: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].map(perm);
        }
        Graph {
            n: self.n,
            adj,
            labels: None,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// A graph with a fixed two-sided vertex partition.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteGraph {
    graph: Graph,
    side: Vec<u8>,
}

impl BipartiteGraph {
    pub fn new(graph: Graph, side: Vec<u8>) -> Result<BipartiteGraph> {
        if side.len() != graph.n() {
            return Err(Error::InvalidParameter(format!(
                "{} side labels for {} vertices",
                side.len(),
                graph.n()
            )));
        }
        if let Some(&bad) = side.iter().find(|&&s| s > 1) {
            return Err(Error::InvalidParameter(format!("side label {bad}")));
        }
        if let Some((u, v)) = graph.edges().find(|&(u, v)| side[u] == side[v]) {
            return Err(Error::NotBipartite(u, v));
        }
        Ok(BipartiteGraph { graph, side })
    }

    /// Use the canonical 2-colouring of a bipartite graph.
    pub fn from_graph(graph: Graph) -> Result<BipartiteGraph> {
        let side = graph.two_coloring().ok_or_else(|| {
            let (u, v) = graph.edges().next().unwrap_or((0, 0));
            Error::NotBipartite(u, v)
        })?;
        Ok(BipartiteGraph { graph, side })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn side_of(&self, v: usize) -> u8 {
        self.side[v]
    }

    pub fn sides(&self) -> &[u8] {
        &self.side
    }

    /// Vertex set `X_i`.
    pub fn side(&self, i: u8) -> VertexSet {
        (0..self.graph.n()).filter(|&v| self.side[v] == i).collect()
    }

    /// `Sp`-bipartite on side `i`: no `u != v` in `X_i` with `N(u) ⊆ N(v)`.
    pub fn is_sperner(&self, i: u8) -> bool {
        let xs = self.side(i).to_vec();
        xs.iter().all(|&u| {
            xs.iter()
                .all(|&v| u == v || !self.graph.neighbors(u).is_subset(self.graph.neighbors(v)))
        })
    }
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BipartiteGraph(X0={:?}, X1={:?}, edges={:?})",
            self.side(0),
            self.side(1),
            self.graph.edges().collect::<Vec<_>>()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::Loop(1)));
        assert!(matches!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(Graph::edgeless(65).is_err());
    }

    #[test]
    fn edges_sorted() {
        let g = Graph::new(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn induced_and_components() {
        let g = Graph::new(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components().len(), 2);
        let (h, map) = g.induced([0, 2, 3, 4].into_iter().collect());
        assert_eq!(map, vec![0, 2, 3, 4]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(2, 3)]);
        assert_eq!(g.remove_vertex(1).edge_count(), 1);
    }

    #[test]
    fn bipartition_checked() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(BipartiteGraph::from_graph(g.clone()).is_err());
        assert_eq!(
            BipartiteGraph::new(g, vec![0, 1, 1]),
            Err(Error::NotBipartite(1, 2))
        );
    }
}
