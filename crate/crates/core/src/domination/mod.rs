//! Exact domination-type and covering invariants of small graphs.

mod edges;
mod mis;
mod record;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};
use crate::transversal::SetFamily;
use crate::vset::VertexSet;

pub use edges::{cochordal_cover, edge_domination, edgewise_domination, induced_matching};
pub use mis::maximum_independent_set;
pub use record::{Invariant, InvariantRecord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    Vertices(Vec<usize>),
    Edges(Vec<(usize, usize)>),
    /// Edge sets of the covering subgraphs.
    Cover(Vec<Vec<(usize, usize)>>),
}

/// An exact value together with a set attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Value {
    pub value: usize,
    pub witness: Witness,
}

impl Value {
    fn vertices(s: VertexSet) -> Value {
        Value {
            value: s.len(),
            witness: Witness::Vertices(s.to_vec()),
        }
    }

    /// The witness as a vertex set, if it is one.
    pub fn vertex_set(&self) -> Option<VertexSet> {
        match &self.witness {
            Witness::Vertices(v) => Some(v.iter().copied().collect()),
            _ => None,
        }
    }
}

fn closed_neighbourhoods(g: &Graph) -> Vec<VertexSet> {
    (0..g.n()).map(|v| g.closed_neighbors(v)).collect()
}

fn require_vertices(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    Ok(())
}

pub(crate) fn require_edges(g: &Graph) -> Result<()> {
    if !g.has_edges() {
        return Err(Error::Edgeless);
    }
    Ok(())
}

fn found(s: Option<VertexSet>, what: &str) -> Result<VertexSet> {
    s.ok_or_else(|| Error::Inconsistent(format!("no {what} found")))
}

/// `γ(G)`.
pub fn domination_number(g: &Graph) -> Result<Value> {
    let sets = closed_neighbourhoods(g);
    let s = SetFamily::new(g.vertices(), &sets).minimum()?;
    Ok(Value::vertices(found(s, "dominating set")?))
}

/// `Γ(G)`, the largest minimal dominating set.
pub fn upper_domination(g: &Graph) -> Result<Value> {
    require_vertices(g)?;
    let sets = closed_neighbourhoods(g);
    let s = SetFamily::new(g.vertices(), &sets).maximum_minimal()?;
    Ok(Value::vertices(found(s, "minimal dominating set")?))
}

/// `i(G)`, the smallest independent dominating set.
pub fn independent_domination(g: &Graph) -> Result<Value> {
    require_vertices(g)?;
    let sets = closed_neighbourhoods(g);
    let s = SetFamily::new(g.vertices(), &sets)
        .independent_in(g.adjacency())
        .minimum()?;
    Ok(Value::vertices(found(s, "independent dominating set")?))
}

/// `γ(Y, G)`: fewest vertices whose open neighbourhoods cover `y`.
pub fn gamma_of_set(y: VertexSet, g: &Graph) -> Result<Value> {
    let mut sets = Vec::with_capacity(y.len());
    for v in y.iter() {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if g.degree(v) == 0 {
            return Err(Error::IsolatedVertex(v));
        }
        sets.push(g.neighbors(v));
    }
    let s = SetFamily::new(g.vertices(), &sets).minimum()?;
    Ok(Value::vertices(found(s, "dominating set of Y")?))
}

/// `τ(G)`: the largest `γ(A, G°)` over independent sets `A` of `G°`.
/// `γ(·, G°)` is monotone, so maximal independent sets suffice. The
/// witness is `A`.
pub fn independence_domination(g: &Graph) -> Result<Value> {
    let (h, _) = g.induced(g.vertices() - g.isolated_vertices());
    let sets = closed_neighbourhoods(&h);
    let maximal = SetFamily::new(h.vertices(), &sets)
        .independent_in(h.adjacency())
        .minimal_transversals()?;
    let mut best = (0, VertexSet::EMPTY);
    for a in maximal {
        let v = gamma_of_set(a, &h)?.value;
        if v > best.0 {
            best = (v, a);
        }
    }
    let map: Vec<usize> = (g.vertices() - g.isolated_vertices()).to_vec();
    Ok(Value {
        value: best.0,
        witness: Witness::Vertices(best.1.iter().map(|v| map[v]).collect()),
    })
}

/// `γ_us(G)`: the smallest dominating set containing an edge.
pub fn unstable_domination(g: &Graph) -> Result<Value> {
    require_edges(g)?;
    let mut best: Option<VertexSet> = None;
    for (u, v) in g.edges() {
        let pair = VertexSet::singleton(u).with(v);
        let rest = g.vertices() - g.closed_neighborhood_of(pair);
        let sets: Vec<VertexSet> = rest.iter().map(|w| g.closed_neighbors(w)).collect();
        let x = found(
            SetFamily::new(g.vertices(), &sets).minimum()?,
            "dominating completion",
        )?;
        let d = x | pair;
        if best.is_none_or(|b| d.len() < b.len()) {
            best = Some(d);
        }
    }
    Ok(Value::vertices(found(best, "unstable dominating set")?))
}

/// `N[e]` for every edge, in `g.edges()` order.
fn edge_neighbourhoods(g: &Graph) -> Vec<VertexSet> {
    g.edges()
        .map(|(x, y)| g.closed_neighbors(x) | g.closed_neighbors(y))
        .collect()
}

fn upper_vw(g: &Graph, independent: bool) -> Result<Value> {
    require_edges(g)?;
    let sets = edge_neighbourhoods(g);
    let mut family = SetFamily::new(g.vertices(), &sets);
    if independent {
        family = family.independent_in(g.adjacency());
    }
    let s = found(family.maximum_minimal()?, "minimal vertex-wise dominating set")?;
    vertexwise_certificate(g, s)?;
    Ok(Value::vertices(s))
}

/// For each member of a minimal vertex-wise dominating set, an edge it
/// privately dominates.
pub fn vertexwise_certificate(g: &Graph, s: VertexSet) -> Result<Vec<(usize, (usize, usize))>> {
    let sets = edge_neighbourhoods(g);
    let family = SetFamily::new(g.vertices(), &sets);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    match family.private_witnesses(s) {
        Some(w) if family.is_transversal(s) => Ok(w.into_iter().map(|(v, i)| (v, edges[i])).collect()),
        _ => Err(Error::Inconsistent(format!(
            "{:?} is not a minimal vertex-wise dominating set",
            s.to_vec()
        ))),
    }
}

/// `Υ(G)`.
pub fn upper_vertexwise(g: &Graph) -> Result<Value> {
    upper_vw(g, false)
}

/// `β(G)`.
pub fn upper_independent_vertexwise(g: &Graph) -> Result<Value> {
    upper_vw(g, true)
}

/// `α(G)`.
pub fn independence_number(g: &Graph) -> Result<Value> {
    let rows: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
    let s = maximum_independent_set(&rows)?;
    Ok(Value {
        value: s.len(),
        witness: Witness::Vertices(s),
    })
}

/// `h_X(B)` for `X` the given side: fewest `S ⊆ X` within distance 3 of
/// every vertex on the other side.
pub fn h_side(b: &BipartiteGraph, side: u8) -> Result<Value> {
    let g = b.graph();
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    let x = b.side(side);
    let far: Vec<Vec<Option<usize>>> = (0..g.n())
        .map(|s| {
            if x.contains(s) {
                g.distances_from(s)
            } else {
                vec![]
            }
        })
        .collect();
    let sets: Vec<VertexSet> = b
        .side(1 - side)
        .iter()
        .map(|y| x.iter().filter(|&s| far[s][y].is_some_and(|d| d <= 3)).collect())
        .collect();
    let s = SetFamily::new(x, &sets).minimum()?;
    Ok(Value::vertices(found(s, "distance-three dominating set")?))
}
