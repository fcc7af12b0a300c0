//! Projectively prime graphs, prime decompositions and the gap families.

mod gap;

use std::sync::OnceLock;

use dashmap::DashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalKey, Graph};
use crate::homology::{proj_dim, proj_dim_links, Field};
use crate::vset::VertexSet;

pub use gap::{gap_graph_g, gap_graph_h, gap_graph_r, gap_graph_z, ClosedForms, GapFamily, GapGraph, Sandwich};

/// `pd` of connected graphs per (isomorphism class, field), shared by every
/// caller in the process. Values come from the link route.
pub struct PdCache {
    map: DashMap<(CanonicalKey, Field), usize>,
}

impl PdCache {
    pub fn global() -> &'static PdCache {
        static CACHE: OnceLock<PdCache> = OnceLock::new();
        CACHE.get_or_init(|| PdCache { map: DashMap::new() })
    }

    /// `pd(G)` as the sum over components, each looked up or computed once.
    pub fn proj_dim(&self, g: &Graph, f: Field) -> Result<usize> {
        let mut total = 0;
        for c in g.components() {
            let (h, _) = g.induced(c);
            if h.has_edges() {
                total += self.connected(&h, f)?;
            }
        }
        Ok(total)
    }

    fn connected(&self, g: &Graph, f: Field) -> Result<usize> {
        let key = (canonical_form(g).0, f);
        if let Some(v) = self.map.get(&key) {
            return Ok(*v);
        }
        let v = proj_dim_links(g, f)?;
        if let Some(old) = self.map.insert(key, v) {
            if old != v {
                return Err(Error::Inconsistent(format!("cached pd {old} but recomputed {v}")));
            }
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// `pd(G)` through the process-wide cache.
pub fn cached_proj_dim(g: &Graph, f: Field) -> Result<usize> {
    PdCache::global().proj_dim(g, f)
}

fn sub_pd(g: &Graph, keep: VertexSet, f: Field) -> Result<usize> {
    cached_proj_dim(&g.induced(keep).0, f)
}

/// Connected, with an edge, and `pd(G − x) < pd(G)` for every vertex `x`.
pub fn is_projectively_prime(g: &Graph, f: Field) -> Result<bool> {
    if !g.has_edges() {
        return Err(Error::Edgeless);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let pd = cached_proj_dim(g, f)?;
    for x in 0..g.n() {
        if sub_pd(g, g.vertices().without(x), f)? >= pd {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pairwise disjoint vertex sets of size at least 2, each standing for the
/// induced subgraph on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decomposition {
    #[serde(with = "parts_serde")]
    pub parts: Vec<VertexSet>,
}

mod parts_serde {
    use super::VertexSet;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(parts: &[VertexSet], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Vec<usize>> = parts.iter().map(|p| p.to_vec()).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<VertexSet>, D::Error> {
        let v: Vec<Vec<usize>> = Vec::deserialize(d)?;
        Ok(v.into_iter().map(|p| p.into_iter().collect()).collect())
    }
}

impl Decomposition {
    pub fn union(&self) -> VertexSet {
        self.parts.iter().fold(VertexSet::EMPTY, |a, &p| a | p)
    }

    /// Parts are disjoint, have at least two vertices, and no edge of `g`
    /// joins two different parts.
    pub fn is_induced(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::EMPTY;
        for &p in &self.parts {
            if p.len() < 2 || p.intersects(seen) || !p.is_subset(g.vertices()) {
                return false;
            }
            seen |= p;
        }
        self.parts
            .iter()
            .all(|&p| !g.neighborhood_of(p).intersects(seen - p))
    }

    /// No edge of `g` avoids the closed neighbourhood of the union, so no
    /// further part with an edge fits.
    pub fn is_maximal(&self, g: &Graph) -> bool {
        let rest = g.vertices() - g.closed_neighborhood_of(self.union());
        !g.induced(rest).0.has_edges()
    }

    /// `Σ pd(G[part])`.
    pub fn pd_sum(&self, g: &Graph, f: Field) -> Result<usize> {
        self.parts.iter().map(|&p| sub_pd(g, p, f)).sum()
    }
}

/// Vertex sets of size at least 2 inducing a connected projectively prime
/// subgraph, in canonical subset order.
fn prime_parts(g: &Graph, f: Field) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    for s in g.vertices().subsets() {
        if s.len() < 2 {
            continue;
        }
        let (h, _) = g.induced(s);
        if h.is_connected() && is_projectively_prime(&h, f)? {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.cmp_canonical(b));
    Ok(out)
}

/// Every maximal induced decomposition of `g` into projectively prime parts.
pub fn prime_decompositions(g: &Graph, f: Field) -> Result<Vec<Decomposition>> {
    if !g.has_edges() {
        return Err(Error::Edgeless);
    }
    let cands = prime_parts(g, f)?;
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend(g, &cands, 0, VertexSet::EMPTY, &mut chosen, &mut out)?;
    Ok(out)
}

/// Families of candidates from index `from` on, none touching `closed`.
fn extend(
    g: &Graph,
    cands: &[VertexSet],
    from: usize,
    closed: VertexSet,
    chosen: &mut Vec<VertexSet>,
    out: &mut Vec<Decomposition>,
) -> Result<()> {
    crate::budget::tick()?;
    if !chosen.is_empty() {
        let d = Decomposition { parts: chosen.clone() };
        if d.is_maximal(g) {
            out.push(d);
        }
    }
    for (i, &c) in cands.iter().enumerate().skip(from) {
        if c.intersects(closed) {
            continue;
        }
        chosen.push(c);
        extend(g, cands, i + 1, closed | g.closed_neighborhood_of(c), chosen, out)?;
        chosen.pop();
    }
    Ok(())
}

/// `max Σ pd(parts)` over the prime decompositions, with a decomposition
/// attaining it. In debug builds the value is compared with `proj_dim`.
pub fn pd_via_decompositions(g: &Graph, f: Field) -> Result<(usize, Decomposition)> {
    let mut best: Option<(usize, Decomposition)> = None;
    for d in prime_decompositions(g, f)? {
        let v = d.pd_sum(g, f)?;
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            best = Some((v, d));
        }
    }
    let best = best.ok_or_else(|| Error::Inconsistent("no prime decomposition".into()))?;
    if cfg!(debug_assertions) {
        let pd = proj_dim(g, f)?;
        if pd != best.0 {
            return Err(Error::Inconsistent(format!(
                "decompositions give {} but pd is {pd}",
                best.0
            )));
        }
    }
    Ok(best)
}

/// `max{pd(G − N[x]) + deg x, pd(G − x) + 1}`, an upper bound on `pd(G)`.
pub fn pd_induct_upper(g: &Graph, x: usize, f: Field) -> Result<usize> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    let far = sub_pd(g, g.vertices() - g.closed_neighbors(x), f)? + g.degree(x);
    let del = sub_pd(g, g.vertices().without(x), f)? + 1;
    Ok(far.max(del))
}

#[cfg(test)]
mod tests;
