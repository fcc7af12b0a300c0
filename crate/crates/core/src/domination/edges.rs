use std::collections::HashSet;

use crate::budget::tick;
use crate::error::{Error, Result};
use crate::graph::{girth, is_cochordal, Graph};
use crate::transversal::SetFamily;
use crate::vset::{VertexSet, MAX_VERTICES};

use super::{found, maximum_independent_set, require_edges, Value, Witness};

struct Edges {
    list: Vec<(usize, usize)>,
    /// `N[e]` for each edge.
    nbhd: Vec<VertexSet>,
}

impl Edges {
    fn of(g: &Graph) -> Result<Edges> {
        require_edges(g)?;
        let list: Vec<(usize, usize)> = g.edges().collect();
        let nbhd = list
            .iter()
            .map(|&(x, y)| g.closed_neighbors(x) | g.closed_neighbors(y))
            .collect();
        Ok(Edges { list, nbhd })
    }

    fn all(&self) -> Result<VertexSet> {
        if self.list.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(self.list.len()));
        }
        Ok(VertexSet::full(self.list.len()))
    }

    fn ends(&self, i: usize) -> VertexSet {
        let (x, y) = self.list[i];
        VertexSet::singleton(x).with(y)
    }

    /// Adjacency of the line graph.
    fn line(&self) -> Vec<VertexSet> {
        let m = self.list.len();
        (0..m)
            .map(|i| {
                (0..m)
                    .filter(|&j| j != i && self.ends(i).intersects(self.ends(j)))
                    .collect()
            })
            .collect()
    }

    /// Pairs of distinct edges that share a vertex or are joined by an edge.
    fn touching(&self, i: usize, j: usize) -> bool {
        i != j && self.nbhd[i].intersects(self.ends(j))
    }

    fn pick(&self, s: VertexSet) -> Vec<(usize, usize)> {
        s.iter().map(|i| self.list[i]).collect()
    }

    fn value(&self, s: VertexSet) -> Value {
        Value {
            value: s.len(),
            witness: Witness::Edges(self.pick(s)),
        }
    }
}

/// `γ′(G)` as the smallest maximal matching, checked against the smallest
/// edge dominating set.
pub fn edge_domination(g: &Graph) -> Result<Value> {
    let e = Edges::of(g)?;
    let all = e.all()?;
    let line = e.line();
    let closed: Vec<VertexSet> = line.iter().enumerate().map(|(i, n)| n.with(i)).collect();
    let matching = found(
        SetFamily::new(all, &closed).independent_in(&line).minimum()?,
        "maximal matching",
    )?;
    let dominating = found(SetFamily::new(all, &closed).minimum()?, "edge dominating set")?;
    if matching.len() != dominating.len() {
        return Err(Error::Inconsistent(format!(
            "smallest maximal matching has {} edges, smallest edge dominating set {}",
            matching.len(),
            dominating.len()
        )));
    }
    Ok(e.value(matching))
}

/// `ε(G)`, checked against the smallest edge-wise dominating matching.
pub fn edgewise_domination(g: &Graph) -> Result<Value> {
    let e = Edges::of(g)?;
    let target = g.vertices() - g.isolated_vertices();
    let m = e.list.len();
    let any = Cover::new(&e, false).minimum(target)?;
    let matching = Cover::new(&e, true).minimum(target)?;
    match (any, matching) {
        (Some(a), Some(b)) if a.len() == b.len() => Ok(Value {
            value: b.len(),
            witness: Witness::Edges(b.iter().map(|&i| e.list[i]).collect()),
        }),
        (a, b) => Err(Error::Inconsistent(format!(
            "edge-wise domination {:?} but smallest dominating matching {:?} over {m} edges",
            a.map(|v| v.len()),
            b.map(|v| v.len())
        ))),
    }
}

/// Fewest edges whose closed neighbourhoods cover a vertex set, optionally
/// restricted to matchings. The number of edges is not bounded.
struct Cover<'a> {
    e: &'a Edges,
    matching: bool,
    order: Vec<usize>,
}

impl<'a> Cover<'a> {
    fn new(e: &'a Edges, matching: bool) -> Cover<'a> {
        let m = e.list.len();
        let order = if matching {
            (0..m).collect()
        } else {
            // an edge whose neighbourhood lies inside another's is never needed
            (0..m)
                .filter(|&i| {
                    !(0..m).any(|j| {
                        e.nbhd[i].is_subset(e.nbhd[j]) && (e.nbhd[i] != e.nbhd[j] || j < i)
                    })
                })
                .collect()
        };
        Cover { e, matching, order }
    }

    fn minimum(&self, target: VertexSet) -> Result<Option<Vec<usize>>> {
        let mut best = None;
        self.rec(target, VertexSet::EMPTY, &mut vec![], &mut best)?;
        Ok(best)
    }

    fn rec(
        &self,
        left: VertexSet,
        used: VertexSet,
        chosen: &mut Vec<usize>,
        best: &mut Option<Vec<usize>>,
    ) -> Result<()> {
        tick()?;
        if left.is_empty() {
            if best.as_ref().is_none_or(|b| chosen.len() < b.len()) {
                *best = Some(chosen.clone());
            }
            return Ok(());
        }
        let usable = |i: usize| !self.matching || !self.e.ends(i).intersects(used);
        let widest = self
            .order
            .iter()
            .filter(|&&i| usable(i))
            .map(|&i| (self.e.nbhd[i] & left).len())
            .max()
            .unwrap_or(0);
        if widest == 0 {
            return Ok(());
        }
        let need = left.len().div_ceil(widest);
        if best.as_ref().is_some_and(|b| chosen.len() + need >= b.len()) {
            return Ok(());
        }
        let pick = left
            .iter()
            .min_by_key(|&w| {
                self.order
                    .iter()
                    .filter(|&&i| usable(i) && self.e.nbhd[i].contains(w))
                    .count()
            })
            .expect("left is nonempty");
        for &i in &self.order {
            if usable(i) && self.e.nbhd[i].contains(pick) {
                chosen.push(i);
                self.rec(left - self.e.nbhd[i], used | self.e.ends(i), chosen, best)?;
                chosen.pop();
            }
        }
        Ok(())
    }
}

/// `im(G)`. The edge count may exceed the vertex-set width.
pub fn induced_matching(g: &Graph) -> Result<Value> {
    let e = Edges::of(g)?;
    let m = e.list.len();
    let rows: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..m).filter(|&j| e.touching(i, j)).collect())
        .collect();
    let s = maximum_independent_set(&rows)?;
    Ok(Value {
        value: s.len(),
        witness: Witness::Edges(s.iter().map(|&i| e.list[i]).collect()),
    })
}

/// `cochord(G)`: fewest cochordal subgraphs whose edges cover `E(G)`.
/// When the girth is at least 5 the result is checked against `γ′(G)`.
pub fn cochordal_cover(g: &Graph) -> Result<Value> {
    let e = Edges::of(g)?;
    let all = e.all()?;
    let cands = maximal_cochordal(g, &e, all)?;
    let mut cover = Vec::new();
    let mut k = 1;
    while !cover_rec(&cands, all, k, &mut cover)? {
        k += 1;
    }
    if girth(g).finite().is_none_or(|c| c >= 5) {
        let gp = edge_domination(g)?.value;
        if gp != k {
            return Err(Error::Inconsistent(format!(
                "cochordal cover {k} differs from edge domination {gp} at girth at least 5"
            )));
        }
    }
    Ok(Value {
        value: k,
        witness: Witness::Cover(cover.iter().map(|&c| e.pick(c)).collect()),
    })
}

fn cochordal(g: &Graph, e: &Edges, s: VertexSet) -> Result<bool> {
    tick()?;
    let h = Graph::new(g.n(), s.iter().map(|i| e.list[i]))?;
    Ok(is_cochordal(&h))
}

/// Every maximal cochordal edge set. Such a set is a clique of the
/// touching relation (two far apart edges induce `2K_2`), so each one is
/// reached by deleting edges from a maximal clique until cochordal.
fn maximal_cochordal(g: &Graph, e: &Edges, all: VertexSet) -> Result<Vec<VertexSet>> {
    let rel: Vec<VertexSet> = all
        .iter()
        .map(|i| all.iter().filter(|&j| e.touching(i, j)).collect())
        .collect();
    let mut cliques = Vec::new();
    bron_kerbosch(&rel, VertexSet::EMPTY, all, VertexSet::EMPTY, &mut cliques)?;
    let mut seen = HashSet::new();
    let mut found = Vec::new();
    for c in cliques {
        let mut stack = vec![c];
        while let Some(s) = stack.pop() {
            if !seen.insert(s) {
                continue;
            }
            if cochordal(g, e, s)? {
                found.push(s);
            } else {
                stack.extend(s.iter().map(|i| s.without(i)));
            }
        }
    }
    found.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp_canonical(b)));
    let mut out: Vec<VertexSet> = Vec::new();
    for s in found {
        if !out.iter().any(|t| s.is_subset(*t)) {
            out.push(s);
        }
    }
    Ok(out)
}

fn bron_kerbosch(
    rel: &[VertexSet],
    r: VertexSet,
    p: VertexSet,
    x: VertexSet,
    out: &mut Vec<VertexSet>,
) -> Result<()> {
    tick()?;
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return Ok(());
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| (rel[u] & p).len())
        .expect("p or x nonempty");
    let (mut p, mut x) = (p, x);
    for v in (p - rel[pivot]).iter() {
        bron_kerbosch(rel, r.with(v), p & rel[v], x & rel[v], out)?;
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

/// Cover `left` with at most `k` candidates, branching on the edge with
/// the fewest candidates through it.
fn cover_rec(cands: &[VertexSet], left: VertexSet, k: usize, cover: &mut Vec<VertexSet>) -> Result<bool> {
    tick()?;
    if left.is_empty() {
        return Ok(true);
    }
    if k == 0 {
        return Ok(false);
    }
    let Some(e) = left
        .iter()
        .min_by_key(|&i| cands.iter().filter(|c| c.contains(i)).count())
    else {
        return Ok(true);
    };
    for &c in cands.iter().filter(|c| c.contains(e)) {
        cover.push(c);
        if cover_rec(cands, left - c, k - 1, cover)? {
            return Ok(true);
        }
        cover.pop();
    }
    Ok(false)
}
