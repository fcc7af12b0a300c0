//! Reduced simplicial homology over GF(2) and the rationals, and the
//! regularity, projective dimension and graded Betti numbers read off
//! induced subcomplexes.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::budget::tick;
use crate::complex::{alexander_dual, independence_complex};
use crate::complex::{Clutter, Complex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::{k_subsets, VertexSet};

mod rank;

use rank::{rank_gf2, rank_rational, SparseCol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Gf2,
    Rational,
}

impl Field {
    pub const ALL: [Field; 2] = [Field::Gf2, Field::Rational];

    pub fn name(self) -> &'static str {
        match self {
            Field::Gf2 => "gf2",
            Field::Rational => "rational",
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        match s {
            "gf2" | "GF2" | "f2" => Ok(Field::Gf2),
            "q" | "Q" | "rational" | "rationals" => Ok(Field::Rational),
            _ => Err(Error::InvalidParameter(format!("unknown field {s:?}"))),
        }
    }
}

/// Ranks of reduced homology: entry `k` is the rank of `H̃_{k−1}`, with
/// trailing zeros dropped, so an acyclic complex gives an empty vector.
pub type Ranks = Vec<usize>;

/// Homology of the chain complex spanned by `faces[k]` (sorted faces of size `k`).
fn chain_homology(faces: &[Vec<VertexSet>], f: Field) -> Result<Ranks> {
    let top = faces.len();
    let mut ranks = vec![0usize; top + 1];
    for k in 1..top {
        let lower = &faces[k - 1];
        let cols: Vec<SparseCol> = faces[k]
            .iter()
            .map(|s| {
                let mut col: SparseCol = s
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let idx = lower
                            .binary_search_by_key(&s.without(v).bits(), |t| t.bits())
                            .expect("faces are closed under taking subsets");
                        (idx as u32, if pos % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable_by_key(|&(i, _)| i);
                col
            })
            .collect();
        ranks[k] = match f {
            Field::Gf2 => rank_gf2(&cols)?,
            Field::Rational => rank_rational(&cols)?,
        };
        if ranks[k] > faces[k].len().min(lower.len()) {
            return Err(Error::Inconsistent(format!("boundary rank {} too large", ranks[k])));
        }
    }
    let mut h = Vec::with_capacity(top);
    for k in 0..top {
        let free = faces[k].len() as i64 - ranks[k] as i64 - ranks[k + 1] as i64;
        if free < 0 {
            return Err(Error::Inconsistent(format!(
                "negative homology rank in dimension {}",
                k as isize - 1
            )));
        }
        h.push(free as usize);
    }
    let sign = |k: usize| if k.is_multiple_of(2) { 1i64 } else { -1 };
    let euler_faces: i64 = faces.iter().enumerate().map(|(k, fs)| sign(k) * fs.len() as i64).sum();
    let euler_homology: i64 = h.iter().enumerate().map(|(k, &r)| sign(k) * r as i64).sum();
    if euler_faces != euler_homology {
        return Err(Error::Inconsistent("Euler characteristic mismatch".into()));
    }
    while h.last() == Some(&0) {
        h.pop();
    }
    Ok(h)
}

fn complex_faces(d: &Complex) -> Vec<Vec<VertexSet>> {
    let top = d.dim().map_or(0, |x| (x + 2) as usize);
    (0..top).map(|k| d.faces_of_size(k)).collect()
}

/// Reduced homology ranks of `d` (see [`Ranks`]).
pub fn reduced_homology(d: &Complex, f: Field) -> Result<Ranks> {
    if d.is_void() {
        return Err(Error::VoidComplex);
    }
    if d.cone_point().is_some() {
        return Ok(vec![]);
    }
    chain_homology(&complex_faces(d), f)
}

/// Independent sets of `adj` inside `within`, grouped by size and sorted.
fn independent_sets(adj: &[VertexSet], within: VertexSet) -> Result<Vec<Vec<VertexSet>>> {
    fn rec(
        adj: &[VertexSet],
        cur: VertexSet,
        cand: VertexSet,
        out: &mut Vec<Vec<VertexSet>>,
    ) -> Result<()> {
        tick()?;
        if out.len() <= cur.len() {
            out.push(vec![]);
        }
        out[cur.len()].push(cur);
        let mut cand = cand;
        while let Some(v) = cand.first() {
            cand.remove(v);
            rec(adj, cur.with(v), cand - adj[v], out)?;
        }
        Ok(())
    }
    let mut out = vec![];
    rec(adj, VertexSet::EMPTY, within, &mut out)?;
    for level in &mut out {
        level.sort_unstable_by_key(|s| s.bits());
    }
    Ok(out)
}

fn flag_homology(g: &Graph, s: VertexSet, f: Field) -> Result<Ranks> {
    if s.iter().any(|v| !g.neighbors(v).intersects(s)) {
        return Ok(vec![]);
    }
    chain_homology(&independent_sets(g.adjacency(), s)?, f)
}

/// Reduced homology of `Ind(g)`, computed on the folded graph.
pub fn independence_homology(g: &Graph, f: Field) -> Result<Ranks> {
    let h = fold_reduce(g);
    flag_homology(&h, h.vertices(), f)
}

/// Repeatedly delete the smallest `v` for which some `u ≠ v` has `N(u) ⊆ N(v)`.
/// The independence complex keeps its homotopy type.
pub fn fold_reduce(g: &Graph) -> Graph {
    let mut keep = g.vertices();
    'outer: loop {
        for v in keep.iter() {
            let nv = g.neighbors(v) & keep;
            if keep
                .without(v)
                .iter()
                .any(|u| (g.neighbors(u) & keep).is_subset(nv))
            {
                keep.remove(v);
                continue 'outer;
            }
        }
        break;
    }
    g.induced(keep).0
}

/// A regularity value with a set `S` such that `H̃_{value−1}(Δ[S]) ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regularity {
    pub value: usize,
    pub witness: VertexSet,
}

fn top_index(h: &Ranks) -> usize {
    h.len().saturating_sub(1)
}

/// Some `u ≠ w` in `s` with `N(u) ∩ s ⊆ N(w) ∩ s`, or an isolated vertex.
fn foldable(g: &Graph, s: VertexSet) -> bool {
    let verts = s.to_vec();
    verts.iter().any(|&u| {
        let nu = g.neighbors(u) & s;
        nu.is_empty()
            || verts
                .iter()
                .any(|&w| w != u && nu.is_subset(g.neighbors(w) & s))
    })
}

/// `reg(G) = reg(Ind(G))`, summed over connected components.
///
/// For each component the scan skips `S` where `G[S]` has an isolated vertex
/// or a pair with nested neighbourhoods: then `Ind(G[S])` is a cone or is
/// homotopy equivalent to `Ind(G[S − w])`, a set scanned anyway. A flag
/// complex with `H̃_{j−1} ≠ 0` has at least `2j` vertices, which bounds each
/// size level.
pub fn graph_regularity(g: &Graph, f: Field) -> Result<Regularity> {
    let mut total = Regularity {
        value: 0,
        witness: VertexSet::EMPTY,
    };
    for comp in g.components() {
        let r = component_regularity(g, comp, f)?;
        total.value += r.value;
        total.witness |= r.witness;
    }
    Ok(total)
}

fn component_regularity(g: &Graph, comp: VertexSet, f: Field) -> Result<Regularity> {
    let Some((u, v)) = comp
        .iter()
        .find_map(|u| (g.neighbors(u) & comp).first().map(|v| (u, v)))
    else {
        return Ok(Regularity {
            value: 0,
            witness: VertexSet::EMPTY,
        });
    };
    let mut best = Regularity {
        value: 1,
        witness: VertexSet::singleton(u).with(v),
    };
    let verts = comp.to_vec();
    for size in (4..=verts.len()).rev() {
        if size / 2 <= best.value {
            break;
        }
        for sub in k_subsets(verts.len(), size) {
            tick()?;
            let s = sub.map(&verts);
            if foldable(g, s) {
                continue;
            }
            let j = top_index(&flag_homology(g, s, f)?);
            if j > best.value {
                best = Regularity { value: j, witness: s };
                if size / 2 <= best.value {
                    break;
                }
            }
        }
    }
    Ok(best)
}

/// Facets of `Δ[S]` paired with the facets of its nerve; the cheaper of the
/// two is used for homology.
fn induced_homology(d: &Complex, s: VertexSet, patterns: Option<&[VertexSet]>, f: Field) -> Result<Ranks> {
    let direct = d.induced(s);
    let cost = |fs: &[VertexSet]| fs.iter().map(|x| 1u64 << x.len().min(40)).sum::<u64>();
    if let Some(p) = patterns {
        let nerve = Complex::from_facets_unchecked(d.facets().len(), s.iter().map(|u| p[u]).collect());
        if cost(nerve.facets()) < cost(direct.facets()) {
            return reduced_homology(&nerve, f);
        }
    }
    reduced_homology(&direct, f)
}

/// `reg(Δ) = max{ j : H̃_{j−1}(Δ[S]) ≠ 0 }`.
///
/// Only sets `S` whose vertices have pairwise incomparable facet-membership
/// patterns are scanned: if every facet containing `u` contains `w`, then
/// `Δ[S]` and `Δ[S − u]` have homotopy equivalent nerves. For the same reason
/// homology may be computed on the nerve of the facets.
pub fn regularity(d: &Complex, f: Field) -> Result<Regularity> {
    if d.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut best = Regularity {
        value: 0,
        witness: VertexSet::EMPTY,
    };
    if d.is_simplex() {
        return Ok(best);
    }
    let dim_bound = (d.dim().unwrap() + 1) as usize;
    let k = d.facets().len();
    let n = d.ground();
    let mut member = vec![FixedBitSet::with_capacity(k); n];
    for (j, fct) in d.facets().iter().enumerate() {
        for v in fct.iter() {
            member[v].insert(j);
        }
    }
    let small: Option<Vec<VertexSet>> = (k <= crate::vset::MAX_VERTICES).then(|| {
        member
            .iter()
            .map(|m| m.ones().collect())
            .collect()
    });
    let mut reps: Vec<usize> = Vec::new();
    for v in d.vertices().iter() {
        if !reps.iter().any(|&r| member[r] == member[v]) {
            reps.push(v);
        }
    }
    let ctx = Scan {
        d,
        f,
        member: &member,
        patterns: small.as_deref(),
        dim_bound,
    };
    ctx.grow(VertexSet::EMPTY, &reps, &mut best)?;
    Ok(best)
}

struct Scan<'a> {
    d: &'a Complex,
    f: Field,
    member: &'a [FixedBitSet],
    patterns: Option<&'a [VertexSet]>,
    dim_bound: usize,
}

impl Scan<'_> {
    fn grow(&self, s: VertexSet, cands: &[usize], best: &mut Regularity) -> Result<()> {
        tick()?;
        if s.len() >= 2 && (s.len() - 1).min(self.dim_bound) > best.value {
            let j = top_index(&induced_homology(self.d, s, self.patterns, self.f)?);
            if j > best.value {
                *best = Regularity { value: j, witness: s };
            }
        }
        for (i, &v) in cands.iter().enumerate() {
            let reach = (s.len() + cands.len() - i).saturating_sub(1).min(self.dim_bound);
            if reach <= best.value {
                return Ok(());
            }
            let next: Vec<usize> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&w| {
                    !self.member[w].is_subset(&self.member[v])
                        && !self.member[v].is_subset(&self.member[w])
                })
                .collect();
            self.grow(s.with(v), &next, best)?;
        }
        Ok(())
    }
}

pub fn clutter_regularity(h: &Clutter, f: Field) -> Result<Regularity> {
    regularity(&independence_complex(h)?, f)
}

/// `pd` of a clutter by Terai duality: `reg(Ind(ℋ)^∨) + 1`, and 0 without edges.
pub fn clutter_proj_dim(h: &Clutter, f: Field) -> Result<usize> {
    if h.edges().is_empty() {
        return Ok(0);
    }
    let dual = alexander_dual(&independence_complex(h)?)?;
    Ok(regularity(&dual, f)?.value + 1)
}

/// `pd(G) = reg(Ind(G)^∨) + 1` on the whole graph, 0 when edgeless.
pub fn proj_dim_terai(g: &Graph, f: Field) -> Result<usize> {
    clutter_proj_dim(&Clutter::from_graph(g), f)
}

/// `pd(G)` by Terai duality, summed over connected components.
pub fn proj_dim(g: &Graph, f: Field) -> Result<usize> {
    let comps = g.components();
    if comps.len() <= 1 {
        return proj_dim_terai(g, f);
    }
    let mut total = 0;
    for c in comps {
        let (h, _) = g.induced(c);
        if h.has_edges() {
            total += proj_dim_terai(&h, f)?;
        }
    }
    Ok(total)
}

/// `pd(G)` from links in `Ind(G)`: the largest `n − |A| − i − 1` with `A`
/// independent and `H̃_i(Ind(G − N[A])) ≠ 0`. Alexander duality turns each
/// induced subcomplex of `Ind(G)^∨` into such a link, and each link is a
/// full independence complex, so it is folded before its homology is taken.
pub fn proj_dim_links(g: &Graph, f: Field) -> Result<usize> {
    if !g.has_edges() {
        return Ok(0);
    }
    let n = g.n();
    let mut sets = Vec::new();
    independent_sets_rec(g, VertexSet::EMPTY, g.vertices(), &mut sets)?;
    sets.sort_by(|a, b| a.cmp_canonical(b));
    let mut best = 0;
    for a in sets {
        if n - a.len() <= best {
            break;
        }
        let rest = g.vertices() - g.closed_neighborhood_of(a);
        let h = independence_homology(&g.induced(rest).0, f)?;
        if let Some(k) = h.iter().position(|&r| r > 0) {
            best = best.max(n - a.len() - k);
        }
    }
    Ok(best)
}

fn independent_sets_rec(g: &Graph, a: VertexSet, avail: VertexSet, out: &mut Vec<VertexSet>) -> Result<()> {
    tick()?;
    out.push(a);
    let mut avail = avail;
    while let Some(v) = avail.first() {
        avail.remove(v);
        independent_sets_rec(g, a.with(v), avail - g.neighbors(v), out)?;
    }
    Ok(())
}

/// `max{ |σ| − j − 1 : H̃_j(Δ[σ]) ≠ 0 }` over all `σ` in the ground set.
pub fn proj_dim_direct(d: &Complex, f: Field) -> Result<usize> {
    if d.is_void() {
        return Err(Error::VoidComplex);
    }
    let n = d.ground();
    let mut best = 0;
    for size in (1..=n).rev() {
        if size <= best {
            break;
        }
        for s in k_subsets(n, size) {
            tick()?;
            let h = reduced_homology(&d.induced(s), f)?;
            // smallest j with H̃_j ≠ 0 gives the largest shift
            if let Some(k) = h.iter().position(|&r| r > 0) {
                best = best.max(size - k);
            }
        }
    }
    Ok(best)
}

/// Graded Betti numbers `β_{i,j}` of `𝕜[Δ]` (the quotient ring), rank-zero entries omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub field: Field,
    pub entries: BTreeMap<(usize, usize), usize>,
}

pub const DEFAULT_BETTI_CAP: usize = 20;

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `max j − i`.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// `max i`.
    pub fn proj_dim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<[usize; 3]> = self.entries.iter().map(|(&(i, j), &r)| [i, j, r]).collect();
        let mut st = ser.serialize_struct("BettiTable", 2)?;
        st.serialize_field("field", &self.field)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// Hochster's formula: `β_{i,σ} = rank H̃_{|σ|−i−1}(Δ[σ])`, summed by `|σ|`.
pub fn betti_table(d: &Complex, f: Field, cap: usize) -> Result<BettiTable> {
    if d.is_void() {
        return Err(Error::VoidComplex);
    }
    if d.ground() > cap {
        return Err(Error::CapExceeded {
            size: d.ground(),
            cap,
        });
    }
    let mut entries = BTreeMap::new();
    for s in d.ground_set().subsets() {
        tick()?;
        let h = reduced_homology(&d.induced(s), f)?;
        for (k, &r) in h.iter().enumerate() {
            if r > 0 {
                *entries.entry((s.len() - k, s.len())).or_insert(0) += r;
            }
        }
    }
    Ok(BettiTable { field: f, entries })
}
