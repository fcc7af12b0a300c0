//! Clutters and simplicial complexes stored by their facets.

use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::io::parse_ints;
use crate::graph::Graph;
use crate::transversal::SetFamily;
use crate::vset::{VertexSet, MAX_VERTICES};

mod build;
mod flower;

pub use build::{
    alexander_dual, b_complement, closed_neighbourhood_clutter, dominance_complex,
    independence_complex, independence_complex_of_graph, is_sp_bipartite, levi_graph,
    side_complex,
};
pub use flower::{flower_number, Flower};

/// A hypergraph whose edges form an antichain of sets of size at least two.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Clutter {
    ground: usize,
    edges: Vec<VertexSet>,
}

fn check_ground(ground: usize, sets: &[VertexSet]) -> Result<()> {
    if ground > MAX_VERTICES {
        return Err(Error::TooManyVertices(ground));
    }
    let full = VertexSet::full(ground);
    if let Some(s) = sets.iter().find(|s| !s.is_subset(full)) {
        let vertex = (*s - full).first().unwrap();
        return Err(Error::VertexOutOfRange { vertex, n: ground });
    }
    Ok(())
}

fn sorted(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(VertexSet::cmp_canonical);
    sets.dedup();
    sets
}

/// Keep the inclusion-maximal members.
fn maximal(sets: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    let sets = sorted(sets.into_iter().collect());
    let keep = sets
        .iter()
        .filter(|a| !sets.iter().any(|b| a.is_proper_subset(*b)))
        .copied()
        .collect();
    sorted(keep)
}

/// Keep the inclusion-minimal members.
fn minimal(sets: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    let sets = sorted(sets.into_iter().collect());
    let keep = sets
        .iter()
        .filter(|a| !sets.iter().any(|b| b.is_proper_subset(**a)))
        .copied()
        .collect();
    sorted(keep)
}

impl Clutter {
    /// Validates the edges; the error names an offending edge or pair.
    pub fn new(ground: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Clutter> {
        let edges: Vec<VertexSet> = edges.into_iter().collect();
        check_ground(ground, &edges)?;
        if let Some(e) = edges.iter().find(|e| e.len() < 2) {
            return Err(Error::DegenerateEdge(e.to_vec()));
        }
        for (i, a) in edges.iter().enumerate() {
            for b in &edges[i + 1..] {
                if a.is_subset(*b) || b.is_subset(*a) {
                    return Err(Error::NotAntichain(a.to_vec(), b.to_vec()));
                }
            }
        }
        Ok(Clutter {
            ground,
            edges: sorted(edges),
        })
    }

    /// Antichain of arbitrary nonempty sets; singletons arise from isolated
    /// vertices in closed-neighbourhood clutters.
    pub(crate) fn from_minimal(ground: usize, edges: Vec<VertexSet>) -> Clutter {
        debug_assert!(edges.iter().all(|e| !e.is_empty()));
        Clutter {
            ground,
            edges: minimal(edges),
        }
    }

    pub fn from_graph(g: &Graph) -> Clutter {
        Clutter {
            ground: g.n(),
            edges: sorted(
                g.edges()
                    .map(|(u, v)| VertexSet::singleton(u).with(v))
                    .collect(),
            ),
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// `ℋ[S]`: the edges contained in `s`, over the same ground set.
    pub fn induced(&self, s: VertexSet) -> Clutter {
        Clutter {
            ground: self.ground,
            edges: self.edges.iter().filter(|e| e.is_subset(s)).copied().collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Clutter> {
        let (ground, sets) = parse_sets(text)?;
        Clutter::new(ground, sets)
    }

    pub fn to_text(&self) -> String {
        sets_to_text(self.ground, &self.edges)
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clutter(ground={}, edges={:?})", self.ground, self.edges)
    }
}

fn parse_sets(text: &str) -> Result<(usize, Vec<VertexSet>)> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let nums = parse_ints(header, 1)?;
    let [ground, k] = nums[..] else {
        return Err(Error::Parse {
            line: 1,
            msg: format!("expected `ground k`, got {header:?}"),
        });
    };
    if ground > MAX_VERTICES {
        return Err(Error::TooManyVertices(ground));
    }
    let mut sets = Vec::with_capacity(k);
    for _ in 0..k {
        let (i, line) = lines.next().ok_or_else(|| Error::Parse {
            line: sets.len() + 2,
            msg: format!("expected {k} set lines, found {}", sets.len()),
        })?;
        let mut s = VertexSet::EMPTY;
        for v in parse_ints(line, i + 1)? {
            if v >= ground {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("vertex {v} outside ground set of size {ground}"),
                });
            }
            s.insert(v);
        }
        sets.push(s);
    }
    if let Some((i, extra)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(Error::Parse {
            line: i + 1,
            msg: format!("unexpected trailing line {extra:?}"),
        });
    }
    Ok((ground, sets))
}

fn sets_to_text(ground: usize, sets: &[VertexSet]) -> String {
    let mut s = String::new();
    writeln!(s, "{ground} {}", sets.len()).unwrap();
    for e in sets {
        let words: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        writeln!(s, "{}", words.join(" ")).unwrap();
    }
    s
}

/// A simplicial complex on the ground set `0..ground`, given by its facets.
///
/// No facets at all is the void complex; the single facet `∅` is `{∅}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Complex {
    ground: usize,
    facets: Vec<VertexSet>,
}

impl Complex {
    /// Reduces the generators to their maximal members.
    pub fn from_facets(ground: usize, facets: impl IntoIterator<Item = VertexSet>) -> Result<Complex> {
        let facets: Vec<VertexSet> = facets.into_iter().collect();
        check_ground(ground, &facets)?;
        Ok(Complex {
            ground,
            facets: maximal(facets),
        })
    }

    pub(crate) fn from_facets_unchecked(ground: usize, facets: Vec<VertexSet>) -> Complex {
        Complex {
            ground,
            facets: maximal(facets),
        }
    }

    pub fn void(ground: usize) -> Complex {
        Complex {
            ground,
            facets: vec![],
        }
    }

    /// `{∅}`.
    pub fn empty(ground: usize) -> Complex {
        Complex {
            ground,
            facets: vec![VertexSet::EMPTY],
        }
    }

    pub fn simplex(ground: usize) -> Complex {
        Complex {
            ground,
            facets: vec![VertexSet::full(ground)],
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn ground_set(&self) -> VertexSet {
        VertexSet::full(self.ground)
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `vert(Δ)`.
    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |a, f| a | *f)
    }

    /// `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// A vertex lying in every facet, if any.
    pub fn cone_point(&self) -> Option<VertexSet> {
        let common = self
            .facets
            .iter()
            .fold(self.ground_set(), |a, f| a & *f);
        (!self.is_void() && !common.is_empty()).then_some(common)
    }

    /// All faces of dimension `d` (size `d + 1`), sorted.
    pub fn faces_of_size(&self, k: usize) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = Vec::new();
        for f in &self.facets {
            if f.len() < k {
                continue;
            }
            let verts = f.to_vec();
            for sub in crate::vset::k_subsets(verts.len(), k) {
                out.push(sub.map(&verts));
            }
        }
        out.sort_unstable_by_key(|s| s.bits());
        out.dedup();
        out
    }

    /// `Δ[S]`, over the same ground set.
    pub fn induced(&self, s: VertexSet) -> Complex {
        Complex::from_facets_unchecked(self.ground, self.facets.iter().map(|f| *f & s).collect())
    }

    pub fn link(&self, a: VertexSet) -> Result<Complex> {
        if !self.contains(a) {
            return Err(Error::NotAFace(a.to_vec()));
        }
        Ok(Complex::from_facets_unchecked(
            self.ground,
            self.facets
                .iter()
                .filter(|f| a.is_subset(**f))
                .map(|f| *f - a)
                .collect(),
        ))
    }

    /// `A` is an S-face when its link is a simplex.
    pub fn is_s_face(&self, a: VertexSet) -> Result<bool> {
        Ok(self.link(a)?.is_simplex())
    }

    /// Minimal sets of the ground set that are not faces.
    pub fn minimal_nonfaces(&self) -> Result<Vec<VertexSet>> {
        let complements: Vec<VertexSet> =
            self.facets.iter().map(|f| self.ground_set() - *f).collect();
        let mut out = SetFamily::new(self.ground_set(), &complements).minimal_transversals()?;
        out.sort_by(VertexSet::cmp_canonical);
        Ok(out)
    }

    /// Largest minimal non-face, or `None` when every subset of the ground set is a face.
    pub fn helly_number(&self) -> Result<Option<usize>> {
        Ok(self.minimal_nonfaces()?.iter().map(|s| s.len()).max())
    }

    pub fn parse(text: &str) -> Result<Complex> {
        let (ground, sets) = parse_sets(text)?;
        Complex::from_facets(ground, sets)
    }

    pub fn to_text(&self) -> String {
        sets_to_text(self.ground, &self.facets)
    }

    /// Relabel vertex `v` as `perm[v]`, on a ground set of size `ground`.
    pub fn relabel(&self, ground: usize, perm: &[usize]) -> Result<Complex> {
        Complex::from_facets(ground, self.facets.iter().map(|f| f.map(perm)))
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(ground={}, facets={:?})", self.ground, self.facets)
    }
}


#[cfg(test)]
mod tests {
    use super::brute::*;
    use super::*;

    #[test]
    fn normalisation() {
        let d = Complex::from_facets(4, [vs(&[0]), vs(&[0, 1]), vs(&[2, 3]), vs(&[0, 1])]).unwrap();
        assert_eq!(d.facets(), &[vs(&[0, 1]), vs(&[2, 3])]);
        assert_eq!(d.dim(), Some(1));
        assert_eq!(Complex::void(3).dim(), None);
        assert_eq!(Complex::empty(3).dim(), Some(-1));
        assert_ne!(Complex::void(3), Complex::empty(3));
        assert!(Complex::from_facets(2, [vs(&[2])]).is_err());
    }

    #[test]
    fn clutter_validation() {
        assert_eq!(
            Clutter::new(3, [vs(&[0, 1]), vs(&[0, 1, 2])]),
            Err(Error::NotAntichain(vec![0, 1], vec![0, 1, 2]))
        );
        assert_eq!(Clutter::new(3, [vs(&[1])]), Err(Error::DegenerateEdge(vec![1])));
        assert_eq!(Clutter::new(3, [vs(&[])]), Err(Error::DegenerateEdge(vec![])));
        assert!(matches!(Clutter::new(2, [vs(&[0, 5])]), Err(Error::VertexOutOfRange { .. })));
        assert!(Clutter::new(3, [vs(&[0, 1]), vs(&[1, 2])]).is_ok());
    }

    #[test]
    fn text_format() {
        let c = Clutter::parse("4 2\n0 1\n2 3\n").unwrap();
        assert_eq!(c.to_text(), "4 2\n0 1\n2 3\n");
        assert!(matches!(
            Clutter::parse("4 2\n0 1\n0 1 2\n"),
            Err(Error::NotAntichain(..))
        ));
        assert!(matches!(Clutter::parse("4 1\n0 9\n"), Err(Error::Parse { line: 2, .. })));
        let d = Complex::parse("3 1\n\n").unwrap();
        assert_eq!(d, Complex::empty(3));
        assert_eq!(Complex::parse("3 0\n").unwrap(), Complex::void(3));
        assert_eq!(Complex::parse(&d.to_text()).unwrap(), d);
    }

    #[test]
    fn links() {
        let d = Complex::from_facets(4, [vs(&[0, 1, 2]), vs(&[1, 3])]).unwrap();
        assert_eq!(d.link(vs(&[0, 1, 2])).unwrap(), Complex::empty(4));
        assert_eq!(d.link(VertexSet::EMPTY).unwrap(), d);
        assert_eq!(d.link(vs(&[1])).unwrap().facets(), &[vs(&[3]), vs(&[0, 2])]);
        assert_eq!(d.link(vs(&[0, 3])), Err(Error::NotAFace(vec![0, 3])));
        assert!(d.is_s_face(vs(&[0])).unwrap());
        assert!(!d.is_s_face(vs(&[1])).unwrap());
    }

    #[test]
    fn minimal_nonfaces_match_brute_force() {
        let cases = [
            Complex::from_facets(4, [vs(&[0, 1, 2]), vs(&[1, 3])]).unwrap(),
            Complex::simplex(3),
            Complex::void(3),
            Complex::empty(2),
            Complex::from_facets(5, [vs(&[0, 1]), vs(&[1, 2]), vs(&[2, 3]), vs(&[3, 0])]).unwrap(),
        ];
        for d in &cases {
            let faces = faces(d);
            let mut want: Vec<VertexSet> = d
                .ground_set()
                .subsets()
                .filter(|s| !faces.contains(s) && s.iter().all(|v| faces.contains(&s.without(v))))
                .collect();
            want.sort_by(VertexSet::cmp_canonical);
            assert_eq!(d.minimal_nonfaces().unwrap(), want, "{d:?}");
        }
        assert_eq!(Complex::simplex(3).helly_number().unwrap(), None);
        assert_eq!(Complex::void(3).helly_number().unwrap(), Some(0));
        // boundary of the 3-simplex
        let bd = Complex::from_facets(4, crate::vset::k_subsets(4, 3)).unwrap();
        assert_eq!(bd.helly_number().unwrap(), Some(4));
    }

    #[test]
    fn faces_by_size() {
        let d = Complex::from_facets(4, [vs(&[0, 1, 2]), vs(&[1, 3])]).unwrap();
        assert_eq!(d.faces_of_size(0), vec![VertexSet::EMPTY]);
        assert_eq!(d.faces_of_size(1).len(), 4);
        assert_eq!(d.faces_of_size(2).len(), 4);
        assert_eq!(d.faces_of_size(3).len(), 1);
        let all: usize = (0..=4).map(|k| d.faces_of_size(k).len()).sum();
        assert_eq!(all, faces(&d).len());
        assert!(Complex::void(2).faces_of_size(0).is_empty());
    }
}
