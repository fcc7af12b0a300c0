use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};
use crate::transversal::SetFamily;
use crate::vset::{VertexSet, MAX_VERTICES};

use super::{minimal, Clutter, Complex};

/// Complements of the minimal transversals of `sets`.
fn complements_of_transversals(ground: usize, sets: &[VertexSet]) -> Result<Complex> {
    let full = VertexSet::full(ground);
    let covers = SetFamily::new(full, sets).minimal_transversals()?;
    Ok(Complex::from_facets_unchecked(
        ground,
        covers.into_iter().map(|t| full - t).collect(),
    ))
}

/// `Ind(ℋ)`: subsets containing no edge.
pub fn independence_complex(h: &Clutter) -> Result<Complex> {
    complements_of_transversals(h.ground(), h.edges())
}

pub fn independence_complex_of_graph(g: &Graph) -> Result<Complex> {
    independence_complex(&Clutter::from_graph(g))
}

/// `Δ^∨ = {F : V ∖ F ∉ Δ}` over the ground set of `d`.
pub fn alexander_dual(d: &Complex) -> Result<Complex> {
    let full = d.ground_set();
    let nonfaces = d.minimal_nonfaces()?;
    Ok(Complex::from_facets_unchecked(
        d.ground(),
        nonfaces.into_iter().map(|n| full - n).collect(),
    ))
}

/// `Dom(G)`: sets whose complement is dominating.
pub fn dominance_complex(g: &Graph) -> Result<Complex> {
    let closed: Vec<VertexSet> = (0..g.n()).map(|v| g.closed_neighbors(v)).collect();
    complements_of_transversals(g.n(), &closed)
}

/// `N[G]`: the inclusion-minimal closed neighbourhoods. An isolated vertex
/// contributes the singleton edge `{v}`.
pub fn closed_neighbourhood_clutter(g: &Graph) -> Clutter {
    Clutter::from_minimal(g.n(), minimal((0..g.n()).map(|v| g.closed_neighbors(v))))
}

/// `L(ℋ)`: vertex `v < ground` on side 0, edge `k` as vertex `ground + k` on side 1.
pub fn levi_graph(h: &Clutter) -> Result<BipartiteGraph> {
    let n = h.ground();
    let total = n + h.edges().len();
    if total > MAX_VERTICES {
        return Err(Error::TooManyVertices(total));
    }
    let edges = h
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(k, e)| e.iter().map(move |v| (v, n + k)));
    let g = Graph::new(total, edges)?;
    let mut side = vec![0u8; n];
    side.resize(total, 1);
    BipartiteGraph::new(g, side)
}

/// `B_S(Δ)`: the `k`-th member of `s` (default: the whole ground set) becomes
/// vertex `k` on side 0, facet `j` becomes vertex `|S| + j` on side 1, and
/// `(s, F)` is an edge iff `s ∉ F`.
pub fn b_complement(d: &Complex, s: Option<VertexSet>) -> Result<BipartiteGraph> {
    let s = s.unwrap_or(d.ground_set());
    if !s.is_subset(d.ground_set()) {
        let vertex = (s - d.ground_set()).first().unwrap();
        return Err(Error::VertexOutOfRange {
            vertex,
            n: d.ground(),
        });
    }
    let verts = s.to_vec();
    let m = verts.len();
    let total = m + d.facets().len();
    if total > MAX_VERTICES {
        return Err(Error::TooManyVertices(total));
    }
    let mut edges = Vec::new();
    for (j, f) in d.facets().iter().enumerate() {
        for (k, &v) in verts.iter().enumerate() {
            if !f.contains(v) {
                edges.push((k, m + j));
            }
        }
    }
    let mut side = vec![0u8; m];
    side.resize(total, 1);
    BipartiteGraph::new(Graph::new(total, edges)?, side)
}

pub fn is_sp_bipartite(b: &BipartiteGraph, i: u8) -> bool {
    b.is_sperner(i)
}

/// `Δ_i(B)` on `X_i` (renumbered in increasing order), with facets
/// `X_i ∖ N(v)` for `v ∈ X_{1−i}`.
pub fn side_complex(b: &BipartiteGraph, i: u8) -> Result<Complex> {
    if i > 1 {
        return Err(Error::InvalidParameter(format!("side {i}")));
    }
    if !b.is_sperner(1 - i) {
        return Err(Error::NotSperner(1 - i));
    }
    let xs = b.side(i).to_vec();
    let mut index = vec![usize::MAX; b.graph().n()];
    for (k, &v) in xs.iter().enumerate() {
        index[v] = k;
    }
    let full = VertexSet::full(xs.len());
    let facets = b
        .side(1 - i)
        .iter()
        .map(|v| {
            let nb: VertexSet = b.graph().neighbors(v).iter().map(|u| index[u]).collect();
            full - nb
        })
        .collect();
    Ok(Complex::from_facets_unchecked(xs.len(), facets))
}

#[cfg(test)]
mod tests {
    use super::super::brute::*;
    use super::*;
    use crate::graph::{are_isomorphic, build_family, subdivision, Family};

    fn fam(f: Family, p: &[usize]) -> Graph {
        build_family(f, p).unwrap()
    }

    fn facets(v: &[&[usize]]) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = v.iter().map(|s| vs(s)).collect();
        out.sort_by(VertexSet::cmp_canonical);
        out
    }

    /// Independent sets by brute force, then maximal ones.
    fn brute_ind(g: &Graph) -> Complex {
        let ind: Vec<VertexSet> = g.vertices().subsets().filter(|s| g.is_independent(*s)).collect();
        from_faces(g.n(), &ind)
    }

    fn brute_dom(g: &Graph) -> Complex {
        let faces: Vec<VertexSet> = g
            .vertices()
            .subsets()
            .filter(|a| g.closed_neighborhood_of(g.vertices() - *a) == g.vertices())
            .collect();
        from_faces(g.n(), &faces)
    }

    fn brute_dual(d: &Complex) -> Complex {
        let full = d.ground_set();
        let faces: Vec<VertexSet> = full.subsets().filter(|f| !d.contains(full - *f)).collect();
        from_faces(d.ground(), &faces)
    }

    #[test]
    fn independence_examples() {
        for n in 1..6 {
            let d = independence_complex_of_graph(&fam(Family::Complete, &[n])).unwrap();
            assert_eq!(d.facets().len(), n);
            assert!(d.facets().iter().all(|f| f.len() == 1));
        }
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let d = independence_complex_of_graph(&two_k2).unwrap();
        assert_eq!(d.facets(), facets(&[&[0, 2], &[0, 3], &[1, 2], &[1, 3]]));
        let c5 = fam(Family::Cycle, &[5]);
        let d = independence_complex_of_graph(&c5).unwrap();
        assert_eq!(d, brute_ind(&c5));
        assert_eq!(d.facets().len(), 5);
        assert!(d.facets().iter().all(|f| f.len() == 2 && c5.is_independent(*f)));
        assert_eq!(
            independence_complex_of_graph(&Graph::edgeless(3).unwrap()).unwrap(),
            Complex::simplex(3)
        );
    }

    #[test]
    fn dual_examples() {
        assert_eq!(alexander_dual(&Complex::simplex(4)).unwrap(), Complex::void(4));
        assert_eq!(alexander_dual(&Complex::void(4)).unwrap(), Complex::simplex(4));
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let d = alexander_dual(&independence_complex_of_graph(&two_k2).unwrap()).unwrap();
        assert_eq!(d.facets(), facets(&[&[0, 1], &[2, 3]]));
        // boundary of a simplex and {∅} are dual to each other up to ground
        let bd = Complex::from_facets(3, crate::vset::k_subsets(3, 2)).unwrap();
        assert_eq!(alexander_dual(&bd).unwrap(), Complex::empty(3));
    }

    #[test]
    fn dominance_examples() {
        for n in 2..6 {
            let d = dominance_complex(&fam(Family::Complete, &[n])).unwrap();
            assert_eq!(d.facets().to_vec(), {
                let mut v: Vec<_> = crate::vset::k_subsets(n, n - 1).collect();
                v.sort_by(VertexSet::cmp_canonical);
                v
            });
        }
        let c4 = dominance_complex(&fam(Family::Cycle, &[4])).unwrap();
        assert_eq!(c4.facets().len(), 6);
        assert!(c4.facets().iter().all(|f| f.len() == 2));
        // path 1-2-3-4 renumbered 0-1-2-3
        let p4 = dominance_complex(&fam(Family::Path, &[4])).unwrap();
        assert_eq!(p4.facets(), facets(&[&[1, 3], &[1, 2], &[0, 3], &[0, 2]]));
    }

    #[test]
    fn closed_neighbourhood_examples() {
        let k = closed_neighbourhood_clutter(&fam(Family::Complete, &[4]));
        assert_eq!(k.edges(), &[VertexSet::full(4)]);
        let c4 = closed_neighbourhood_clutter(&fam(Family::Cycle, &[4]));
        assert_eq!(c4.edges().len(), 4);
        assert!(c4.edges().iter().all(|e| e.len() == 3));
        let star = closed_neighbourhood_clutter(&fam(Family::Star, &[4]));
        assert_eq!(star.edges(), facets(&[&[0, 1], &[0, 2], &[0, 3], &[0, 4]]));
        let iso = closed_neighbourhood_clutter(&Graph::new(3, [(0, 1)]).unwrap());
        assert_eq!(iso.edges(), facets(&[&[2], &[0, 1]]));
    }

    #[test]
    fn levi_examples() {
        let c5 = fam(Family::Cycle, &[5]);
        let l = levi_graph(&Clutter::from_graph(&c5)).unwrap();
        assert!(are_isomorphic(l.graph(), subdivision(&c5).unwrap().graph()));
        let h = Clutter::new(3, [vs(&[0, 1]), vs(&[1, 2])]).unwrap();
        assert!(are_isomorphic(levi_graph(&h).unwrap().graph(), &fam(Family::Path, &[5])));
        let l = levi_graph(&closed_neighbourhood_clutter(&fam(Family::Complete, &[5]))).unwrap();
        assert!(are_isomorphic(l.graph(), &fam(Family::Star, &[5])));
        assert!(l.is_sperner(1));
    }

    #[test]
    fn b_complement_examples() {
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let d = independence_complex_of_graph(&two_k2).unwrap();
        let b = b_complement(&d, None).unwrap();
        assert!(are_isomorphic(b.graph(), &fam(Family::Cycle, &[8])));
        let b = b_complement(&Complex::simplex(4), None).unwrap();
        assert_eq!(b.graph().edge_count(), 0);
        assert_eq!(b.graph().n(), 5);
        let b = b_complement(&d, Some(VertexSet::EMPTY)).unwrap();
        assert_eq!(b.graph().n(), 4);
        assert_eq!(b.graph().edge_count(), 0);
        assert!(b_complement(&d, Some(vs(&[7]))).is_err());
    }

    #[test]
    fn side_complex_examples() {
        let k12 = BipartiteGraph::from_graph(fam(Family::Star, &[2])).unwrap();
        assert!(!is_sp_bipartite(&k12, 1));
        let c8 = BipartiteGraph::from_graph(fam(Family::Cycle, &[8])).unwrap();
        for i in 0..2 {
            assert!(is_sp_bipartite(&c8, i));
            let d = side_complex(&c8, i).unwrap();
            assert_eq!(d.facets().len(), 4);
            assert!(d.facets().iter().all(|f| f.len() == 2));
            // a 4-cycle complex: every vertex in exactly two facets
            assert!((0..4).all(|v| d.facets().iter().filter(|f| f.contains(v)).count() == 2));
        }
        assert_eq!(side_complex(&k12, 0), Err(Error::NotSperner(1)));
        let s = subdivision(&fam(Family::Complete, &[4])).unwrap();
        assert!(is_sp_bipartite(&s, 1));
    }

    #[test]
    fn constructions_match_brute_force_on_small_graphs() {
        let n = 5;
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let g = Graph::new(
                n,
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
            )
            .unwrap();
            let ind = independence_complex_of_graph(&g).unwrap();
            assert_eq!(ind, brute_ind(&g));
            let dom = dominance_complex(&g).unwrap();
            assert_eq!(dom, brute_dom(&g));
            assert_eq!(alexander_dual(&ind).unwrap(), brute_dual(&ind));
            assert_eq!(alexander_dual(&dom).unwrap(), brute_dual(&dom));
        }
    }
}
