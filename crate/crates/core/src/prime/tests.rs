use super::*;
use crate::domination::{domination_number, edgewise_domination, independent_domination};
use crate::graph::{build_family, disjoint_copies, Family};
use crate::homology::tests::brute_proj_dim;

fn fam(f: Family, p: &[usize]) -> Graph {
    build_family(f, p).unwrap()
}

fn vs(v: &[usize]) -> VertexSet {
    v.iter().collect()
}

/// Primality from the brute-force pd oracle.
fn brute_prime(g: &Graph, f: Field) -> bool {
    let pd = brute_proj_dim(g, f);
    (0..g.n()).all(|x| brute_proj_dim(&g.remove_vertex(x), f) < pd)
}

/// Maximal families of disjoint, mutually non-adjacent vertex sets inducing
/// connected prime graphs, by brute force over all families.
fn brute_decompositions(g: &Graph, f: Field) -> Vec<Vec<VertexSet>> {
    let parts: Vec<VertexSet> = g
        .vertices()
        .subsets()
        .filter(|&s| {
            let h = g.induced(s).0;
            s.len() >= 2 && h.is_connected() && h.has_edges() && brute_prime(&h, f)
        })
        .collect();
    let mut out = Vec::new();
    for mask in 1u64..1 << parts.len() {
        let fam: Vec<VertexSet> = (0..parts.len()).filter(|i| mask >> i & 1 == 1).map(|i| parts[i]).collect();
        let ok = fam.iter().enumerate().all(|(i, &a)| {
            fam[i + 1..].iter().all(|&b| !g.closed_neighborhood_of(a).intersects(b))
        });
        if ok && (Decomposition { parts: fam.clone() }).is_maximal(g) {
            out.push(fam);
        }
    }
    out
}

#[test]
fn prime_examples() {
    for f in Field::ALL {
        for n in 3..8 {
            assert!(is_projectively_prime(&fam(Family::Cycle, &[n]), f).unwrap(), "C{n}");
        }
        assert!(is_projectively_prime(&fam(Family::Path, &[5]), f).unwrap());
        assert!(!is_projectively_prime(&fam(Family::Path, &[4]), f).unwrap());
        assert_eq!(brute_proj_dim(&fam(Family::Path, &[4]), f), 2);
        assert_eq!(brute_proj_dim(&fam(Family::Path, &[3]), f), 2);
        for a in 1..7 {
            for b in 1..=(7 - a) {
                let g = fam(Family::CompleteBipartite, &[a, b]);
                assert!(is_projectively_prime(&g, f).unwrap(), "K{a},{b}");
            }
        }
        assert_eq!(
            is_projectively_prime(&disjoint_copies(&fam(Family::Complete, &[2]), 2).unwrap(), f),
            Err(Error::Disconnected)
        );
        assert_eq!(is_projectively_prime(&Graph::edgeless(3).unwrap(), f), Err(Error::Edgeless));
    }
}

#[test]
fn primality_matches_brute_force() {
    for n in 2..=5 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in (0u32..1 << pairs.len()).step_by(3) {
            let g = Graph::new(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
                .unwrap();
            if !g.has_edges() || !g.is_connected() {
                continue;
            }
            for f in Field::ALL {
                assert_eq!(is_projectively_prime(&g, f).unwrap(), brute_prime(&g, f), "{g:?}");
            }
        }
    }
}

#[test]
fn decomposition_examples() {
    let f = Field::Gf2;
    let two_k2 = disjoint_copies(&fam(Family::Complete, &[2]), 2).unwrap();
    let ds = prime_decompositions(&two_k2, f).unwrap();
    assert_eq!(ds, vec![Decomposition { parts: vec![vs(&[0, 1]), vs(&[2, 3])] }]);
    assert_eq!(pd_via_decompositions(&two_k2, f).unwrap().0, 2);

    let p5 = fam(Family::Path, &[5]);
    let ds = prime_decompositions(&p5, f).unwrap();
    assert!(ds.contains(&Decomposition { parts: vec![vs(&[0, 1, 2, 3, 4])] }));
    assert!(ds.contains(&Decomposition { parts: vec![vs(&[0, 1]), vs(&[3, 4])] }));
    let (pd, best) = pd_via_decompositions(&p5, f).unwrap();
    assert_eq!(pd, 3);
    assert_eq!(best.parts, vec![vs(&[0, 1, 2, 3, 4])]);

    let c4 = fam(Family::Cycle, &[4]);
    let ds = prime_decompositions(&c4, f).unwrap();
    assert!(ds.contains(&Decomposition { parts: vec![vs(&[0, 1, 2, 3])] }));
    let (pd, best) = pd_via_decompositions(&c4, f).unwrap();
    assert_eq!(pd, 3);
    assert_eq!(best.parts, vec![vs(&[0, 1, 2, 3])]);
    assert_eq!(prime_decompositions(&Graph::edgeless(2).unwrap(), f), Err(Error::Edgeless));
}

#[test]
fn decompositions_match_brute_force() {
    for g in [
        fam(Family::Path, &[5]),
        fam(Family::Cycle, &[5]),
        fam(Family::Star, &[3]),
        Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap(),
        Graph::new(5, [(0, 1), (2, 3)]).unwrap(),
    ] {
        for f in Field::ALL {
            let mut got: Vec<Vec<VertexSet>> =
                prime_decompositions(&g, f).unwrap().into_iter().map(|d| d.parts).collect();
            let mut want = brute_decompositions(&g, f);
            for v in [&mut got, &mut want] {
                for d in v.iter_mut() {
                    d.sort_by_key(|s| s.bits());
                }
                v.sort_by_key(|d| d.iter().map(|s| s.bits()).collect::<Vec<_>>());
            }
            assert_eq!(got, want, "{g:?}");
            let best = want
                .iter()
                .map(|d| d.iter().map(|&p| brute_proj_dim(&g.induced(p).0, f)).sum::<usize>())
                .max()
                .unwrap();
            assert_eq!(best, brute_proj_dim(&g, f));
        }
    }
}

#[test]
fn induction_bound_examples() {
    let f = Field::Rational;
    let k2 = fam(Family::Complete, &[2]);
    assert_eq!(pd_induct_upper(&k2, 0, f).unwrap(), 1);
    assert_eq!(pd_induct_upper(&k2, 1, f).unwrap(), 1);
    let c4 = fam(Family::Cycle, &[4]);
    for x in 0..4 {
        assert_eq!(pd_induct_upper(&c4, x, f).unwrap(), 3);
    }
    let p4 = fam(Family::Path, &[4]);
    assert_eq!(pd_induct_upper(&p4, 0, f).unwrap(), 3);
    assert_eq!(brute_proj_dim(&p4, f), 2);
    assert!(pd_induct_upper(&p4, 4, f).is_err());
}

#[test]
fn cache_agrees_with_brute_force() {
    for f in Field::ALL {
        for g in [fam(Family::Cycle, &[6]), fam(Family::WhiskerComplete, &[3])] {
            let want = brute_proj_dim(&g, f);
            assert_eq!(cached_proj_dim(&g, f).unwrap(), want);
            assert_eq!(cached_proj_dim(&g.permute(&[5, 4, 3, 2, 1, 0]), f).unwrap(), want);
        }
    }
    assert!(!PdCache::global().is_empty());
}

#[test]
fn gap_g_small() {
    let gg = gap_graph_g(3, 1, 1).unwrap();
    let g = &gg.graph;
    assert_eq!(g.n(), 10);
    assert_eq!(gg.closed_forms, ClosedForms { order: 10, gamma: 3, ind_dom: Some(4), epsilon: None, pd: 7 });
    assert_eq!(domination_number(g).unwrap().value, 3);
    assert_eq!(independent_domination(g).unwrap().value, 4);
    for f in Field::ALL {
        assert_eq!(cached_proj_dim(g, f).unwrap(), 7);
        assert_eq!(gg.sandwich(f).unwrap().exact(), Some(7));
    }
    assert!(gap_graph_g(2, 1, 1).is_err());
    assert!(gap_graph_g(3, 1, 0).is_err());
}

#[test]
fn gap_g_closed_forms_up_to_14_vertices() {
    for (k, r, s) in [(3, 1, 1), (4, 1, 1), (5, 1, 1), (3, 1, 2)] {
        let gg = gap_graph_g(k, r, s).unwrap();
        let c = &gg.closed_forms;
        assert!(gg.graph.n() <= 14);
        assert_eq!(gg.graph.n(), c.order);
        assert_eq!(domination_number(&gg.graph).unwrap().value, c.gamma);
        assert_eq!(independent_domination(&gg.graph).unwrap().value, c.ind_dom.unwrap());
    }
}

#[test]
fn gap_r_z_h_examples() {
    let r = gap_graph_r(4, 1).unwrap();
    assert_eq!(r.graph.n(), 9);
    assert_eq!(domination_number(&r.graph).unwrap().value, 2);
    assert_eq!(edgewise_domination(&r.graph).unwrap().value, 1);
    let z = gap_graph_z(4, 1).unwrap();
    assert_eq!(z.graph.n(), 17);
    assert_eq!(domination_number(&z.graph).unwrap().value, 4);
    assert_eq!(edgewise_domination(&z.graph).unwrap().value, 2);
    let h = gap_graph_h(4, 1).unwrap();
    assert_eq!(h.graph.n(), 26);
    assert_eq!(domination_number(&h.graph).unwrap().value, 6);
    assert_eq!(edgewise_domination(&h.graph).unwrap().value, 3);
    assert!(gap_graph_r(3, 1).is_err());
    assert!(gap_graph_h(4, 2).is_err());
    assert_eq!("gap-h".parse::<GapFamily>().unwrap(), GapFamily::H);
    assert!(GapFamily::G.build(&[3, 1]).is_err());
}

#[test]
fn gap_h_sandwich() {
    let h = gap_graph_h(4, 1).unwrap();
    let s = h.sandwich(Field::Gf2).unwrap();
    assert_eq!(s, Sandwich { lower: 21, upper: 21 });
    assert_eq!(s.exact(), Some(h.closed_forms.pd));
}

#[test]
fn gap_r_z_h_up_to_26_vertices() {
    let mut seen = 0;
    for fam in [GapFamily::R, GapFamily::Z, GapFamily::H] {
        for r in 1..4 {
            for k in r + 3..14 {
                let Ok(gg) = fam.build(&[k, r]) else { continue };
                if gg.graph.n() > 26 {
                    continue;
                }
                seen += 1;
                let c = &gg.closed_forms;
                assert_eq!(gg.graph.n(), c.order);
                assert_eq!(domination_number(&gg.graph).unwrap().value, c.gamma, "{fam} {k} {r}");
                assert_eq!(edgewise_domination(&gg.graph).unwrap().value, c.epsilon.unwrap());
                let s = gg.sandwich(Field::Gf2).unwrap();
                assert_eq!(s.exact(), Some(c.pd), "{fam} {k} {r}");
            }
        }
    }
    assert_eq!(seen, 9 + 2 + 3 + 1);
}

#[test]
fn gap_chain_from_closed_forms() {
    for b in [1usize, 2] {
        let (k, r) = (b + 4, b + 1);
        let order = 2 * k * (2 * r + 1) + r + 1;
        let (gamma, eps, pd) = (2 * (2 * r + 1), 2 * r + 1, (2 * k - 1) * (2 * r + 1));
        assert!(order - gamma + b < pd && pd < order - eps - b, "b = {b}");
    }
    let gg = gap_graph_h(5, 2).unwrap();
    let c = &gg.closed_forms;
    assert!(c.order - c.gamma + 1 < c.pd && c.pd < c.order - c.epsilon.unwrap() - 1);
}
