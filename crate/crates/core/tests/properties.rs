use proptest::prelude::*;
use regpd_core::complex::{
    alexander_dual, b_complement, closed_neighbourhood_clutter, dominance_complex, flower_number,
    independence_complex, independence_complex_of_graph, levi_graph,
};
use regpd_core::domination::{
    domination_number, edge_domination, independence_number, independent_domination, induced_matching,
    unstable_domination, upper_domination, upper_independent_vertexwise, upper_vertexwise, Invariant,
    InvariantRecord,
};
use regpd_core::graph::io::{parse_graph6, to_graph6};
use regpd_core::graph::{are_isomorphic, canonical_form, is_chordal, square, subdivision};
use regpd_core::homology::{graph_regularity, proj_dim, proj_dim_direct, proj_dim_links, proj_dim_terai, Field};
use regpd_core::{Clutter, Complex, Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = vec![];
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn no_isolated(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("isolated vertex", |g| g.isolated_vertices().is_empty())
}

fn clutter(max_n: usize) -> impl Strategy<Value = Clutter> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(1u64..(1 << n), 1..6).prop_filter_map("no clutter", move |masks| {
            let sets: Vec<VertexSet> = masks
                .into_iter()
                .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect::<VertexSet>())
                .filter(|s| s.len() >= 2)
                .collect();
            let min: Vec<VertexSet> = sets
                .iter()
                .copied()
                .filter(|s| !sets.iter().any(|t| t.is_proper_subset(*s)))
                .collect();
            (!min.is_empty()).then(|| Clutter::new(n, min).ok()).flatten()
        })
    })
}

fn sg(g: &Graph) -> Graph {
    subdivision(g).unwrap().into_graph()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph6_round_trip(g in graph(9)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(7), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g).0, canonical_form(&h).0);
        prop_assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn domination_chain(g in graph(7)) {
        let gamma = domination_number(&g).unwrap().value;
        let i = independent_domination(&g).unwrap().value;
        let upper = upper_domination(&g).unwrap().value;
        prop_assert!(gamma <= i && i <= upper);
        if g.has_edges() {
            let us = unstable_domination(&g).unwrap().value;
            prop_assert!(gamma <= us && us <= gamma + 1);
            let beta = upper_independent_vertexwise(&g).unwrap().value;
            prop_assert!(beta <= upper_vertexwise(&g).unwrap().value);
        }
    }

    #[test]
    fn record_respects_chain(g in no_isolated(6)) {
        let r = InvariantRecord::compute(&g, &[Invariant::Gamma, Invariant::IndDom, Invariant::UpperGamma]);
        prop_assert!(r.errors.is_empty());
        prop_assert!(r.gamma <= r.ind_dom && r.ind_dom <= r.upper_gamma);
    }

    #[test]
    fn induced_matching_of_subdivision(g in no_isolated(7)) {
        let im = induced_matching(&sg(&g)).unwrap().value;
        prop_assert_eq!(im, g.n() - domination_number(&g).unwrap().value);
    }

    #[test]
    fn horton_kilakos(g in no_isolated(7)) {
        let gp = edge_domination(&sg(&g)).unwrap().value;
        prop_assert_eq!(gp + independence_number(&square(&g)).unwrap().value, g.n());
    }

    #[test]
    fn alexander_dual_is_an_involution(g in graph(6)) {
        let d = independence_complex_of_graph(&g).unwrap();
        let dd = alexander_dual(&alexander_dual(&d).unwrap()).unwrap();
        prop_assert_eq!(dd, d);
    }

    #[test]
    fn dominance_complex_is_neighbourhood_independence(g in graph(6)) {
        let dom = dominance_complex(&g).unwrap();
        let ind = independence_complex(&closed_neighbourhood_clutter(&g)).unwrap();
        prop_assert_eq!(dom, ind);
    }

    #[test]
    fn pd_routes_agree(g in graph(7)) {
        for f in Field::ALL {
            let pd = proj_dim(&g, f).unwrap();
            prop_assert_eq!(pd, proj_dim_terai(&g, f).unwrap());
            prop_assert_eq!(pd, proj_dim_links(&g, f).unwrap());
            if g.n() <= 6 {
                let d = independence_complex_of_graph(&g).unwrap();
                prop_assert_eq!(pd, proj_dim_direct(&d, f).unwrap());
            }
        }
    }

    #[test]
    fn regularity_between_matching_and_cochord(g in graph(7)) {
        let r = graph_regularity(&g, Field::Gf2).unwrap().value;
        if g.has_edges() {
            prop_assert!(induced_matching(&g).unwrap().value <= r);
            prop_assert!(r <= Invariant::Cochord.compute(&g).unwrap().value);
        } else {
            prop_assert_eq!(r, 0);
        }
        if is_chordal(&g) && g.has_edges() {
            prop_assert_eq!(r, induced_matching(&g).unwrap().value);
        }
    }

    #[test]
    fn pd_bounded_by_subdivision(g in graph(6)) {
        for f in Field::ALL {
            let pd = proj_dim(&g, f).unwrap();
            prop_assert!(pd <= graph_regularity(&sg(&g), f).unwrap().value);
            prop_assert!(pd <= g.n());
        }
    }

    #[test]
    fn flower_number_of_cover_dual(g in no_isolated(6)) {
        let us = unstable_domination(&g).unwrap().value;
        if g.n() >= us + 3 {
            let dual = alexander_dual(&independence_complex_of_graph(&g).unwrap()).unwrap();
            prop_assert_eq!(flower_number(&dual).unwrap().0, g.n() - us);
        }
    }

    #[test]
    fn b_complement_matching(g in graph(5)) {
        let d = independence_complex_of_graph(&g).unwrap();
        prop_assume!(!d.is_simplex());
        let b = b_complement(&d, None).unwrap();
        let im = induced_matching(b.graph()).unwrap().value;
        let nu = flower_number(&d).unwrap().0;
        let h = d.helly_number().unwrap().unwrap_or(0);
        prop_assert_eq!(im, 2.max(nu).max(h));
    }

    #[test]
    fn clutter_induced_matchings_bound_b(h in clutter(6)) {
        let d = independence_complex(&h).unwrap();
        let b = b_complement(&d, None).unwrap();
        let im = induced_matching(b.graph()).unwrap().value;
        let edges = h.edges();
        for mask in 1u32..(1 << edges.len()) {
            let chosen: Vec<VertexSet> = (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            let induced = chosen.iter().enumerate().all(|(i, a)| {
                chosen[i + 1..].iter().all(|b| !a.intersects(*b))
            }) && {
                let u = chosen.iter().fold(VertexSet::EMPTY, |acc, s| acc | *s);
                edges.iter().filter(|e| e.is_subset(u)).count() == chosen.len()
            };
            if induced {
                prop_assert!(chosen.iter().map(|s| s.len() - 1).sum::<usize>() <= im);
            }
        }
    }

    #[test]
    fn upper_domination_below_levi_upsilon(g in graph(5)) {
        let l = levi_graph(&closed_neighbourhood_clutter(&g));
        if let Ok(l) = l {
            prop_assert!(upper_domination(&g).unwrap().value <= upper_vertexwise(l.graph()).unwrap().value);
        }
    }
}

#[test]
fn complexes_from_facets_are_closed() {
    let d = Complex::from_facets(4, [[0, 1, 2].into_iter().collect(), [2, 3].into_iter().collect()]).unwrap();
    assert!(d.contains([0, 2].into_iter().collect()));
    assert!(!d.contains([1, 3].into_iter().collect()));
}
