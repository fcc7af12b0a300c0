//! The registry of theorem checks and counterexample hunts.

use serde_json::{json, Value as Json};

use regpd_core::complex::{
    b_complement, closed_neighbourhood_clutter, dominance_complex, flower_number, independence_complex,
    independence_complex_of_graph, levi_graph, side_complex,
};
use regpd_core::domination::{
    cochordal_cover, domination_number, edge_domination, edgewise_domination, h_side, independence_domination,
    independence_number, independent_domination, induced_matching, maximum_independent_set,
    upper_domination, upper_independent_vertexwise, upper_vertexwise,
};
use regpd_core::graph::{is_chordal, square, subdivision};
use regpd_core::homology::{
    clutter_proj_dim, graph_regularity, proj_dim, proj_dim_direct, proj_dim_links, regularity, Field,
};
use regpd_core::prime::{cached_proj_dim, is_projectively_prime, pd_via_decompositions};
use regpd_core::vset::k_subsets;
use regpd_core::{BipartiteGraph, Clutter, Complex, Graph, Result, VertexSet};

use crate::corpus::Subject;

/// Result of one (sub-)instance before error mapping.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Holds,
    /// Values showing the failure.
    Fails(Json),
    /// The violated precondition.
    Skip(String),
}

/// One sub-instance: a suffix naming what was derived from the corpus item
/// (`""` for the item itself) and its outcome.
pub struct Sub {
    pub suffix: String,
    pub result: Result<Outcome>,
}

fn sub(suffix: &str, result: Result<Outcome>) -> Sub {
    Sub {
        suffix: suffix.to_string(),
        result,
    }
}

fn one(result: Result<Outcome>) -> Vec<Sub> {
    vec![sub("", result)]
}

fn skip(why: &str) -> Vec<Sub> {
    one(Ok(Outcome::Skip(why.to_string())))
}

fn verdict(ok: bool, values: Json) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Fails(values)
    }
}

pub type Runner = fn(&Subject, Field) -> Vec<Sub>;

pub struct Check {
    pub id: &'static str,
    pub statement: &'static str,
    /// Whether the verdict depends on the coefficient field.
    pub uses_field: bool,
    pub run: Runner,
}

pub const CHECKS: &[Check] = &[
    Check { id: "T1", statement: "reg(B(Δ)) ≥ reg(Δ)+1", uses_field: true, run: t1 },
    Check { id: "T2", statement: "im(B(Δ)) = max{2, ν(Δ), 𝔥(Δ)} for Δ not a simplex", uses_field: false, run: t2 },
    Check { id: "T3", statement: "reg(G) ≤ β(G) when G has an edge", uses_field: true, run: t3 },
    Check { id: "T4", statement: "pd(ℋ) ≤ reg(L(ℋ))", uses_field: true, run: t4 },
    Check { id: "T5", statement: "pd(Dom(G)) = Γ(G)", uses_field: true, run: t5 },
    Check { id: "T6", statement: "pd(G) ≤ reg(S(G))", uses_field: true, run: t6 },
    Check { id: "T7", statement: "im(S(G)) = |G| − γ(G) without isolated vertices", uses_field: false, run: t7 },
    Check { id: "T8", statement: "|G| − i(G) ≤ pd(G) ≤ |G| − max{τ(G), ε(G)}", uses_field: true, run: t8 },
    Check { id: "T9", statement: "cochord(S(G)) = |G| − τ(G)", uses_field: false, run: t9 },
    Check { id: "T10", statement: "Υ(S(G)) = β(S(G)) = |G| − ε(G)", uses_field: false, run: t10 },
    Check { id: "T11", statement: "reg(B) ≤ ½(im(B) + min{|X|, |Y|})", uses_field: true, run: t11 },
    Check { id: "T12", statement: "pd(G) ≤ |G| − ½γ(G)", uses_field: true, run: t12 },
    Check { id: "T13", statement: "G chordal ⇒ reg(S(G)) = |G| − γ(G)", uses_field: true, run: t13 },
    Check { id: "T14", statement: "pd(G) agrees by duality, Hochster's formula and links", uses_field: true, run: t14 },
    Check { id: "T15", statement: "some induced H has pd(G) = reg(S(H))", uses_field: true, run: t15 },
    Check { id: "T16", statement: "pd(G) = max over prime decompositions of Σ pd(parts)", uses_field: true, run: t16 },
    Check { id: "T17", statement: "reg(Δ_i(B)) + 1 ≤ reg(B) when B is Sperner on X_{1−i}", uses_field: true, run: t17 },
    Check { id: "T18", statement: "γ(G) = i(G) ⇒ im(S(G)) ≤ pd(G) ≤ reg(S(G))", uses_field: true, run: t18 },
    Check { id: "T19", statement: "γ′(S(G)) + α(G²) = |G|", uses_field: false, run: t19 },
    Check { id: "T20", statement: "τ(G) = α((G°)²)", uses_field: false, run: t20 },
];

pub const HUNTS: &[Check] = &[
    Check { id: "H1", statement: "reg(Δ) + 1 = reg(B(Δ)) for prime Δ", uses_field: true, run: h1 },
    Check { id: "H2", statement: "reg(B) ≤ max{|X| − h_Y(B), |Y| − h_X(B)}", uses_field: true, run: h2 },
    Check { id: "H3", statement: "β(G) = Υ(G)", uses_field: false, run: h3 },
    Check { id: "H4", statement: "pd(G) ≤ |G| − γ(G) for C_{3k+1}-free projectively prime G", uses_field: true, run: h4 },
];

pub fn find_check(id: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

pub fn find_hunt(id: &str) -> Option<&'static Check> {
    HUNTS.iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

// ---- shared pieces ----

fn sub_graph(g: &Graph) -> Result<BipartiteGraph> {
    subdivision(g)
}

fn reg(g: &Graph, f: Field) -> Result<usize> {
    Ok(graph_regularity(g, f)?.value)
}

/// `im` with the empty matching for edgeless graphs.
fn im0(g: &Graph) -> Result<usize> {
    if g.has_edges() {
        Ok(induced_matching(g)?.value)
    } else {
        Ok(0)
    }
}

fn graph_only(s: &Subject) -> std::result::Result<&Graph, Vec<Sub>> {
    s.as_graph().ok_or_else(|| skip("instance is a graph"))
}

/// `Ind(G)` and `Dom(G)` for a graph, `Ind(ℋ)` for a clutter.
fn complexes(s: &Subject) -> Vec<(&'static str, Result<Complex>)> {
    match s {
        Subject::Graph(g) => vec![("ind", independence_complex_of_graph(g)), ("dom", dominance_complex(g))],
        Subject::Clutter(c) => vec![("ind", independence_complex(c))],
    }
}

fn on_complexes(s: &Subject, f: Field, check: fn(&Complex, Field) -> Result<Outcome>) -> Vec<Sub> {
    complexes(s)
        .into_iter()
        .map(|(name, d)| sub(name, d.and_then(|d| check(&d, f))))
        .collect()
}

fn is_full_simplex(d: &Complex) -> bool {
    d.facets() == [d.ground_set()]
}

fn no_isolated(g: &Graph) -> bool {
    g.isolated_vertices().is_empty()
}

// ---- checks ----

fn t1(s: &Subject, f: Field) -> Vec<Sub> {
    on_complexes(s, f, |d, f| {
        if is_full_simplex(d) {
            return Ok(Outcome::Skip("Δ is not the full simplex on its ground set".into()));
        }
        let b = b_complement(d, None)?;
        let lhs = regularity(d, f)?.value;
        let rhs = reg(b.graph(), f)?;
        Ok(verdict(lhs < rhs, json!({"reg_delta": lhs, "reg_b": rhs})))
    })
}

fn t2(s: &Subject, f: Field) -> Vec<Sub> {
    on_complexes(s, f, |d, _| {
        if d.is_simplex() {
            return Ok(Outcome::Skip("Δ is not a simplex".into()));
        }
        let b = b_complement(d, None)?;
        let im = im0(b.graph())?;
        let (nu, _) = flower_number(d)?;
        let helly = d.helly_number()?.unwrap_or(0);
        let want = 2.max(nu).max(helly);
        Ok(verdict(im == want, json!({"im_b": im, "flower": nu, "helly": helly})))
    })
}

fn t3(s: &Subject, f: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    if !g.has_edges() {
        return skip("G has an edge");
    }
    one((|| {
        let r = reg(g, f)?;
        let beta = upper_independent_vertexwise(g)?.value;
        Ok(verdict(r <= beta, json!({"reg": r, "beta_vw": beta})))
    })())
}

fn t4(s: &Subject, f: Field) -> Vec<Sub> {
    let clutters: Vec<(&str, Clutter)> = match s {
        Subject::Graph(g) => vec![("edges", Clutter::from_graph(g)), ("closed-nbhd", closed_neighbourhood_clutter(g))],
        Subject::Clutter(c) => vec![("", c.clone())],
    };
    clutters
        .into_iter()
        .map(|(name, h)| {
            sub(
                name,
                (|| {
                    let levi = levi_graph(&h)?;
                    let pd = clutter_proj_dim(&h, f)?;
                    let r = reg(levi.graph(), f)?;
                    Ok(verdict(pd <= r, json!({"pd": pd, "reg_levi": r, "clutter": h.to_text()})))
                })(),
            )
        })
        .collect()
}

fn t5(s: &Subject, f: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    if g.n() == 0 {
        return skip("G has a vertex");
    }
    one((|| {
        let pd = proj_dim_direct(&dominance_complex(g)?, f)?;
        let upper = upper_domination(g)?.value;
        Ok(verdict(pd == upper, json!({"pd_dom": pd, "Gamma": upper})))
    })())
}

fn t6(s: &Subject, f: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    one((|| {
        let pd = cached_proj_dim(g, f)?;
        let r = reg(sub_graph(g)?.graph(), f)?;
        Ok(verdict(pd <= r, json!({"pd": pd, "reg_sg": r})))
    })())
}

fn t7(s: &Subject, _: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    if g.n() == 0 || !no_isolated(g) {
        return skip("G has vertices and no isolated vertex");
    }
    one((|| {
        let im = im0(sub_graph(g)?.graph())?;
        let gamma = domination_number(g)?.value;
        Ok(verdict(im + gamma == g.n(), json!({"im_sg": im, "gamma": gamma, "n": g.n()})))
    })())
}

fn t8(s: &Subject, f: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    if !g.has_edges() {
        return skip("G has an edge");
    }
    one((|| {
        let n = g.n();
        let pd = cached_proj_dim(g, f)?;
        let i = independent_domination(g)?.value;
        let tau = independence_domination(g)?.value;
        let eps = edgewise_domination(g)?.value;
        let ok = n - i <= pd && pd + tau.max(eps) <= n;
        Ok(verdict(ok, json!({"n": n, "pd": pd, "ind_dom": i, "tau": tau, "epsilon": eps})))
    })())
}

fn t9(s: &Subject, _: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    if g.n() == 0 || !no_isolated(g) {
        return skip("G has vertices and no isolated vertex");
    }
    one((|| {
        let c = cochordal_cover(sub_graph(g)?.graph())?.value;
        let tau = independence_domination(g)?.value;
        Ok(verdict(c + tau == g.n(), json!({"cochord_sg": c, "tau": tau, "n": g.n()})))
    })())
}

fn t10(s: &Subject, _: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    if g.n() == 0 || !no_isolated(g) {
        return skip("G has vertices and no isolated vertex");
    }
    one((|| {
        let sg = sub_graph(g)?;
        let ups = upper_vertexwise(sg.graph())?.value;
        let beta = upper_independent_vertexwise(sg.graph())?.value;
        let eps = edgewise_domination(g)?.value;
        let ok = ups == beta && beta + eps == g.n();
        Ok(verdict(ok, json!({"Upsilon_sg": ups, "beta_vw_sg": beta, "epsilon": eps, "n": g.n()})))
    })())
}

fn bipartition(g: &Graph) -> Option<BipartiteGraph> {
    BipartiteGraph::from_graph(g.clone()).ok()
}

fn t11(s: &Subject, f: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    let Some(b) = bipartition(g) else {
        return skip("G is bipartite");
    };
    one((|| {
        let r = reg(g, f)?;
        let im = im0(g)?;
        let side = b.side(0).len().min(b.side(1).len());
        Ok(verdict(2 * r <= im + side, json!({"reg": r, "im": im, "min_side": side})))
    })())
}

fn t12(s: &Subject, f: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    if g.n() == 0 {
        return skip("G has a vertex");
    }
    one((|| {
        let pd = cached_proj_dim(g, f)?;
        let gamma = domination_number(g)?.value;
        Ok(verdict(2 * pd + gamma <= 2 * g.n(), json!({"pd": pd, "gamma": gamma, "n": g.n()})))
    })())
}

fn t13(s: &Subject, f: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    if g.n() == 0 || !is_chordal(g) {
        return skip("G is a chordal graph with a vertex");
    }
    one((|| {
        let r = reg(sub_graph(g)?.graph(), f)?;
        let gamma = domination_number(g)?.value;
        Ok(verdict(r + gamma == g.n(), json!({"reg_sg": r, "gamma": gamma, "n": g.n()})))
    })())
}

fn t14(s: &Subject, f: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    one((|| {
        let terai = proj_dim(g, f)?;
        let direct = proj_dim_direct(&independence_complex_of_graph(g)?, f)?;
        let links = proj_dim_links(g, f)?;
        let ok = terai == direct && direct == links;
        Ok(verdict(ok, json!({"terai": terai, "hochster": direct, "links": links})))
    })())
}

pub const T15_MAX_ORDER: usize = 5;

fn t15(s: &Subject, f: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    if g.n() > T15_MAX_ORDER {
        return skip("G has at most 5 vertices");
    }
    one((|| {
        let pd = cached_proj_dim(g, f)?;
        for size in (0..=g.n()).rev() {
            for h in k_subsets(g.n(), size) {
                let r = reg(sub_graph(&g.induced(h).0)?.graph(), f)?;
                if r == pd {
                    return Ok(Outcome::Holds);
                }
            }
        }
        Ok(Outcome::Fails(json!({"pd": pd})))
    })())
}

fn t16(s: &Subject, f: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    if !g.has_edges() {
        return skip("G has an edge");
    }
    one((|| {
        let (best, d) = pd_via_decompositions(g, f)?;
        let pd = proj_dim(g, f)?;
        let parts: Vec<Vec<usize>> = d.parts.iter().map(|p| p.to_vec()).collect();
        Ok(verdict(best == pd, json!({"decomposition_sum": best, "pd": pd, "parts": parts})))
    })())
}

fn side_bound(b: &BipartiteGraph, f: Field) -> Vec<Result<Outcome>> {
    if !b.graph().has_edges() {
        return vec![Ok(Outcome::Skip("B has an edge".into())); 2];
    }
    let rb = reg(b.graph(), f);
    (0..2u8)
        .map(|i| {
            if !b.is_sperner(1 - i) {
                return Ok(Outcome::Skip(format!("B is Sperner on side {}", 1 - i)));
            }
            let rb = rb.clone()?;
            let r = regularity(&side_complex(b, i)?, f)?.value;
            Ok(verdict(r < rb, json!({"side": i, "reg_side_complex": r, "reg_b": rb})))
        })
        .collect()
}

fn t17(s: &Subject, f: Field) -> Vec<Sub> {
    let mut out = Vec::new();
    for (name, d) in complexes(s) {
        match d {
            Ok(d) if is_full_simplex(&d) => {
                out.push(sub(name, Ok(Outcome::Skip("Δ is not the full simplex on its ground set".into()))))
            }
            Ok(d) => match b_complement(&d, None) {
                Ok(b) => {
                    for (i, r) in side_bound(&b, f).into_iter().enumerate() {
                        out.push(sub(&format!("{name}:side{i}"), r));
                    }
                }
                Err(e) => out.push(sub(name, Err(e))),
            },
            Err(e) => out.push(sub(name, Err(e))),
        }
    }
    if let Some(b) = s.as_graph().and_then(bipartition) {
        for (i, r) in side_bound(&b, f).into_iter().enumerate() {
            out.push(sub(&format!("graph:side{i}"), r));
        }
    }
    out
}

fn t18(s: &Subject, f: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    if g.n() == 0 {
        return skip("G has a vertex");
    }
    one((|| {
        let gamma = domination_number(g)?.value;
        let i = independent_domination(g)?.value;
        if gamma != i {
            return Ok(Outcome::Skip("γ(G) = i(G)".into()));
        }
        let sg = sub_graph(g)?;
        let im = im0(sg.graph())?;
        let pd = cached_proj_dim(g, f)?;
        let r = reg(sg.graph(), f)?;
        Ok(verdict(im <= pd && pd <= r, json!({"im_sg": im, "pd": pd, "reg_sg": r})))
    })())
}

fn t19(s: &Subject, _: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    one((|| {
        let sg = sub_graph(g)?;
        let ed = if sg.graph().has_edges() {
            edge_domination(sg.graph())?.value
        } else {
            0
        };
        let alpha = independence_number(&square(g))?.value;
        Ok(verdict(ed + alpha == g.n(), json!({"edge_dom_sg": ed, "alpha_square": alpha, "n": g.n()})))
    })())
}

fn t20(s: &Subject, _: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    one((|| {
        let tau = independence_domination(g)?.value;
        let core = g.without_isolated();
        let sq = square(&core);
        let rows: Vec<Vec<usize>> = (0..sq.n()).map(|v| sq.neighbors(v).to_vec()).collect();
        let alpha = maximum_independent_set(&rows)?.len();
        Ok(verdict(tau == alpha, json!({"tau": tau, "alpha_square_core": alpha})))
    })())
}

// ---- hunts ----

fn h1(s: &Subject, f: Field) -> Vec<Sub> {
    let d = match s {
        Subject::Graph(g) => independence_complex_of_graph(g),
        Subject::Clutter(c) => independence_complex(c),
    };
    one((|| {
        let d = d?;
        if is_full_simplex(&d) {
            return Ok(Outcome::Skip("Δ is not the full simplex on its ground set".into()));
        }
        let r = regularity(&d, f)?.value;
        for x in 0..d.ground() {
            if regularity(&d.induced(d.ground_set().without(x)), f)?.value >= r {
                return Ok(Outcome::Skip("Δ is prime".into()));
            }
        }
        let rb = reg(b_complement(&d, None)?.graph(), f)?;
        Ok(verdict(r + 1 == rb, json!({"reg_delta": r, "reg_b": rb, "complex": d.to_text()})))
    })())
}

fn h2(s: &Subject, f: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    let Some(b) = bipartition(g) else {
        return skip("G is bipartite");
    };
    if g.n() == 0 || !no_isolated(g) {
        return skip("B has vertices and no isolated vertex");
    }
    one((|| {
        let r = reg(g, f)?;
        let (x, y) = (b.side(0).len(), b.side(1).len());
        let hx = h_side(&b, 0)?.value;
        let hy = h_side(&b, 1)?.value;
        let bound = (x - hy).max(y - hx);
        Ok(verdict(r <= bound, json!({"reg": r, "x": x, "y": y, "h_x": hx, "h_y": hy})))
    })())
}

fn h3(s: &Subject, _: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    if !g.has_edges() {
        return skip("G has an edge");
    }
    one((|| {
        let beta = upper_independent_vertexwise(g)?.value;
        let ups = upper_vertexwise(g)?.value;
        Ok(verdict(beta == ups, json!({"beta_vw": beta, "Upsilon": ups})))
    })())
}

/// An induced cycle of length `3k + 1`, as its vertex set.
pub fn induced_cycle_3k1(g: &Graph) -> Option<VertexSet> {
    (4..=g.n()).step_by(3).find_map(|len| {
        k_subsets(g.n(), len).find(|&s| {
            let (h, _) = g.induced(s);
            h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2)
        })
    })
}

fn h4(s: &Subject, f: Field) -> Vec<Sub> {
    let g = match graph_only(s) {
        Ok(g) => g,
        Err(v) => return v,
    };
    if !g.has_edges() || !g.is_connected() {
        return skip("G is connected with an edge");
    }
    if induced_cycle_3k1(g).is_some() {
        return skip("G has no induced C_{3k+1}");
    }
    one((|| {
        if !is_projectively_prime(g, f)? {
            return Ok(Outcome::Skip("G is projectively prime".into()));
        }
        let pd = cached_proj_dim(g, f)?;
        let gamma = domination_number(g)?.value;
        Ok(verdict(pd + gamma <= g.n(), json!({"pd": pd, "gamma": gamma, "n": g.n()})))
    })())
}
