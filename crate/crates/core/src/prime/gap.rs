//! Graphs separating `pd` from the domination bounds.
//!
//! Numbering, construction first:
//! - a `K_{k,k}` block at `base` has sides `base..base+k` and
//!   `base+k..base+2k`; its chosen vertex is `base`.
//! - `gap-g k r s`: one block at 0 (chosen vertex `v = 0`), then `r` paths
//!   on `3s+1` vertices, the first vertex of each path joined to `v`.
//! - `gap-r k r`: `r` blocks, then `x = 2kr` joined to each chosen vertex.
//! - `gap-z k r`: `r+1` blocks, then `y_2..y_{r+1}`; `y_j` is joined to the
//!   chosen vertices of blocks 1 and `j`.
//! - `gap-h k r`: `gap-r k r`, then `gap-z k r` shifted by `2kr+1`, plus
//!   the edge from `x` to the first chosen vertex of the `gap-z` part.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::Field;
use crate::vset::{VertexSet, MAX_VERTICES};

use super::{is_projectively_prime, pd_induct_upper, Decomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GapFamily {
    #[serde(rename = "gap-g")]
    G,
    #[serde(rename = "gap-r")]
    R,
    #[serde(rename = "gap-z")]
    Z,
    #[serde(rename = "gap-h")]
    H,
}

impl GapFamily {
    pub const ALL: [GapFamily; 4] = [GapFamily::G, GapFamily::R, GapFamily::Z, GapFamily::H];

    pub fn name(self) -> &'static str {
        match self {
            GapFamily::G => "gap-g",
            GapFamily::R => "gap-r",
            GapFamily::Z => "gap-z",
            GapFamily::H => "gap-h",
        }
    }

    pub fn build(self, params: &[usize]) -> Result<GapGraph> {
        let want = if self == GapFamily::G { 3 } else { 2 };
        if params.len() != want {
            return Err(Error::InvalidParameter(format!(
                "{} takes {want} parameters, got {}",
                self.name(),
                params.len()
            )));
        }
        match self {
            GapFamily::G => gap_graph_g(params[0], params[1], params[2]),
            GapFamily::R => gap_graph_r(params[0], params[1]),
            GapFamily::Z => gap_graph_z(params[0], params[1]),
            GapFamily::H => gap_graph_h(params[0], params[1]),
        }
    }
}

impl fmt::Display for GapFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GapFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<GapFamily> {
        GapFamily::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// The values the construction is known to have.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForms {
    pub order: usize,
    pub gamma: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ind_dom: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<usize>,
    pub pd: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GapGraph {
    pub family: GapFamily,
    pub params: Vec<usize>,
    pub graph: Graph,
    pub closed_forms: ClosedForms,
    /// Prime decomposition giving the lower bound.
    pub decomposition: Decomposition,
    /// Vertex for the deletion upper bound.
    pub designated: usize,
}

/// `lower ≤ pd ≤ upper`; equal bounds certify `pd`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sandwich {
    pub lower: usize,
    pub upper: usize,
}

impl Sandwich {
    pub fn exact(self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

impl GapGraph {
    /// Checks the decomposition is a prime decomposition of the graph and
    /// brackets `pd` between its sum and the deletion bound.
    pub fn sandwich(&self, f: Field) -> Result<Sandwich> {
        let g = &self.graph;
        let d = &self.decomposition;
        if !d.is_induced(g) || !d.is_maximal(g) {
            return Err(Error::Inconsistent(format!(
                "stated decomposition of {} is not a maximal induced decomposition",
                self.family
            )));
        }
        for &p in &d.parts {
            if !is_projectively_prime(&g.induced(p).0, f)? {
                return Err(Error::Inconsistent(format!("part {:?} is not prime", p.to_vec())));
            }
        }
        Ok(Sandwich {
            lower: d.pd_sum(g, f)?,
            upper: pd_induct_upper(g, self.designated, f)?,
        })
    }
}

struct Builder {
    edges: Vec<(usize, usize)>,
    n: usize,
}

impl Builder {
    fn new() -> Builder {
        Builder { edges: vec![], n: 0 }
    }

    /// Appends a `K_{k,k}` block and returns its vertex set.
    fn block(&mut self, k: usize) -> VertexSet {
        let base = self.n;
        for a in 0..k {
            for b in 0..k {
                self.edges.push((base + a, base + k + b));
            }
        }
        self.n += 2 * k;
        (base..base + 2 * k).collect()
    }

    /// Appends a path and returns its vertex set.
    fn path(&mut self, len: usize) -> VertexSet {
        let base = self.n;
        for i in 1..len {
            self.edges.push((base + i - 1, base + i));
        }
        self.n += len;
        (base..base + len).collect()
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn finish(self) -> Result<Graph> {
        Graph::new(self.n, self.edges)
    }
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_VERTICES {
        return Err(Error::TooManyVertices(order));
    }
    Ok(())
}

fn check(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

/// `G_{2k,r}` with paths on `3s+1` vertices.
pub fn gap_graph_g(k: usize, r: usize, s: usize) -> Result<GapGraph> {
    check(r >= 1 && s >= 1, "gap-g needs r >= 1 and s >= 1")?;
    check(k > r + 1, "gap-g needs k > r + 1")?;
    check_order(2 * k + r * (3 * s + 1))?;
    let mut b = Builder::new();
    let t = b.block(k);
    let v = 0;
    let mut parts = vec![t];
    for _ in 0..r {
        let p = b.path(3 * s + 1);
        let x = p.first().expect("path is nonempty");
        b.edges.push((v, x));
        parts.push(p.without(x));
    }
    Ok(GapGraph {
        family: GapFamily::G,
        params: vec![k, r, s],
        graph: b.finish()?,
        closed_forms: ClosedForms {
            order: 2 * k + r * (3 * s + 1),
            gamma: s * r + 2,
            ind_dom: Some(s * r + k),
            epsilon: None,
            pd: 2 * k + 2 * r * s - 1,
        },
        decomposition: Decomposition { parts },
        designated: v,
    })
}

fn r_part(b: &mut Builder, k: usize, r: usize) -> (Vec<VertexSet>, usize) {
    let blocks: Vec<VertexSet> = (0..r).map(|_| b.block(k)).collect();
    let x = b.vertex();
    for blk in &blocks {
        b.edges.push((blk.first().expect("block"), x));
    }
    (blocks, x)
}

fn z_part(b: &mut Builder, k: usize, r: usize) -> Vec<VertexSet> {
    let blocks: Vec<VertexSet> = (0..=r).map(|_| b.block(k)).collect();
    let v1 = blocks[0].first().expect("block");
    for blk in &blocks[1..] {
        let y = b.vertex();
        b.edges.push((v1, y));
        b.edges.push((blk.first().expect("block"), y));
    }
    blocks
}

fn check_rzh(name: &str, k: usize, r: usize) -> Result<()> {
    check(r >= 1, &format!("{name} needs r >= 1"))?;
    check(k > r + 2, &format!("{name} needs k > r + 2"))
}

/// `R_{k,r}`.
pub fn gap_graph_r(k: usize, r: usize) -> Result<GapGraph> {
    check_rzh("gap-r", k, r)?;
    check_order(2 * r * k + 1)?;
    let mut b = Builder::new();
    let (blocks, _) = r_part(&mut b, k, r);
    Ok(GapGraph {
        family: GapFamily::R,
        params: vec![k, r],
        graph: b.finish()?,
        closed_forms: ClosedForms {
            order: 2 * r * k + 1,
            gamma: 2 * r,
            ind_dom: None,
            epsilon: Some(r),
            pd: (2 * k - 1) * r,
        },
        decomposition: Decomposition { parts: blocks },
        designated: 0,
    })
}

/// `Z_{k,r}`.
pub fn gap_graph_z(k: usize, r: usize) -> Result<GapGraph> {
    check_rzh("gap-z", k, r)?;
    check_order(2 * k * (r + 1) + r)?;
    let mut b = Builder::new();
    let blocks = z_part(&mut b, k, r);
    Ok(GapGraph {
        family: GapFamily::Z,
        params: vec![k, r],
        graph: b.finish()?,
        closed_forms: ClosedForms {
            order: 2 * k * (r + 1) + r,
            gamma: 2 * (r + 1),
            ind_dom: None,
            epsilon: Some(r + 1),
            pd: (2 * k - 1) * (r + 1),
        },
        decomposition: Decomposition { parts: blocks },
        designated: 0,
    })
}

/// `H_{k,r}`.
pub fn gap_graph_h(k: usize, r: usize) -> Result<GapGraph> {
    check_rzh("gap-h", k, r)?;
    check_order(2 * k * (2 * r + 1) + r + 1)?;
    let mut b = Builder::new();
    let (mut parts, x) = r_part(&mut b, k, r);
    let z = z_part(&mut b, k, r);
    let v1 = z[0].first().expect("block");
    b.edges.push((x, v1));
    parts.extend(z);
    Ok(GapGraph {
        family: GapFamily::H,
        params: vec![k, r],
        graph: b.finish()?,
        closed_forms: ClosedForms {
            order: 2 * k * (2 * r + 1) + r + 1,
            gamma: 2 * (2 * r + 1),
            ind_dom: None,
            epsilon: Some(2 * r + 1),
            pd: (2 * k - 1) * (2 * r + 1),
        },
        decomposition: Decomposition { parts },
        designated: v1,
    })
}
