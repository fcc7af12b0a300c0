use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Invariant {
    Gamma,
    UpperGamma,
    IndDom,
    EdgeDom,
    Tau,
    GammaUs,
    Upsilon,
    BetaVw,
    Epsilon,
    Im,
    Alpha,
    Cochord,
}

impl Invariant {
    pub const ALL: [Invariant; 12] = [
        Invariant::Gamma,
        Invariant::UpperGamma,
        Invariant::IndDom,
        Invariant::EdgeDom,
        Invariant::Tau,
        Invariant::GammaUs,
        Invariant::Upsilon,
        Invariant::BetaVw,
        Invariant::Epsilon,
        Invariant::Im,
        Invariant::Alpha,
        Invariant::Cochord,
    ];

    /// The JSON field name.
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Gamma => "gamma",
            Invariant::UpperGamma => "Gamma",
            Invariant::IndDom => "ind_dom",
            Invariant::EdgeDom => "edge_dom",
            Invariant::Tau => "tau",
            Invariant::GammaUs => "gamma_us",
            Invariant::Upsilon => "Upsilon",
            Invariant::BetaVw => "beta_vw",
            Invariant::Epsilon => "epsilon",
            Invariant::Im => "im",
            Invariant::Alpha => "alpha",
            Invariant::Cochord => "cochord",
        }
    }

    pub fn compute(self, g: &Graph) -> Result<Value> {
        match self {
            Invariant::Gamma => domination_number(g),
            Invariant::UpperGamma => upper_domination(g),
            Invariant::IndDom => independent_domination(g),
            Invariant::EdgeDom => edge_domination(g),
            Invariant::Tau => independence_domination(g),
            Invariant::GammaUs => unstable_domination(g),
            Invariant::Upsilon => upper_vertexwise(g),
            Invariant::BetaVw => upper_independent_vertexwise(g),
            Invariant::Epsilon => edgewise_domination(g),
            Invariant::Im => induced_matching(g),
            Invariant::Alpha => independence_number(g),
            Invariant::Cochord => cochordal_cover(g),
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Invariant> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown invariant `{s}`")))
    }
}

/// Requested invariants of one graph. Absent fields were not requested;
/// failures (unmet preconditions, exhausted budget) land in `errors`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<usize>,
    #[serde(rename = "Gamma", skip_serializing_if = "Option::is_none")]
    pub upper_gamma: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ind_dom: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_dom: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_us: Option<usize>,
    #[serde(rename = "Upsilon", skip_serializing_if = "Option::is_none")]
    pub upsilon: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_vw: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub im: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cochord: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_side: Option<usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<String, Witness>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub errors: BTreeMap<String, String>,
}

impl InvariantRecord {
    pub fn compute(g: &Graph, which: &[Invariant]) -> InvariantRecord {
        let mut r = InvariantRecord::default();
        for &inv in which {
            r.insert(inv, inv.compute(g));
        }
        r
    }

    /// Stores a value with its witness, or the error message.
    pub fn insert(&mut self, inv: Invariant, v: Result<Value>) {
        match v {
            Ok(v) => {
                *self.slot(inv) = Some(v.value);
                self.witnesses.insert(inv.name().into(), v.witness);
            }
            Err(e) => {
                self.errors.insert(inv.name().into(), e.to_string());
            }
        }
    }

    pub fn get(&self, inv: Invariant) -> Option<usize> {
        match inv {
            Invariant::Gamma => self.gamma,
            Invariant::UpperGamma => self.upper_gamma,
            Invariant::IndDom => self.ind_dom,
            Invariant::EdgeDom => self.edge_dom,
            Invariant::Tau => self.tau,
            Invariant::GammaUs => self.gamma_us,
            Invariant::Upsilon => self.upsilon,
            Invariant::BetaVw => self.beta_vw,
            Invariant::Epsilon => self.epsilon,
            Invariant::Im => self.im,
            Invariant::Alpha => self.alpha,
            Invariant::Cochord => self.cochord,
        }
    }

    fn slot(&mut self, inv: Invariant) -> &mut Option<usize> {
        match inv {
            Invariant::Gamma => &mut self.gamma,
            Invariant::UpperGamma => &mut self.upper_gamma,
            Invariant::IndDom => &mut self.ind_dom,
            Invariant::EdgeDom => &mut self.edge_dom,
            Invariant::Tau => &mut self.tau,
            Invariant::GammaUs => &mut self.gamma_us,
            Invariant::Upsilon => &mut self.upsilon,
            Invariant::BetaVw => &mut self.beta_vw,
            Invariant::Epsilon => &mut self.epsilon,
            Invariant::Im => &mut self.im,
            Invariant::Alpha => &mut self.alpha,
            Invariant::Cochord => &mut self.cochord,
        }
    }
}
