use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::Graph;

/// Named graph families.
///
/// Numbering:
/// - `complete n`, `edgeless n`: vertices `0..n`.
/// - `path n`: edges `i ~ i+1`.
/// - `cycle n`: the path plus `n-1 ~ 0`.
/// - `star n`: `K_{1,n}`, centre `0`, leaves `1..=n`.
/// - `complete-bipartite a b`: sides `0..a` and `a..a+b`.
/// - `whisker-complete n`: `K_n` on `0..n`, pendant `n+i` attached to `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Complete,
    Edgeless,
    Path,
    Cycle,
    Star,
    CompleteBipartite,
    WhiskerComplete,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Complete,
        Family::Edgeless,
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::CompleteBipartite,
        Family::WhiskerComplete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Edgeless => "edgeless",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::CompleteBipartite => "complete-bipartite",
            Family::WhiskerComplete => "whisker-complete",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

pub fn build_family(kind: Family, params: &[usize]) -> Result<Graph> {
    if params.len() != kind.arity() {
        return Err(Error::InvalidParameter(format!(
            "{kind} takes {} parameter(s), got {}",
            kind.arity(),
            params.len()
        )));
    }
    if let Some(&p) = params.iter().find(|&&p| p == 0) {
        return Err(Error::InvalidParameter(format!("{kind}: parameter {p} must be positive")));
    }
    let n = params[0];
    match kind {
        Family::Complete => {
            let mut g = Graph::edgeless(n)?;
            for u in 0..n {
                for v in u + 1..n {
                    g.link(u, v);
                }
            }
            Ok(g)
        }
        Family::Edgeless => Graph::edgeless(n),
        Family::Path => Graph::new(n, (1..n).map(|i| (i - 1, i))),
        Family::Cycle => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Star => Graph::new(n + 1, (1..=n).map(|i| (0, i))),
        Family::CompleteBipartite => {
            let (a, b) = (params[0], params[1]);
            let mut g = Graph::edgeless(a + b)?;
            for u in 0..a {
                for v in a..a + b {
                    g.link(u, v);
                }
            }
            Ok(g)
        }
        Family::WhiskerComplete => {
            let mut w = Graph::edgeless(2 * n)?;
            for u in 0..n {
                for v in u + 1..n {
                    w.link(u, v);
                }
                w.link(u, n + u);
            }
            Ok(w)
        }
    }
}

/// `r·G`: copy `c` occupies vertices `c*|G| .. (c+1)*|G|`.
pub fn disjoint_copies(g: &Graph, r: usize) -> Result<Graph> {
    let mut out = Graph::edgeless(0)?;
    for _ in 0..r {
        out = out.disjoint_union(g)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_cycle() {
        let p = build_family(Family::Path, &[4]).unwrap();
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        let c3 = build_family(Family::Cycle, &[3]).unwrap();
        assert_eq!(c3, build_family(Family::Complete, &[3]).unwrap());
        assert!(build_family(Family::Cycle, &[2]).is_err());
        assert!(build_family(Family::Path, &[0]).is_err());
    }

    #[test]
    fn whisker() {
        let w = build_family(Family::WhiskerComplete, &[3]).unwrap();
        assert_eq!(w.n(), 6);
        assert_eq!(
            w.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5)]
        );
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!(matches!("petersen".parse::<Family>(), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn copies() {
        let k2 = build_family(Family::Complete, &[2]).unwrap();
        let two = disjoint_copies(&k2, 2).unwrap();
        assert_eq!(two.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
    }
}
