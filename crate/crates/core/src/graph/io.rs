//! graph6 and plain edge-list formats.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with 0-based `u < v`,
//! each line terminated by `\n`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vset::MAX_VERTICES;

use super::Graph;

const HEADER: &str = ">>graph6<<";

/// Decode one graph6 record (a trailing newline is tolerated).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("character {:?} out of range", b as char)));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty record".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("malformed header".into()));
            }
            (sextets_to_int(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("malformed header".into()));
            }
            (sextets_to_int(&rest[..3]), &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Graph6(format!(
            "truncated payload: {} of {need} bytes",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after payload",
            body.len() - need
        )));
    }
    let mut g = Graph::edgeless(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.link(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn sextets_to_int(s: &[u8]) -> usize {
    s.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize)
}

/// Encode as graph6, without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    writeln!(s, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let nums = parse_ints(header, 1)?;
    let [n, m] = nums[..] else {
        return Err(Error::Parse {
            line: 1,
            msg: format!("expected `n m`, got {header:?}"),
        });
    };
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (i, line) = lines.next().ok_or_else(|| Error::Parse {
            line: edges.len() + 2,
            msg: format!("expected {m} edge lines, found {}", edges.len()),
        })?;
        let nums = parse_ints(line, i + 1)?;
        let [u, v] = nums[..] else {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("expected `u v`, got {line:?}"),
            });
        };
        edges.push((u, v));
    }
    if let Some((i, extra)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(Error::Parse {
            line: i + 1,
            msg: format!("unexpected trailing line {extra:?}"),
        });
    }
    Graph::new(n, edges)
}

pub(crate) fn parse_ints(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|e| Error::Parse {
                line: lineno,
                msg: format!("{t:?}: {e}"),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, Family};
    use proptest::prelude::*;

    #[test]
    fn known_records() {
        assert_eq!(parse_graph6("A_").unwrap(), build_family(Family::Complete, &[2]).unwrap());
        assert_eq!(parse_graph6("B?").unwrap(), Graph::edgeless(3).unwrap());
        assert_eq!(parse_graph6("Bw\n").unwrap(), build_family(Family::Complete, &[3]).unwrap());
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap().edge_count(), 1);
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        // petgraph's fixture: edges 0-2, 0-4, 1-3, 3-4
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn malformed_records() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("C"), Err(Error::Graph6(m)) if m.contains("truncated")));
        assert!(matches!(parse_graph6("A_ "), Err(Error::Graph6(m)) if m.contains("range")));
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6(m)) if m.contains("header")));
        assert!(matches!(parse_graph6("A__"), Err(Error::Graph6(m)) if m.contains("trailing")));
    }

    #[test]
    fn edge_list_format() {
        let p = build_family(Family::Path, &[3]).unwrap();
        assert_eq!(to_edge_list(&p), "3 2\n0 1\n1 2\n");
        assert_eq!(parse_edge_list("3 2\n0 1\n1 2\n").unwrap(), p);
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_edge_list("3 1\n1 1\n"), Err(Error::Loop(1)));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=64).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut it = bits.into_iter();
                let mut edges = Vec::new();
                for j in 1..n {
                    for i in 0..j {
                        if it.next().unwrap() {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }

        #[test]
        fn edge_list_round_trip(g in arb_graph()) {
            prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        }
    }
}
