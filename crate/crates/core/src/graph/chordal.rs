use crate::vset::VertexSet;

use super::Graph;

/// A perfect elimination ordering if `g` is chordal.
///
/// Runs maximum cardinality search and verifies the reverse visit order with
/// the Tarjan–Yannakakis parent test.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (g.vertices() - visited)
            .iter()
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited.insert(v);
        visit.push(v);
        for u in (g.neighbors(v) - visited).iter() {
            weight[u] += 1;
        }
    }
    // Elimination order is the reverse of the visit order.
    let order: Vec<usize> = visit.into_iter().rev().collect();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&u| pos[u] > pos[v])
            .collect();
        if let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) {
            let rest: VertexSet = later.iter().filter(|&&u| u != parent).collect();
            if !rest.is_subset(g.neighbors(parent)) {
                return None;
            }
        }
    }
    Some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

pub fn is_cochordal(g: &Graph) -> bool {
    is_chordal(&g.complement())
}
