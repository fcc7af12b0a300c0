use fixedbitset::FixedBitSet;

use crate::budget::tick;
use crate::error::Result;

struct Search {
    adj: Vec<FixedBitSet>,
    best: Vec<usize>,
}

impl Search {
    /// Greedy partition of `cand` into cliques; each clique holds at most
    /// one vertex of an independent set.
    fn clique_cover(&self, cand: &FixedBitSet) -> usize {
        let mut cliques: Vec<FixedBitSet> = Vec::new();
        for v in cand.ones() {
            match cliques.iter_mut().find(|c| c.is_subset(&self.adj[v])) {
                Some(c) => c.insert(v),
                None => {
                    let mut c = FixedBitSet::with_capacity(self.adj.len());
                    c.insert(v);
                    cliques.push(c);
                }
            }
        }
        cliques.len()
    }

    fn grow(&mut self, chosen: &mut Vec<usize>, mut cand: FixedBitSet) -> Result<()> {
        tick()?;
        // vertices of degree at most one in `cand` can always be taken
        let mut forced = Vec::new();
        loop {
            let low = cand
                .ones()
                .find(|&v| self.adj[v].intersection(&cand).take(2).count() <= 1);
            let Some(v) = low else { break };
            forced.push(v);
            cand.set(v, false);
            cand.difference_with(&self.adj[v]);
        }
        chosen.extend_from_slice(&forced);
        if cand.is_clear() {
            if chosen.len() > self.best.len() {
                self.best = chosen.clone();
            }
        } else if chosen.len() + self.clique_cover(&cand) > self.best.len() {
            let v = cand
                .ones()
                .max_by_key(|&u| self.adj[u].intersection(&cand).count())
                .expect("nonempty candidates");
            let mut with = cand.clone();
            with.set(v, false);
            with.difference_with(&self.adj[v]);
            chosen.push(v);
            self.grow(chosen, with)?;
            chosen.pop();
            cand.set(v, false);
            self.grow(chosen, cand)?;
        }
        chosen.truncate(chosen.len() - forced.len());
        Ok(())
    }
}

/// A maximum independent set of the graph with the given adjacency lists,
/// sorted. Not limited to 64 vertices.
pub fn maximum_independent_set(rows: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = rows.len();
    let adj: Vec<FixedBitSet> = rows
        .iter()
        .map(|r| {
            let mut b = FixedBitSet::with_capacity(n);
            for &u in r {
                b.insert(u);
            }
            b
        })
        .collect();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut s = Search { adj, best: vec![] };
    s.grow(&mut vec![], all)?;
    s.best.sort_unstable();
    Ok(s.best)
}
