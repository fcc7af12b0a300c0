//! Exact hitting-set searches over small set families.
//!
//! Domination, vertex-wise domination, minimal non-faces and independence
//! complexes of clutters all reduce to transversals of a family of vertex
//! sets; this module holds the one search engine they share.

use crate::budget::tick;
use crate::error::Result;
use crate::vset::VertexSet;

/// A set family over `universe`, optionally restricted to transversals that
/// are independent in a graph given by adjacency rows.
#[derive(Clone, Copy)]
pub struct SetFamily<'a> {
    universe: VertexSet,
    sets: &'a [VertexSet],
    adjacency: Option<&'a [VertexSet]>,
}

impl<'a> SetFamily<'a> {
    pub fn new(universe: VertexSet, sets: &'a [VertexSet]) -> Self {
        SetFamily {
            universe,
            sets,
            adjacency: None,
        }
    }

    /// Only accept transversals that are independent in the given graph.
    pub fn independent_in(mut self, adjacency: &'a [VertexSet]) -> Self {
        self.adjacency = Some(adjacency);
        self
    }

    fn blocked_by(&self, v: usize) -> VertexSet {
        self.adjacency.map_or(VertexSet::EMPTY, |a| a[v])
    }

    fn feasible(&self) -> bool {
        self.sets.iter().all(|e| e.intersects(self.universe))
    }

    pub fn is_transversal(&self, s: VertexSet) -> bool {
        self.sets.iter().all(|e| e.intersects(s))
    }

    /// Every member of `s` has a private set: one it meets in exactly that member.
    pub fn has_private_sets(&self, s: VertexSet) -> bool {
        s.iter().all(|v| {
            self.sets
                .iter()
                .any(|e| (*e & s) == VertexSet::singleton(v))
        })
    }

    pub fn is_minimal_transversal(&self, s: VertexSet) -> bool {
        self.is_transversal(s) && self.has_private_sets(s)
    }

    /// For each member of a minimal transversal, the index of one private set.
    pub fn private_witnesses(&self, s: VertexSet) -> Option<Vec<(usize, usize)>> {
        s.iter()
            .map(|v| {
                self.sets
                    .iter()
                    .position(|e| (*e & s) == VertexSet::singleton(v))
                    .map(|i| (v, i))
            })
            .collect()
    }

    /// A minimum transversal, or `None` when none exists.
    pub fn minimum(&self) -> Result<Option<VertexSet>> {
        let mut best: Option<VertexSet> = None;
        self.min_rec(VertexSet::EMPTY, self.universe, &mut best)?;
        Ok(best)
    }

    fn min_rec(
        &self,
        chosen: VertexSet,
        avail: VertexSet,
        best: &mut Option<VertexSet>,
    ) -> Result<()> {
        tick()?;
        let mut pick: Option<VertexSet> = None;
        let mut disjoint_unhit = VertexSet::EMPTY;
        let mut packing = 0;
        for e in self.sets {
            if e.intersects(chosen) {
                continue;
            }
            let opts = *e & avail;
            if opts.is_empty() {
                return Ok(());
            }
            if pick.is_none_or(|p| opts.len() < p.len()) {
                pick = Some(opts);
            }
            if !opts.intersects(disjoint_unhit) {
                disjoint_unhit |= opts;
                packing += 1;
            }
        }
        let Some(opts) = pick else {
            if best.is_none_or(|b| chosen.len() < b.len()) {
                *best = Some(chosen);
            }
            return Ok(());
        };
        if best.is_some_and(|b| chosen.len() + packing >= b.len()) {
            return Ok(());
        }
        let mut avail = avail;
        for v in opts.iter() {
            self.min_rec(chosen.with(v), (avail - self.blocked_by(v)).without(v), best)?;
            avail.remove(v);
        }
        Ok(())
    }

    /// All minimal transversals, in the order found by include-first search
    /// over increasing vertex numbers.
    pub fn minimal_transversals(&self) -> Result<Vec<VertexSet>> {
        let mut out = Vec::new();
        if !self.feasible() {
            return Ok(out);
        }
        let order = self.universe.to_vec();
        self.enum_rec(&order, 0, VertexSet::EMPTY, VertexSet::EMPTY, &mut |s| {
            out.push(s);
            true
        })?;
        Ok(out)
    }

    /// A minimal transversal of maximum size, or `None` when none exists.
    pub fn maximum_minimal(&self) -> Result<Option<VertexSet>> {
        if !self.feasible() {
            return Ok(None);
        }
        let order = self.universe.to_vec();
        let mut best: Option<VertexSet> = None;
        self.max_rec(&order, 0, VertexSet::EMPTY, VertexSet::EMPTY, &mut best)?;
        Ok(best)
    }

    fn alive_after_exclude(&self, chosen: VertexSet, excluded: VertexSet, x: usize) -> bool {
        self.sets
            .iter()
            .filter(|e| e.contains(x))
            .all(|e| e.intersects(chosen) || !(*e - excluded).is_empty())
    }

    fn alive_after_include(&self, chosen: VertexSet) -> bool {
        self.has_private_sets(chosen)
    }

    fn enum_rec(
        &self,
        order: &[usize],
        i: usize,
        chosen: VertexSet,
        excluded: VertexSet,
        emit: &mut dyn FnMut(VertexSet) -> bool,
    ) -> Result<bool> {
        tick()?;
        if i == order.len() {
            debug_assert!(self.is_minimal_transversal(chosen));
            return Ok(emit(chosen));
        }
        let v = order[i];
        if !self.blocked_by(v).intersects(chosen) {
            let with = chosen.with(v);
            if self.alive_after_include(with)
                && !self.enum_rec(order, i + 1, with, excluded, emit)?
            {
                return Ok(false);
            }
        }
        let ex = excluded.with(v);
        if self.alive_after_exclude(chosen, ex, v) {
            return self.enum_rec(order, i + 1, chosen, ex, emit);
        }
        Ok(true)
    }

    fn max_rec(
        &self,
        order: &[usize],
        i: usize,
        chosen: VertexSet,
        excluded: VertexSet,
        best: &mut Option<VertexSet>,
    ) -> Result<()> {
        tick()?;
        if i == order.len() {
            if best.is_none_or(|b| chosen.len() > b.len()) {
                *best = Some(chosen);
            }
            return Ok(());
        }
        if let Some(b) = best {
            // undecided vertices that could still join with a private set
            let open = self
                .sets
                .iter()
                .filter(|e| !e.intersects(chosen))
                .fold(VertexSet::EMPTY, |acc, e| acc | *e);
            let undecided: VertexSet = order[i..].iter().copied().collect();
            if chosen.len() + (open & undecided).len() <= b.len() {
                return Ok(());
            }
        }
        let v = order[i];
        if !self.blocked_by(v).intersects(chosen) {
            let with = chosen.with(v);
            if self.alive_after_include(with) {
                self.max_rec(order, i + 1, with, excluded, best)?;
            }
        }
        let ex = excluded.with(v);
        if self.alive_after_exclude(chosen, ex, v) {
            self.max_rec(order, i + 1, chosen, ex, best)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(v: &[&[usize]]) -> Vec<VertexSet> {
        v.iter().map(|s| s.iter().collect()).collect()
    }

    /// Brute force over all subsets of the universe.
    fn brute(f: &SetFamily) -> Vec<VertexSet> {
        f.universe
            .subsets()
            .filter(|&s| {
                f.is_minimal_transversal(s)
                    && s.iter().all(|v| !f.blocked_by(v).intersects(s))
            })
            .collect()
    }

    #[test]
    fn agrees_with_brute_force() {
        let families = [
            sets(&[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]),
            sets(&[&[0, 1, 2], &[2, 3], &[4]]),
            sets(&[&[0, 1], &[2, 3], &[4, 5], &[0, 2, 4]]),
            sets(&[]),
        ];
        for fam in &families {
            let f = SetFamily::new(VertexSet::full(6), fam);
            let mut got = f.minimal_transversals().unwrap();
            let mut want = brute(&f);
            got.sort_by(VertexSet::cmp_canonical);
            want.sort_by(VertexSet::cmp_canonical);
            assert_eq!(got, want);
            let min = want.iter().map(|s| s.len()).min();
            let max = want.iter().map(|s| s.len()).max();
            assert_eq!(f.minimum().unwrap().map(|s| s.len()), min);
            assert_eq!(f.maximum_minimal().unwrap().map(|s| s.len()), max);
        }
    }

    #[test]
    fn independence_restriction() {
        // path 0-1-2-3, dominate with closed neighbourhoods
        let adj = sets(&[&[1], &[0, 2], &[1, 3], &[2]]);
        let closed = sets(&[&[0, 1], &[0, 1, 2], &[1, 2, 3], &[2, 3]]);
        let f = SetFamily::new(VertexSet::full(4), &closed).independent_in(&adj);
        let all = f.minimal_transversals().unwrap();
        assert!(all.iter().all(|s| s.iter().all(|v| !adj[v].intersects(*s))));
        assert_eq!(f.minimum().unwrap().unwrap().len(), 2);
    }

    #[test]
    fn no_transversal_when_set_is_outside_universe() {
        let fam = sets(&[&[7]]);
        let f = SetFamily::new(VertexSet::full(4), &fam);
        assert_eq!(f.minimum().unwrap(), None);
        assert!(f.minimal_transversals().unwrap().is_empty());
        assert_eq!(f.maximum_minimal().unwrap(), None);
    }
}
