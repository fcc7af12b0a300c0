use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::budget::tick;
use crate::error::Result;
use crate::vset::VertexSet;

use super::Complex;

/// Pairs `(x_i, F_i)` with `F_i` a facet index, sorted by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flower {
    pub pairs: Vec<(usize, usize)>,
}

impl Flower {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.pairs.iter().map(|&(x, _)| x).collect()
    }

    /// Checks `m ≥ 3`, that the vertices span a face, and `x_i ∉ F_j ⇔ i = j`.
    pub fn verify(&self, d: &Complex) -> bool {
        let fs = d.facets();
        self.len() >= 3
            && d.contains(self.vertices())
            && self.pairs.iter().all(|&(_, j)| j < fs.len())
            && self.pairs.iter().all(|&(x, _)| {
                self.pairs
                    .iter()
                    .all(|&(y, j)| fs[j].contains(x) != (x == y))
            })
    }
}

struct Search {
    contains: Vec<FixedBitSet>,
    avoids: Vec<FixedBitSet>,
    best: Vec<usize>,
    best_cands: Vec<FixedBitSet>,
}

impl Search {
    /// `chosen` with its current private-facet candidates, `common` the
    /// facets containing all of `chosen`, `pool` the vertices still viable.
    fn grow(
        &mut self,
        chosen: &mut Vec<usize>,
        cands: &mut Vec<FixedBitSet>,
        common: &FixedBitSet,
        mut pool: Vec<usize>,
    ) -> Result<()> {
        tick()?;
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
            self.best_cands = cands.clone();
        }
        while let Some(&y) = pool.first() {
            if chosen.len() + pool.len() <= self.best.len() {
                return Ok(());
            }
            pool.remove(0);
            let mut next_common = common.clone();
            next_common.intersect_with(&self.contains[y]);
            let mut own = self.avoids[y].clone();
            own.intersect_with(common);
            let mut next_cands: Vec<FixedBitSet> = cands
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    c.intersect_with(&self.contains[y]);
                    c
                })
                .collect();
            next_cands.push(own);
            chosen.push(y);
            let next_pool: Vec<usize> = pool
                .iter()
                .copied()
                .filter(|&z| self.viable(z, &next_common, &next_cands))
                .collect();
            std::mem::swap(cands, &mut next_cands);
            self.grow(chosen, cands, &next_common, next_pool)?;
            std::mem::swap(cands, &mut next_cands);
            chosen.pop();
        }
        Ok(())
    }

    fn viable(&self, z: usize, common: &FixedBitSet, cands: &[FixedBitSet]) -> bool {
        !common.is_disjoint(&self.contains[z])
            && !common.is_disjoint(&self.avoids[z])
            && cands.iter().all(|c| !c.is_disjoint(&self.contains[z]))
    }
}

/// `ν(Δ)`: the largest flower, or 0 when there is none with `m ≥ 3`.
pub fn flower_number(d: &Complex) -> Result<(usize, Option<Flower>)> {
    let k = d.facets().len();
    let n = d.ground();
    let mut contains = vec![FixedBitSet::with_capacity(k); n];
    for (j, f) in d.facets().iter().enumerate() {
        for v in f.iter() {
            contains[v].insert(j);
        }
    }
    let avoids: Vec<FixedBitSet> = contains
        .iter()
        .map(|c| {
            let mut a = c.clone();
            a.toggle_range(..);
            a
        })
        .collect();
    let mut all = FixedBitSet::with_capacity(k);
    all.insert_range(..);
    let mut pool: Vec<usize> = (0..n)
        .filter(|&v| !contains[v].is_clear() && !avoids[v].is_clear())
        .collect();
    pool.sort_by_key(|&v| (avoids[v].count_ones(..), v));
    let mut s = Search {
        contains,
        avoids,
        best: vec![],
        best_cands: vec![],
    };
    s.grow(&mut vec![], &mut vec![], &all, pool)?;
    if s.best.len() < 3 {
        return Ok((0, None));
    }
    let mut pairs: Vec<(usize, usize)> = s
        .best
        .iter()
        .zip(&s.best_cands)
        .map(|(&x, c)| (x, c.minimum().expect("flower member keeps a facet")))
        .collect();
    pairs.sort();
    let flower = Flower { pairs };
    debug_assert!(flower.verify(d));
    Ok((flower.len(), Some(flower)))
}
