//! Vertex subsets of a ground set `0..n` with `n <= 64`, packed into one word.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

use serde::{Deserialize, Serialize};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", from = "Vec<usize>")]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: VertexSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Order by cardinality, then lexicographically on the sorted element lists.
    pub fn cmp_canonical(&self, other: &VertexSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }

    /// Relabel through `map`: element `v` becomes `map[v]`.
    pub fn map(self, map: &[usize]) -> VertexSet {
        self.iter().map(|v| map[v]).collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.to_vec()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(VertexSet(cur))
    }
}

/// All `k`-subsets of `{0, .., n-1}` in increasing bit order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit: u128 = 1u128 << n;
    let mut cur: Option<u128> = if k > n {
        None
    } else {
        Some((1u128 << k) - 1)
    };
    std::iter::from_fn(move || {
        let c = cur?;
        if c >= limit {
            cur = None;
            return None;
        }
        cur = if c == 0 {
            None
        } else {
            let lowest = c & c.wrapping_neg();
            let ripple = c + lowest;
            Some((((ripple ^ c) >> 2) / lowest) | ripple)
        };
        Some(VertexSet(c as u64))
    })
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(5, 2).count(), 10);
        assert_eq!(k_subsets(5, 0).count(), 1);
        assert_eq!(k_subsets(5, 5).count(), 1);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert_eq!(k_subsets(0, 0).count(), 1);
        assert!(k_subsets(6, 3).all(|s| s.len() == 3 && s.is_subset(VertexSet::full(6))));
    }

    #[test]
    fn subsets_of_mask() {
        let s: VertexSet = [1, 4, 6].into_iter().collect();
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|t| t.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn canonical_order() {
        let a: VertexSet = [0, 3].into_iter().collect();
        let b: VertexSet = [1, 2].into_iter().collect();
        let c: VertexSet = [5].into_iter().collect();
        assert_eq!(c.cmp_canonical(&a), Ordering::Less);
        assert_eq!(a.cmp_canonical(&b), Ordering::Less);
    }
}
