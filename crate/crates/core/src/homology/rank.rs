//! Ranks of sparse boundary matrices over GF(2) and over the rationals.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

use crate::budget::tick;
use crate::error::Result;

/// A sparse vector: strictly increasing indices with nonzero entries.
pub(crate) type SparseCol = Vec<(u32, i8)>;

/// Rank over GF(2) by column reduction on the largest nonzero index.
pub(crate) fn rank_gf2(cols: &[SparseCol]) -> Result<usize> {
    let mut pivots: HashMap<u32, Vec<u32>> = HashMap::new();
    for col in cols {
        let mut c: Vec<u32> = col
            .iter()
            .filter(|(_, x)| x % 2 != 0)
            .map(|&(i, _)| i)
            .collect();
        while let Some(&low) = c.last() {
            tick()?;
            match pivots.get(&low) {
                Some(p) => c = xor_sorted(&c, p),
                None => {
                    pivots.insert(low, c);
                    break;
                }
            }
        }
    }
    Ok(pivots.len())
}

fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Rank over the rationals by fraction-free elimination: machine integers
/// first, arbitrary precision if any intermediate overflows.
pub(crate) fn rank_rational(cols: &[SparseCol]) -> Result<usize> {
    if let Some(r) = rank_exact::<i64>(cols)? {
        return Ok(r);
    }
    Ok(rank_exact::<BigInt>(cols)?.expect("big integers do not overflow"))
}

/// `Ok(None)` when `T` overflowed.
fn rank_exact<T>(cols: &[SparseCol]) -> Result<Option<usize>>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub + From<i8>,
{
    let mut pivots: HashMap<u32, Vec<(u32, T)>> = HashMap::new();
    for col in cols {
        let mut c: Vec<(u32, T)> = col
            .iter()
            .filter(|(_, x)| *x != 0)
            .map(|&(i, x)| (i, T::from(x)))
            .collect();
        while let Some((low, _)) = c.last() {
            tick()?;
            match pivots.get(low) {
                Some(p) => match eliminate(&c, p) {
                    Some(next) => c = next,
                    None => return Ok(None),
                },
                None => {
                    pivots.insert(*low, c);
                    break;
                }
            }
        }
    }
    Ok(Some(pivots.len()))
}

/// `a·c − b·p` with `a`, `b` the trailing entries of `p` and `c`, which
/// cancels the trailing entry; the result is divided by its content.
fn eliminate<T>(c: &[(u32, T)], p: &[(u32, T)]) -> Option<Vec<(u32, T)>>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let a = p.last()?.1.clone();
    let b = c.last()?.1.clone();
    let g = a.gcd(&b);
    let (a, b) = (a.div_floor(&g), b.div_floor(&g));
    let mut out: Vec<(u32, T)> = Vec::with_capacity(c.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < c.len() || j < p.len() {
        let (idx, x) = if j == p.len() || (i < c.len() && c[i].0 < p[j].0) {
            let v = a.checked_mul(&c[i].1)?;
            i += 1;
            (c[i - 1].0, v)
        } else if i == c.len() || p[j].0 < c[i].0 {
            let v = T::zero().checked_sub(&b.checked_mul(&p[j].1)?)?;
            j += 1;
            (p[j - 1].0, v)
        } else {
            let v = a.checked_mul(&c[i].1)?.checked_sub(&b.checked_mul(&p[j].1)?)?;
            i += 1;
            j += 1;
            (c[i - 1].0, v)
        };
        if !x.is_zero() {
            out.push((idx, x));
        }
    }
    let content = out
        .iter()
        .fold(T::zero(), |acc, (_, x)| acc.gcd(x));
    if !content.is_zero() && !content.is_one() {
        for (_, x) in &mut out {
            *x = x.div_floor(&content);
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cols(m: &[&[i8]]) -> Vec<SparseCol> {
        m.iter()
            .map(|c| {
                c.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(i, &x)| (i as u32, x))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_ranks() {
        let m = cols(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(rank_gf2(&m).unwrap(), 2);
        assert_eq!(rank_rational(&m).unwrap(), 3);
        let m = cols(&[&[2, 0], &[0, 3]]);
        assert_eq!(rank_gf2(&m).unwrap(), 1);
        assert_eq!(rank_rational(&m).unwrap(), 2);
        assert_eq!(rank_gf2(&[]).unwrap(), 0);
        let m = cols(&[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]]);
        assert_eq!(rank_rational(&m).unwrap(), 2);
    }

    #[test]
    fn big_integer_fallback_agrees() {
        // a dense matrix with growing entries exercises content division
        let n = 12;
        let m: Vec<SparseCol> = (0..n)
            .map(|c| {
                (0..n)
                    .map(|r| (r as u32, (((r * 7 + c * 13) % 5) as i8) - 2))
                    .filter(|&(_, x)| x != 0)
                    .collect()
            })
            .collect();
        let small = rank_exact::<i64>(&m).unwrap();
        let big = rank_exact::<BigInt>(&m).unwrap().unwrap();
        if let Some(s) = small {
            assert_eq!(s, big);
        }
        assert_eq!(rank_rational(&m).unwrap(), big);
    }
}
