//! Integer partitions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::factorial;

/// A weakly decreasing list of positive integers.
///
/// Ordering is the canonical one used throughout the crate: larger area first,
/// then reverse lexicographic order on the parts, so that `(4)` precedes
/// `(3,1)` precedes `(2,2)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub const EMPTY: Partition = Partition { parts: Vec::new() };

    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn area(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.get(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// `m_i`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Distinct parts with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = ∏ i^{m_i} m_i!`
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::from(1), |acc, (i, m)| {
                acc * BigInt::from(i).pow(m as u32) * factorial(m)
            })
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Every part multiplied by `r`.
    pub fn scale(&self, r: usize) -> Partition {
        Partition::from_unsorted(self.parts.iter().map(|p| p * r).collect())
    }

    /// Whether `dg(inner) ⊆ dg(self)`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Adds one part of size `p`.
    pub fn with_part(&self, p: usize) -> Partition {
        let mut parts = self.parts.clone();
        let at = parts.iter().position(|&q| q < p).unwrap_or(parts.len());
        parts.insert(at, p);
        Partition { parts }
    }

    /// Whether every part multiplicity of `self` is at least that of `other`.
    pub fn dominates_multiset(&self, other: &Partition) -> bool {
        other
            .multiplicities()
            .into_iter()
            .all(|(p, m)| self.multiplicity(p) >= m)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .area()
            .cmp(&self.area())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2,1`, `(3,2,1)`, `()` or `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() || body == "∅" {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse {
                what: "partition",
                input: s.to_string(),
                reason: e.to_string(),
            })?;
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for tests and literals; panics on invalid input.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}

/// All partitions of `n` in canonical order (reverse lexicographic).
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Partitions of `n` with every part at most `max_part` and at most `max_len` parts.
pub fn partitions_in_box(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|p| p.len() <= max_len && p.get(0) <= max_part)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// p(n) via the pentagonal number recurrence.
    fn partition_count(n: usize) -> u64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut total = 0i64;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > m {
                    break;
                }
                let s = if k % 2 == 1 { 1 } else { -1 };
                total += s * p[m - g1];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= m {
                    total += s * p[m - g2];
                }
            }
            p[m] = total;
        }
        p[n] as u64
    }

    #[test]
    fn empty_partition_of_zero() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn partitions_of_four_in_order() {
        let got = enumerate_partitions(4);
        let want = vec![
            part(&[4]),
            part(&[3, 1]),
            part(&[2, 2]),
            part(&[2, 1, 1]),
            part(&[1, 1, 1, 1]),
        ];
        assert_eq!(got, want);
        let mut sorted = got.clone();
        sorted.sort();
        assert_eq!(sorted, want);
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        assert_eq!(enumerate_partitions(10).len(), 42);
        for n in 0..=12 {
            let ps = enumerate_partitions(n);
            assert_eq!(ps.len() as u64, partition_count(n), "n = {n}");
            let set: std::collections::BTreeSet<_> = ps.iter().cloned().collect();
            assert_eq!(set.len(), ps.len());
            assert!(ps.iter().all(|p| p.area() == n));
        }
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("3,,1".parse::<Partition>().is_err());
    }

    #[test]
    fn statistics() {
        let p = part(&[4, 2, 2, 1]);
        assert_eq!(p.conjugate(), part(&[4, 3, 1, 1]));
        assert_eq!(p.conjugate().conjugate(), p);
        // z_(4,2,2,1) = 4 * 2^2 * 2! * 1
        assert_eq!(p.z(), BigInt::from(32));
        assert_eq!(p.union(&part(&[3, 2])), part(&[4, 3, 2, 2, 2, 1]));
        assert_eq!(part(&[2, 1]).scale(3), part(&[6, 3]));
        assert!(p.contains(&part(&[3, 2, 1])));
        assert!(!p.contains(&part(&[3, 3])));
        assert_eq!(part(&[3, 1]).with_part(2), part(&[3, 2, 1]));
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), part(&[3, 1]));
        assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
    }
}
