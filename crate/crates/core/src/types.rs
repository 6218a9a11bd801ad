//! Blocks, splitting types and block sequences.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::neg_one_pow;

/// A pair `d^m`. Derived order compares degree first, then multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    pub degree: usize,
    pub mult: usize,
}

impl Block {
    pub fn new(degree: usize, mult: usize) -> Result<Self> {
        if degree == 0 || mult == 0 {
            return Err(Error::InvalidBlock { degree, mult });
        }
        Ok(Block { degree, mult })
    }

    pub fn weight(&self) -> usize {
        self.degree * self.mult
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.degree, self.mult)
    }
}

impl FromStr for Block {
    type Err = Error;

    /// `d^m`, or a bare `d` meaning `d^1`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            what: "block",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        let (d, m) = match t.split_once('^') {
            Some((d, m)) => (d.trim(), m.trim()),
            None => (t, "1"),
        };
        let d = d.parse::<usize>().map_err(|e| err(&e.to_string()))?;
        let m = m.parse::<usize>().map_err(|e| err(&e.to_string()))?;
        Block::new(d, m)
    }
}

/// A splitting type, stored as the map `d -> τ|_d` with empty restrictions dropped.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SplitType {
    parts: BTreeMap<usize, Partition>,
}

static EMPTY: Partition = Partition::EMPTY;

impl SplitType {
    pub fn empty() -> Self {
        SplitType::default()
    }

    pub fn from_map(map: BTreeMap<usize, Partition>) -> Self {
        SplitType {
            parts: map.into_iter().filter(|(_, p)| !p.is_empty()).collect(),
        }
    }

    /// The type with a single restriction `τ|_d = p`.
    pub fn single(d: usize, p: Partition) -> Self {
        let mut parts = BTreeMap::new();
        if !p.is_empty() {
            parts.insert(d, p);
        }
        SplitType { parts }
    }

    /// All classical partitions placed in degree 1.
    pub fn degree_one(p: Partition) -> Self {
        SplitType::single(1, p)
    }

    pub fn from_blocks<I: IntoIterator<Item = Block>>(blocks: I) -> Self {
        let mut raw: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for b in blocks {
            raw.entry(b.degree).or_default().push(b.mult);
        }
        SplitType {
            parts: raw
                .into_iter()
                .map(|(d, v)| (d, Partition::from_unsorted(v)))
                .collect(),
        }
    }

    /// `τ|_d`, empty when degree `d` does not occur.
    pub fn restriction(&self, d: usize) -> &Partition {
        self.parts.get(&d).unwrap_or(&EMPTY)
    }

    /// Degrees with a nonempty restriction, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Partition)> + '_ {
        self.parts.iter().map(|(d, p)| (*d, p))
    }

    pub fn max_degree(&self) -> usize {
        self.parts.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Blocks in weakly decreasing order.
    pub fn blocks(&self) -> Vec<Block> {
        self.parts
            .iter()
            .rev()
            .flat_map(|(&d, p)| p.parts().iter().map(move |&m| Block { degree: d, mult: m }))
            .collect()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|(d, p)| d * p.area()).sum()
    }

    /// Total number of blocks.
    pub fn len(&self) -> usize {
        self.parts.values().map(Partition::len).sum()
    }

    /// `(-1)^{Σ_d |τ|_d|}`
    pub fn sign(&self) -> i32 {
        neg_one_pow(self.parts.values().map(Partition::area).sum())
    }

    /// `∏_d z_{τ|_d}`
    pub fn z_tensor(&self) -> BigInt {
        self.parts
            .values()
            .fold(BigInt::from(1), |acc, p| acc * p.z())
    }

    pub fn union(&self, other: &SplitType) -> SplitType {
        let mut parts = self.parts.clone();
        for (d, p) in &other.parts {
            let merged = parts.get(d).map_or_else(|| p.clone(), |q| q.union(p));
            parts.insert(*d, merged);
        }
        SplitType { parts }
    }

    /// Every block multiplicity multiplied by `r`.
    pub fn scale(&self, r: usize) -> SplitType {
        assert!(r >= 1, "scale factor must be positive");
        SplitType {
            parts: self.parts.iter().map(|(d, p)| (*d, p.scale(r))).collect(),
        }
    }

    /// Replace `τ|_d`.
    pub fn with_restriction(&self, d: usize, p: Partition) -> SplitType {
        let mut parts = self.parts.clone();
        if p.is_empty() {
            parts.remove(&d);
        } else {
            parts.insert(d, p);
        }
        SplitType { parts }
    }

    /// Whether `σ|_d ⊆ τ|_d` as diagrams for every `d`.
    pub fn contains(&self, inner: &SplitType) -> bool {
        inner
            .parts
            .iter()
            .all(|(d, p)| self.restriction(*d).contains(p))
    }

    /// Labels in the bordered-matrix style, e.g. `2^{1}1^{2}` or `1^{31}`.
    pub fn latex_label(&self) -> String {
        if self.is_empty() {
            return "\\emptyset".to_string();
        }
        let mut out = String::new();
        for (d, p) in self.parts.iter().rev() {
            let sep = if p.parts().iter().any(|&m| m >= 10) {
                ","
            } else {
                ""
            };
            let body: Vec<String> = p.parts().iter().map(|m| m.to_string()).collect();
            out.push_str(&format!("{d}^{{{}}}", body.join(sep)));
        }
        out
    }

    pub fn stats(&self) -> TypeStats {
        TypeStats {
            weight: self.weight(),
            length: self.len(),
            sign: self.sign(),
            z_tensor: self.z_tensor(),
        }
    }
}

/// Compares restrictions degree by degree, `d = 1, 2, ...`, using the partition order.
impl Ord for SplitType {
    fn cmp(&self, other: &Self) -> Ordering {
        let top = self.max_degree().max(other.max_degree());
        for d in 1..=top {
            match self.restriction(d).cmp(other.restriction(d)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for SplitType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SplitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        for (i, (d, p)) in self.parts.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if p.len() == 1 {
                write!(f, "{d}^{}", p.get(0))?;
            } else {
                let body: Vec<String> = p.parts().iter().map(|m| m.to_string()).collect();
                write!(f, "{d}^{{{}}}", body.join(","))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SplitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SplitType({self})")
    }
}

impl FromStr for SplitType {
    type Err = Error;

    /// Grammar: one or more `d^m` or `d^{a,b,...}` groups, optional whitespace
    /// between them. Repeated degrees are merged. `∅` is the empty type.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            what: "type",
            input: s.to_string(),
            reason,
        };
        let text = s.trim();
        if text == "∅" || text == "()" {
            return Ok(SplitType::empty());
        }
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        let mut raw: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let read_int = |i: &mut usize| -> Option<usize> {
            let start = *i;
            while *i < chars.len() && chars[*i].is_ascii_digit() {
                *i += 1;
            }
            chars[start..*i].iter().collect::<String>().parse().ok()
        };
        let skip_ws = |i: &mut usize| {
            while *i < chars.len() && chars[*i].is_whitespace() {
                *i += 1;
            }
        };
        skip_ws(&mut i);
        if i == chars.len() {
            return Err(err("empty input".into()));
        }
        while i < chars.len() {
            let d = read_int(&mut i).ok_or_else(|| err(format!("expected degree at {i}")))?;
            if chars.get(i) != Some(&'^') {
                return Err(err(format!("expected '^' at {i}")));
            }
            i += 1;
            let mults = if chars.get(i) == Some(&'{') {
                i += 1;
                let mut v = Vec::new();
                loop {
                    skip_ws(&mut i);
                    let m = read_int(&mut i)
                        .ok_or_else(|| err(format!("expected multiplicity at {i}")))?;
                    v.push(m);
                    skip_ws(&mut i);
                    match chars.get(i) {
                        Some(',') => i += 1,
                        Some('}') => {
                            i += 1;
                            break;
                        }
                        _ => return Err(err(format!("expected ',' or '}}' at {i}"))),
                    }
                }
                if v.windows(2).any(|w| w[0] < w[1]) {
                    return Err(err("multiplicities must weakly decrease".into()));
                }
                v
            } else {
                vec![read_int(&mut i).ok_or_else(|| err(format!("expected multiplicity at {i}")))?]
            };
            for &m in &mults {
                Block::new(d, m)?;
            }
            raw.entry(d).or_default().extend(mults);
            skip_ws(&mut i);
        }
        Ok(SplitType {
            parts: raw
                .into_iter()
                .map(|(d, v)| (d, Partition::from_unsorted(v)))
                .collect(),
        })
    }
}

impl Serialize for SplitType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[usize; 2]> = self.blocks().iter().map(|b| [b.degree, b.mult]).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SplitType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[usize; 2]>::deserialize(d)?;
        let blocks = pairs
            .into_iter()
            .map(|[d, m]| Block::new(d, m))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(SplitType::from_blocks(blocks))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeStats {
    pub weight: usize,
    pub length: usize,
    pub sign: i32,
    pub z_tensor: BigInt,
}

/// Shorthand for literals; panics on invalid input.
pub fn ty(s: &str) -> SplitType {
    s.parse().expect("valid type literal")
}

pub fn type_union(a: &SplitType, b: &SplitType) -> SplitType {
    a.union(b)
}

pub fn type_scale(t: &SplitType, r: usize) -> SplitType {
    t.scale(r)
}

pub fn type_stats(t: &SplitType) -> TypeStats {
    t.stats()
}

/// All types of weight `n`, sorted in canonical order.
pub fn enumerate_types(n: usize) -> Vec<SplitType> {
    let mut out = Vec::new();
    types_from(n, 1, BTreeMap::new(), &mut out);
    out.sort();
    out
}

fn types_from(rest: usize, d: usize, acc: BTreeMap<usize, Partition>, out: &mut Vec<SplitType>) {
    if rest == 0 {
        out.push(SplitType { parts: acc });
        return;
    }
    if d > rest {
        return;
    }
    for area in (0..=rest / d).rev() {
        for p in enumerate_partitions(area) {
            let mut next = acc.clone();
            if !p.is_empty() {
                next.insert(d, p);
            }
            types_from(rest - d * area, d + 1, next, out);
        }
    }
}

/// An ordered list of blocks, repetitions allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BlockSequence(pub Vec<Block>);

impl BlockSequence {
    pub fn new(blocks: Vec<Block>) -> Self {
        BlockSequence(blocks)
    }

    pub fn blocks(&self) -> &[Block] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(Block::weight).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_type(&self) -> SplitType {
        SplitType::from_blocks(self.0.iter().copied())
    }
}

impl fmt::Display for BlockSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Block::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for BlockSequence {
    type Err = Error;

    /// Comma separated blocks such as `8^1,3^2,3^2`; parentheses optional.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() {
            return Ok(BlockSequence::default());
        }
        body.split(',')
            .map(str::parse::<Block>)
            .collect::<Result<Vec<_>>>()
            .map(BlockSequence)
    }
}

impl Serialize for Block {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.degree, self.mult].serialize(s)
    }
}

impl Serialize for BlockSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Shorthand for literals; panics on invalid input.
pub fn blocks(s: &str) -> BlockSequence {
    s.parse().expect("valid block sequence literal")
}
