//! Row-by-row brick fillings of a single partition diagram.
//!
//! A filling covers every cell with horizontal bricks. Bricks labeled 0 come
//! from a fixed multiset of lengths, at most one per row, and are never told
//! apart when their lengths agree. Every positive label has one length and a
//! fixed number of copies. Labels weakly increase along a row, or strictly
//! increase under [`LabelRule::Strict`].

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LabelRule {
    Weak,
    Strict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BrickKind {
    pub label: usize,
    pub length: usize,
    pub count: usize,
}

/// Everything available for one diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrickSet {
    pub zeros: Partition,
    /// Sorted by label, labels distinct and positive.
    pub kinds: Vec<BrickKind>,
}

impl BrickSet {
    pub fn new(zeros: Partition, mut kinds: Vec<BrickKind>) -> Self {
        kinds.retain(|k| k.count > 0);
        kinds.sort_by_key(|k| k.label);
        debug_assert!(kinds.windows(2).all(|w| w[0].label < w[1].label));
        BrickSet { zeros, kinds }
    }

    pub fn area(&self) -> usize {
        self.zeros.area() + self.kinds.iter().map(|k| k.length * k.count).sum::<usize>()
    }
}

/// One row, left to right, as `(label, length)` pairs.
pub type BrickRow = Vec<(usize, usize)>;

struct Filler<'a> {
    rows: &'a [usize],
    kinds: &'a [BrickKind],
    zero_lengths: Vec<usize>,
    rule: LabelRule,
    memo: HashMap<(usize, Vec<usize>), BigInt>,
}

impl<'a> Filler<'a> {
    fn new(shape: &'a Partition, set: &'a BrickSet, rule: LabelRule) -> Self {
        let mut zero_lengths: Vec<usize> =
            set.zeros.multiplicities().iter().map(|&(p, _)| p).collect();
        zero_lengths.sort_unstable();
        Filler {
            rows: shape.parts(),
            kinds: &set.kinds,
            zero_lengths,
            rule,
            memo: HashMap::new(),
        }
    }

    /// State layout: remaining count per kind, then per distinct zero length.
    fn initial(&self, set: &BrickSet) -> Vec<usize> {
        let mut st: Vec<usize> = self.kinds.iter().map(|k| k.count).collect();
        st.extend(self.zero_lengths.iter().map(|&z| set.zeros.multiplicity(z)));
        st
    }

    /// Every way to fill a row of `len` cells from `state`.
    fn row_options(&self, len: usize, state: &[usize]) -> Vec<(Vec<usize>, BrickRow)> {
        let nk = self.kinds.len();
        let mut out = Vec::new();
        let mut zero_choices: Vec<Option<usize>> = vec![None];
        for (j, &z) in self.zero_lengths.iter().enumerate() {
            if state[nk + j] > 0 && z <= len {
                zero_choices.push(Some(j));
            }
        }
        for zc in zero_choices {
            let mut st = state.to_vec();
            let mut row = Vec::new();
            let mut rest = len;
            if let Some(j) = zc {
                st[nk + j] -= 1;
                rest -= self.zero_lengths[j];
                row.push((0, self.zero_lengths[j]));
            }
            self.place(0, rest, &mut st, &mut row, &mut out);
        }
        out
    }

    fn place(
        &self,
        kind: usize,
        rest: usize,
        st: &mut Vec<usize>,
        row: &mut BrickRow,
        out: &mut Vec<(Vec<usize>, BrickRow)>,
    ) {
        if rest == 0 {
            out.push((st.clone(), row.clone()));
            return;
        }
        if kind == self.kinds.len() {
            return;
        }
        let k = self.kinds[kind];
        let cap = match self.rule {
            LabelRule::Weak => st[kind].min(rest / k.length),
            LabelRule::Strict => st[kind].min(rest / k.length).min(1),
        };
        for c in 0..=cap {
            st[kind] -= c;
            for _ in 0..c {
                row.push((k.label, k.length));
            }
            self.place(kind + 1, rest - c * k.length, st, row, out);
            row.truncate(row.len() - c);
            st[kind] += c;
        }
    }

    fn count(&mut self, r: usize, state: Vec<usize>) -> BigInt {
        if r == self.rows.len() {
            return if state.iter().all(|&c| c == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        let key = (r, state);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (next, _) in self.row_options(self.rows[r], &key.1) {
            total += self.count(r + 1, next);
        }
        self.memo.insert(key, total.clone());
        total
    }

    fn collect(
        &mut self,
        r: usize,
        state: Vec<usize>,
        acc: &mut Vec<BrickRow>,
        out: &mut Vec<Vec<BrickRow>>,
    ) {
        if r == self.rows.len() {
            if state.iter().all(|&c| c == 0) {
                out.push(acc.clone());
            }
            return;
        }
        for (next, row) in self.row_options(self.rows[r], &state) {
            if self.count(r + 1, next.clone()).is_zero() {
                continue;
            }
            acc.push(row);
            self.collect(r + 1, next, acc, out);
            acc.pop();
        }
    }
}

/// Number of fillings of `shape` using exactly the bricks in `set`.
pub fn count_fillings(shape: &Partition, set: &BrickSet, rule: LabelRule) -> BigInt {
    if shape.area() != set.area() {
        return BigInt::zero();
    }
    let mut f = Filler::new(shape, set, rule);
    let start = f.initial(set);
    f.count(0, start)
}

/// All fillings, rows top to bottom. Within a row, choices are listed with
/// fewer copies of lower labels first.
pub fn enumerate_fillings(
    shape: &Partition,
    set: &BrickSet,
    rule: LabelRule,
) -> Vec<Vec<BrickRow>> {
    if shape.area() != set.area() {
        return Vec::new();
    }
    let mut f = Filler::new(shape, set, rule);
    let start = f.initial(set);
    let mut out = Vec::new();
    f.collect(0, start, &mut Vec::new(), &mut out);
    out
}
