//! Ribbons, polyribbons and dual polyribbons on partition diagrams.
//!
//! Rows and columns are 1-based. Ribbon moves are computed on beta numbers:
//! adding a `k`-ribbon slides one bead `k` places up the abacus, and the
//! number of beads it jumps is the number of extra rows the ribbon spans.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::neg_one_pow;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.parts().to_vec(),
                inner: inner.parts().to_vec(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn area(&self) -> usize {
        self.outer.area() - self.inner.area()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Least row index holding a cell, if any.
    pub fn top_row(&self) -> Option<usize> {
        (0..self.outer.len())
            .find(|&i| self.outer.get(i) > self.inner.get(i))
            .map(|i| i + 1)
    }

    /// Least column index holding a cell, if any.
    pub fn left_col(&self) -> Option<usize> {
        (0..self.outer.len())
            .filter(|&i| self.outer.get(i) > self.inner.get(i))
            .map(|i| self.inner.get(i) + 1)
            .min()
    }
}

/// One ribbon added to (or removed from) a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RibbonStep {
    /// The larger of the two partitions.
    pub result: Partition,
    pub sign: i32,
    pub top_row: usize,
    pub bottom_row: usize,
    pub left_col: usize,
}

fn beads(p: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| p.get(i) + len - 1 - i).collect()
}

fn from_beads(mut b: Vec<usize>) -> Partition {
    b.sort_unstable_by(|x, y| y.cmp(x));
    let len = b.len();
    Partition::from_unsorted(b.iter().enumerate().map(|(i, v)| v + 1 + i - len).collect())
}

/// All `ν ⊇ μ` with `ν/μ` a `k`-ribbon, ordered by the row of the ribbon's tail.
pub fn add_ribbons(mu: &Partition, k: usize) -> Vec<RibbonStep> {
    assert!(k >= 1, "ribbon length must be positive");
    let len = mu.len() + k;
    let b = beads(mu, len);
    let occupied: BTreeSet<usize> = b.iter().copied().collect();
    let mut out = Vec::new();
    // bead i sits on row i+1 of the diagram; walk from the bottom row up
    for i in (0..len).rev() {
        let target = b[i] + k;
        if occupied.contains(&target) {
            continue;
        }
        let jumped = b[..i].iter().filter(|&&v| v > b[i] && v < target).count();
        let mut nb = b.clone();
        nb[i] = target;
        let result = from_beads(nb);
        out.push(RibbonStep {
            sign: neg_one_pow(jumped),
            top_row: i + 1 - jumped,
            bottom_row: i + 1,
            left_col: mu.get(i) + 1,
            result,
        });
    }
    out
}

/// Partitions `γ ⊆ λ` with `λ/γ` a `k`-ribbon; `result` holds `γ`.
pub fn remove_ribbons(lambda: &Partition, k: usize) -> Vec<RibbonStep> {
    assert!(k >= 1, "ribbon length must be positive");
    let len = lambda.len();
    let b = beads(lambda, len);
    let occupied: BTreeSet<usize> = b.iter().copied().collect();
    let mut out = Vec::new();
    for i in 0..len {
        if b[i] < k || occupied.contains(&(b[i] - k)) {
            continue;
        }
        let target = b[i] - k;
        let jumped = b[i + 1..]
            .iter()
            .filter(|&&v| v > target && v < b[i])
            .count();
        let mut nb = b.clone();
        nb[i] = target;
        let gamma = from_beads(nb);
        let bottom = i + jumped;
        out.push(RibbonStep {
            sign: neg_one_pow(jumped),
            top_row: i + 1,
            bottom_row: bottom + 1,
            left_col: gamma.get(bottom) + 1,
            result: gamma,
        });
    }
    out
}

/// A successful polyribbon decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub n: usize,
    pub sign: i32,
    /// `μ = γ_0 ⊆ γ_1 ⊆ … ⊆ γ_n = λ`.
    pub chain: Vec<Partition>,
}

fn decompose(shape: &SkewShape, r: usize, dual: bool) -> Option<Decomposition> {
    assert!(r >= 1, "ribbon length must be positive");
    if !shape.area().is_multiple_of(r) {
        return None;
    }
    let n = shape.area() / r;
    let mut chain = vec![shape.outer.clone()];
    let mut sign = 1;
    let mut cur = shape.outer.clone();
    for _ in 0..n {
        let skew = SkewShape {
            outer: cur.clone(),
            inner: shape.inner.clone(),
        };
        let step = if dual {
            let c = skew.left_col()?;
            remove_ribbons(&cur, r)
                .into_iter()
                .find(|s| s.left_col == c)?
        } else {
            let a = skew.top_row()?;
            remove_ribbons(&cur, r)
                .into_iter()
                .find(|s| s.top_row == a)?
        };
        if !step.result.contains(&shape.inner) {
            return None;
        }
        sign *= step.sign;
        cur = step.result;
        chain.push(cur.clone());
    }
    chain.reverse();
    Some(Decomposition { n, sign, chain })
}

/// Decomposes `λ/μ` into `r`-ribbons with weakly rising top rows.
/// Absent when the shape is not an `r^n`-polyribbon.
pub fn polyribbon_decompose(shape: &SkewShape, r: usize) -> Option<Decomposition> {
    decompose(shape, r, false)
}

/// Decomposes `λ/μ` into `r`-ribbons with weakly receding left columns.
pub fn dual_polyribbon_decompose(shape: &SkewShape, r: usize) -> Option<Decomposition> {
    decompose(shape, r, true)
}

/// All `λ` obtained by adding an `r^n`-polyribbon (or its dual) to `μ`, with signs.
/// Sorted by `λ` in canonical partition order.
pub fn add_polyribbons(mu: &Partition, r: usize, n: usize, dual: bool) -> Vec<(Partition, i32)> {
    let mut found = BTreeMap::new();
    grow(mu, r, n, dual, usize::MAX, 1, None, &mut found);
    found.into_iter().collect()
}

/// As [`add_polyribbons`], keeping only results inside `outer`.
pub fn add_polyribbons_within(
    mu: &Partition,
    r: usize,
    n: usize,
    dual: bool,
    outer: &Partition,
) -> Vec<(Partition, i32)> {
    let mut found = BTreeMap::new();
    if outer.contains(mu) {
        grow(mu, r, n, dual, usize::MAX, 1, Some(outer), &mut found);
    }
    found.into_iter().collect()
}

#[allow(clippy::too_many_arguments)]
fn grow(
    cur: &Partition,
    r: usize,
    left: usize,
    dual: bool,
    bound: usize,
    sign: i32,
    outer: Option<&Partition>,
    found: &mut BTreeMap<Partition, i32>,
) {
    if left == 0 {
        let prev = found.insert(cur.clone(), sign);
        debug_assert!(prev.is_none(), "polyribbon chains are unique");
        return;
    }
    for step in add_ribbons(cur, r) {
        if outer.is_some_and(|o| !o.contains(&step.result)) {
            continue;
        }
        let key = if dual { step.left_col } else { step.top_row };
        if key <= bound {
            grow(
                &step.result,
                r,
                left - 1,
                dual,
                key,
                sign * step.sign,
                outer,
                found,
            );
        }
    }
}
