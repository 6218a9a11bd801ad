//! Expansions in the `s⊗` basis: ribbon and polyribbon insertions, one block
//! at a time, and the tableaux that record iterated insertions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::partition::{enumerate_partitions, Partition};
use crate::polysym::{Basis, PolyExpr};
use crate::rational::{neg_one_pow, Rational};
use crate::shapes::{add_polyribbons, add_polyribbons_within, add_ribbons};
use crate::types::{enumerate_types, Block, BlockSequence, SplitType};

/// Which insertion a block triggers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TableauFamily {
    #[serde(rename = "TRHT")]
    Trht,
    #[serde(rename = "TPRT")]
    Tprt,
    #[serde(rename = "dualTPRT")]
    DualTprt,
}

/// Sign convention for the square-free blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EVariant {
    Plus,
    Signed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepChoice {
    /// A single ribbon in tensor position `position`.
    Ribbon { position: usize, length: usize },
    /// One polyribbon per degree, sized by the associated partition.
    Polyribbon { associated: Partition },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableauStep {
    pub block: Block,
    pub choice: StepChoice,
    /// The type after this step.
    pub after: SplitType,
    /// Product of the ribbon signs added in this step.
    pub sign: i32,
}

/// A chain of types `σ = τ_0 ⊆ τ_1 ⊆ … ⊆ τ_s = τ`, one step per block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorTableau {
    pub family: TableauFamily,
    pub inner: SplitType,
    pub steps: Vec<TableauStep>,
}

impl TensorTableau {
    pub fn shape(&self) -> &SplitType {
        self.steps.last().map_or(&self.inner, |s| &s.after)
    }

    pub fn chain(&self) -> Vec<SplitType> {
        std::iter::once(self.inner.clone())
            .chain(self.steps.iter().map(|s| s.after.clone()))
            .collect()
    }

    /// Ribbon sign product; for the dual family this is `sgn⁺`.
    pub fn sign(&self) -> i32 {
        self.steps.iter().map(|s| s.sign).product()
    }

    /// `sgn⁻`: the sign with one extra `-1` per ribbon added.
    pub fn sign_minus(&self) -> i32 {
        let ribbons: usize = self
            .steps
            .iter()
            .map(|s| match &s.choice {
                StepChoice::Polyribbon { associated } => associated.len(),
                StepChoice::Ribbon { .. } => 1,
            })
            .sum();
        self.sign() * neg_one_pow(ribbons)
    }

    /// `∏ k` over ribbons placed in position `k`; 1 for polyribbon tableaux.
    pub fn weight(&self) -> BigInt {
        self.steps
            .iter()
            .map(|s| match s.choice {
                StepChoice::Ribbon { position, .. } => BigInt::from(position),
                StepChoice::Polyribbon { .. } => BigInt::one(),
            })
            .product()
    }

    /// Signed weight added to the coefficient of `s⊗_τ`.
    pub fn contribution(&self, variant: EVariant) -> Rational {
        let s = match (self.family, variant) {
            (TableauFamily::DualTprt, EVariant::Signed) => self.sign_minus(),
            _ => self.sign(),
        };
        Rational::from_integer(self.weight() * s)
    }

    /// Cell labels per degree, row by row: 0 for the inner type, `i` for step `i`.
    pub fn cells(&self) -> BTreeMap<usize, Vec<Vec<usize>>> {
        let chain = self.chain();
        let mut out = BTreeMap::new();
        for (d, outer) in self.shape().iter() {
            let rows = (0..outer.len())
                .map(|row| {
                    (0..outer.get(row))
                        .map(|col| {
                            chain
                                .iter()
                                .position(|t| t.restriction(d).get(row) > col)
                                .expect("cell lies in the final shape")
                        })
                        .collect()
                })
                .collect();
            out.insert(d, rows);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "family": self.family,
            "shape": self.shape(),
            "inner": self.inner,
            "steps": self.steps,
            "sign": self.sign(),
            "weight": self.weight().to_string(),
            "cells": self.cells(),
        });
        if self.family == TableauFamily::DualTprt {
            v["sign_minus"] = json!(self.sign_minus());
        }
        v
    }
}

fn divisors(d: usize) -> impl Iterator<Item = usize> {
    (1..=d).filter(move |k| d.is_multiple_of(*k))
}

fn family_of(basis: Basis) -> Result<TableauFamily> {
    match basis {
        Basis::P => Ok(TableauFamily::Trht),
        Basis::H => Ok(TableauFamily::Tprt),
        Basis::EPlus | Basis::E => Ok(TableauFamily::DualTprt),
        other => Err(Error::Unsupported(format!(
            "{other} has no block insertion rule; expected P, H, E+ or E"
        ))),
    }
}

/// Every type reachable from `cur` by inserting one block, optionally kept inside `bound`.
fn block_steps(
    cur: &SplitType,
    block: Block,
    family: TableauFamily,
    bound: Option<&SplitType>,
) -> Vec<(SplitType, StepChoice, i32)> {
    let mut out = Vec::new();
    let (d, r) = (block.degree, block.mult);
    if family == TableauFamily::Trht {
        for k in divisors(d) {
            let length = d * r / k;
            for step in add_ribbons(cur.restriction(k), length) {
                if bound.is_some_and(|b| !b.restriction(k).contains(&step.result)) {
                    continue;
                }
                out.push((
                    cur.with_restriction(k, step.result),
                    StepChoice::Ribbon {
                        position: k,
                        length,
                    },
                    step.sign,
                ));
            }
        }
        return out;
    }
    let dual = family == TableauFamily::DualTprt;
    for lambda in enumerate_partitions(d) {
        let mut partial = vec![(cur.clone(), 1)];
        for (k, count) in lambda.multiplicities() {
            let inner = cur.restriction(k);
            let options = match bound {
                Some(b) => add_polyribbons_within(inner, r, count, dual, b.restriction(k)),
                None => add_polyribbons(inner, r, count, dual),
            };
            partial = partial
                .iter()
                .flat_map(|(t, s)| {
                    options
                        .iter()
                        .map(move |(p, e)| (t.with_restriction(k, p.clone()), s * e))
                })
                .collect();
            if partial.is_empty() {
                break;
            }
        }
        for (t, s) in partial {
            out.push((
                t,
                StepChoice::Polyribbon {
                    associated: lambda.clone(),
                },
                s,
            ));
        }
    }
    out
}

/// Multiplies an `s⊗` expression by `F_{d^m}` for `F` in `P, H, E+, E`.
pub fn s_times_block(expr: &PolyExpr, basis: Basis, block: Block) -> Result<PolyExpr> {
    expr.expect_basis(Basis::S)?;
    let family = family_of(basis)?;
    let mut out = PolyExpr::zero(Basis::S);
    for (t, c) in expr.terms() {
        for (next, choice, s) in block_steps(t, block, family, None) {
            let mut v = c * Rational::from_integer(BigInt::from(s));
            if let StepChoice::Ribbon { position, .. } = choice {
                v *= Rational::from_integer(BigInt::from(position));
            }
            if basis == Basis::E {
                if let StepChoice::Polyribbon { associated } = &choice {
                    v *= Rational::from_integer(BigInt::from(neg_one_pow(associated.len())));
                }
            }
            out.add_term(next, v);
        }
    }
    Ok(out)
}

pub fn s_times_p_block(expr: &PolyExpr, d: usize, m: usize) -> Result<PolyExpr> {
    s_times_block(expr, Basis::P, Block::new(d, m)?)
}

pub fn s_times_h_block(expr: &PolyExpr, d: usize, r: usize) -> Result<PolyExpr> {
    s_times_block(expr, Basis::H, Block::new(d, r)?)
}

pub fn s_times_e_block(expr: &PolyExpr, d: usize, r: usize, variant: EVariant) -> Result<PolyExpr> {
    let basis = match variant {
        EVariant::Plus => Basis::EPlus,
        EVariant::Signed => Basis::E,
    };
    s_times_block(expr, basis, Block::new(d, r)?)
}

/// `s⊗_σ · F_δ`, inserting the blocks of `δ` left to right.
pub fn s_times_sequence(expr: &PolyExpr, basis: Basis, delta: &BlockSequence) -> Result<PolyExpr> {
    delta
        .blocks()
        .iter()
        .try_fold(expr.clone(), |acc, &b| s_times_block(&acc, basis, b))
}

/// `M(F, s⊗)` at weight `n`.
pub fn transition_to_s(basis: Basis, n: usize) -> Result<PolyMatrix> {
    family_of(basis)?;
    let labels = enumerate_types(n);
    let mut columns = Vec::with_capacity(labels.len());
    for sigma in &labels {
        let col = s_times_sequence(
            &PolyExpr::one(Basis::S),
            basis,
            &BlockSequence::new(sigma.blocks()),
        )?;
        columns.push(col.into_terms().into_iter().collect());
    }
    Ok(PolyMatrix::from_columns(n, labels, columns))
}

fn enumerate(
    family: TableauFamily,
    tau: &SplitType,
    sigma: &SplitType,
    delta: &BlockSequence,
) -> Vec<TensorTableau> {
    let mut out = Vec::new();
    if !tau.contains(sigma) || tau.weight() != sigma.weight() + delta.weight() {
        return out;
    }
    let mut steps = Vec::new();
    walk(
        family,
        tau,
        sigma,
        delta.blocks(),
        &mut steps,
        &mut out,
        sigma,
    );
    out
}

fn walk(
    family: TableauFamily,
    tau: &SplitType,
    cur: &SplitType,
    rest: &[Block],
    steps: &mut Vec<TableauStep>,
    out: &mut Vec<TensorTableau>,
    inner: &SplitType,
) {
    let Some((&block, tail)) = rest.split_first() else {
        if cur == tau {
            out.push(TensorTableau {
                family,
                inner: inner.clone(),
                steps: steps.clone(),
            });
        }
        return;
    };
    for (next, choice, sign) in block_steps(cur, block, family, Some(tau)) {
        steps.push(TableauStep {
            block,
            choice,
            after: next.clone(),
            sign,
        });
        walk(family, tau, &next, tail, steps, out, inner);
        steps.pop();
    }
}

/// All tensor rim hook tableaux of shape `τ/σ` and content `δ`.
pub fn enumerate_trht(
    tau: &SplitType,
    sigma: &SplitType,
    delta: &BlockSequence,
) -> Vec<TensorTableau> {
    enumerate(TableauFamily::Trht, tau, sigma, delta)
}

/// All tensor polyribbon tableaux of shape `τ/σ` and content `δ`, or their duals.
pub fn enumerate_tprt(
    tau: &SplitType,
    sigma: &SplitType,
    delta: &BlockSequence,
    dual: bool,
) -> Vec<TensorTableau> {
    let family = if dual {
        TableauFamily::DualTprt
    } else {
        TableauFamily::Tprt
    };
    enumerate(family, tau, sigma, delta)
}
