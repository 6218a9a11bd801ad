//! Expansions in the `m⊗` basis through brick fillings of tensor diagrams.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bricks::{count_fillings, enumerate_fillings, BrickKind, BrickRow, BrickSet, LabelRule};
use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::partition::{enumerate_partitions, Partition};
use crate::polysym::{Basis, PolyExpr};
use crate::rational::{neg_one_pow, Rational};
use crate::types::{enumerate_types, Block, BlockSequence, SplitType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BrickFamily {
    #[serde(rename = "PTBT")]
    Ptbt,
    #[serde(rename = "HTBT")]
    Htbt,
    #[serde(rename = "ETBT")]
    Etbt,
}

impl BrickFamily {
    fn of(basis: Basis) -> Result<Self> {
        match basis {
            Basis::P => Ok(BrickFamily::Ptbt),
            Basis::H => Ok(BrickFamily::Htbt),
            Basis::EPlus | Basis::E => Ok(BrickFamily::Etbt),
            other => Err(Error::Unsupported(format!(
                "{other} has no brick rule; expected P, H, E+ or E"
            ))),
        }
    }

    fn rule(self) -> LabelRule {
        match self {
            BrickFamily::Htbt => LabelRule::Weak,
            BrickFamily::Ptbt | BrickFamily::Etbt => LabelRule::Strict,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BrickChoices {
    /// Component `k_i` receiving the single brick labeled `i`.
    Divisors(Vec<usize>),
    /// `λ^(i) ⊢ d_i`; component `k` gets `m_k(λ^(i))` bricks labeled `i`.
    Partitions(Vec<Partition>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorBrickTabloid {
    pub family: BrickFamily,
    pub shape: SplitType,
    pub inner: SplitType,
    pub content: BlockSequence,
    pub choices: BrickChoices,
    /// Per component, rows top to bottom, each row a list of `(label, length)`.
    pub components: BTreeMap<usize, Vec<BrickRow>>,
}

impl TensorBrickTabloid {
    /// `∏ k` over positively labeled bricks in component `k` for PTBT; 1 otherwise.
    pub fn weight(&self) -> BigInt {
        match &self.choices {
            BrickChoices::Divisors(ks) => ks.iter().map(|&k| BigInt::from(k)).product(),
            BrickChoices::Partitions(_) => BigInt::one(),
        }
    }

    /// `(-1)` to the number of positively labeled bricks for ETBT; 1 otherwise.
    pub fn sign(&self) -> i32 {
        match (&self.choices, self.family) {
            (BrickChoices::Partitions(ls), BrickFamily::Etbt) => {
                neg_one_pow(ls.iter().map(Partition::len).sum())
            }
            _ => 1,
        }
    }

    pub fn contribution(&self, basis: Basis) -> Rational {
        let s = if basis == Basis::E { self.sign() } else { 1 };
        Rational::from_integer(self.weight() * s)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family,
            "shape": self.shape,
            "inner": self.inner,
            "content": self.content,
            "choices": self.choices,
            "components": self.components,
            "weight": self.weight().to_string(),
            "sign": self.sign(),
        })
    }
}

/// One assignment of positive bricks to components, before any placement.
struct Assignment {
    choices: BrickChoices,
    sets: BTreeMap<usize, BrickSet>,
}

fn divisors(d: usize) -> impl Iterator<Item = usize> {
    (1..=d).filter(move |k| d.is_multiple_of(*k))
}

/// Every way to distribute the bricks of `δ` over components so that each
/// component's area matches `τ`.
fn assignments(
    family: BrickFamily,
    tau: &SplitType,
    sigma: &SplitType,
    delta: &BlockSequence,
) -> Vec<Assignment> {
    let mut out = Vec::new();
    if tau.weight() != sigma.weight() + delta.weight() {
        return out;
    }
    // cells still free in each component
    let mut room: BTreeMap<usize, usize> = tau.iter().map(|(k, p)| (k, p.area())).collect();
    for (k, p) in sigma.iter() {
        match room.get_mut(&k) {
            Some(r) if *r >= p.area() => *r -= p.area(),
            _ => return out,
        }
    }
    let blocks = delta.blocks();
    match family {
        BrickFamily::Ptbt => {
            let mut ks = Vec::new();
            divisor_walk(blocks, &mut room, &mut ks, &mut |ks| {
                let mut kinds: BTreeMap<usize, Vec<BrickKind>> = BTreeMap::new();
                for (i, (&k, b)) in ks.iter().zip(blocks).enumerate() {
                    kinds.entry(k).or_default().push(BrickKind {
                        label: i + 1,
                        length: b.weight() / k,
                        count: 1,
                    });
                }
                out.push(Assignment {
                    choices: BrickChoices::Divisors(ks.to_vec()),
                    sets: brick_sets(tau, sigma, kinds),
                });
            });
        }
        BrickFamily::Htbt | BrickFamily::Etbt => {
            let mut menus: BTreeMap<usize, Vec<Partition>> = BTreeMap::new();
            for b in blocks {
                menus
                    .entry(b.degree)
                    .or_insert_with(|| enumerate_partitions(b.degree));
            }
            let mut ls = Vec::new();
            partition_walk(blocks, &menus, &mut room, &mut ls, &mut |ls| {
                let mut kinds: BTreeMap<usize, Vec<BrickKind>> = BTreeMap::new();
                for (i, (lambda, b)) in ls.iter().zip(blocks).enumerate() {
                    for (k, count) in lambda.multiplicities() {
                        kinds.entry(k).or_default().push(BrickKind {
                            label: i + 1,
                            length: b.mult,
                            count,
                        });
                    }
                }
                out.push(Assignment {
                    choices: BrickChoices::Partitions(ls.to_vec()),
                    sets: brick_sets(tau, sigma, kinds),
                });
            });
        }
    }
    out
}

fn brick_sets(
    tau: &SplitType,
    sigma: &SplitType,
    mut kinds: BTreeMap<usize, Vec<BrickKind>>,
) -> BTreeMap<usize, BrickSet> {
    tau.degrees()
        .map(|k| {
            (
                k,
                BrickSet::new(
                    sigma.restriction(k).clone(),
                    kinds.remove(&k).unwrap_or_default(),
                ),
            )
        })
        .collect()
}

fn divisor_walk(
    rest: &[Block],
    room: &mut BTreeMap<usize, usize>,
    ks: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let Some((b, tail)) = rest.split_first() else {
        if room.values().all(|&r| r == 0) {
            emit(ks);
        }
        return;
    };
    for k in divisors(b.degree) {
        let len = b.weight() / k;
        let Some(r) = room.get_mut(&k) else { continue };
        if *r < len {
            continue;
        }
        *r -= len;
        ks.push(k);
        divisor_walk(tail, room, ks, emit);
        ks.pop();
        *room.get_mut(&k).unwrap() += len;
    }
}

fn partition_walk(
    rest: &[Block],
    menus: &BTreeMap<usize, Vec<Partition>>,
    room: &mut BTreeMap<usize, usize>,
    ls: &mut Vec<Partition>,
    emit: &mut dyn FnMut(&[Partition]),
) {
    let Some((b, tail)) = rest.split_first() else {
        if room.values().all(|&r| r == 0) {
            emit(ls);
        }
        return;
    };
    'next: for lambda in &menus[&b.degree] {
        let needs = lambda.multiplicities();
        for &(k, count) in &needs {
            if room.get(&k).is_none_or(|&r| r < count * b.mult) {
                continue 'next;
            }
        }
        for &(k, count) in &needs {
            *room.get_mut(&k).unwrap() -= count * b.mult;
        }
        ls.push(lambda.clone());
        partition_walk(tail, menus, room, ls, emit);
        ls.pop();
        for &(k, count) in &needs {
            *room.get_mut(&k).unwrap() += count * b.mult;
        }
    }
}

fn enumerate(
    family: BrickFamily,
    tau: &SplitType,
    sigma: &SplitType,
    delta: &BlockSequence,
) -> Vec<TensorBrickTabloid> {
    let mut out = Vec::new();
    for a in assignments(family, tau, sigma, delta) {
        let per_component: Vec<(usize, Vec<Vec<BrickRow>>)> = a
            .sets
            .iter()
            .map(|(&k, set)| {
                (
                    k,
                    enumerate_fillings(tau.restriction(k), set, family.rule()),
                )
            })
            .collect();
        if per_component.iter().any(|(_, f)| f.is_empty()) {
            continue;
        }
        let mut combos: Vec<BTreeMap<usize, Vec<BrickRow>>> = vec![BTreeMap::new()];
        for (k, fillings) in &per_component {
            combos = combos
                .iter()
                .flat_map(|c| {
                    fillings.iter().map(move |f| {
                        let mut c = c.clone();
                        c.insert(*k, f.clone());
                        c
                    })
                })
                .collect();
        }
        for components in combos {
            out.push(TensorBrickTabloid {
                family,
                shape: tau.clone(),
                inner: sigma.clone(),
                content: delta.clone(),
                choices: a.choices.clone(),
                components,
            });
        }
    }
    out
}

/// All P-tensor brick tabloids of shape `τ` and extended content `(σ; δ)`.
pub fn enumerate_ptbt(
    tau: &SplitType,
    sigma: &SplitType,
    delta: &BlockSequence,
) -> Vec<TensorBrickTabloid> {
    enumerate(BrickFamily::Ptbt, tau, sigma, delta)
}

/// All H-tensor brick tabloids of shape `τ` and extended content `(σ; δ)`.
pub fn enumerate_htbt(
    tau: &SplitType,
    sigma: &SplitType,
    delta: &BlockSequence,
) -> Vec<TensorBrickTabloid> {
    enumerate(BrickFamily::Htbt, tau, sigma, delta)
}

/// All E-tensor brick tabloids of shape `τ` and extended content `(σ; δ)`.
pub fn enumerate_etbt(
    tau: &SplitType,
    sigma: &SplitType,
    delta: &BlockSequence,
) -> Vec<TensorBrickTabloid> {
    enumerate(BrickFamily::Etbt, tau, sigma, delta)
}

/// Coefficient of `m⊗_τ` in `m⊗_σ F_δ`, counted without listing the tabloids.
pub fn brick_coefficient(
    basis: Basis,
    tau: &SplitType,
    sigma: &SplitType,
    delta: &BlockSequence,
) -> Result<Rational> {
    let family = BrickFamily::of(basis)?;
    let mut total = BigInt::zero();
    for a in assignments(family, tau, sigma, delta) {
        let mut count = BigInt::one();
        for (&k, set) in &a.sets {
            count *= count_fillings(tau.restriction(k), set, family.rule());
            if count.is_zero() {
                break;
            }
        }
        let (weight, sign) = match &a.choices {
            BrickChoices::Divisors(ks) => (ks.iter().map(|&k| BigInt::from(k)).product(), 1),
            BrickChoices::Partitions(ls) if basis == Basis::E => (
                BigInt::one(),
                neg_one_pow(ls.iter().map(Partition::len).sum()),
            ),
            BrickChoices::Partitions(_) => (BigInt::one(), 1),
        };
        total += count * weight * sign;
    }
    Ok(Rational::from_integer(total))
}

/// `expr · F_δ` for `expr` in `m⊗`.
pub fn m_times_sequence(expr: &PolyExpr, basis: Basis, delta: &BlockSequence) -> Result<PolyExpr> {
    expr.expect_basis(Basis::M)?;
    BrickFamily::of(basis)?;
    let mut targets: BTreeMap<usize, Vec<SplitType>> = BTreeMap::new();
    let mut out = PolyExpr::zero(Basis::M);
    for (sigma, c) in expr.terms() {
        let n = sigma.weight() + delta.weight();
        let taus = targets.entry(n).or_insert_with(|| enumerate_types(n));
        for tau in taus.iter() {
            out.add_term(
                tau.clone(),
                brick_coefficient(basis, tau, sigma, delta)? * c,
            );
        }
    }
    Ok(out)
}

/// `expr · P_δ` for `expr` in `m⊗`.
pub fn m_times_p(expr: &PolyExpr, delta: &BlockSequence) -> Result<PolyExpr> {
    m_times_sequence(expr, Basis::P, delta)
}

/// `M(F, m⊗)` at weight `n`.
pub fn transition_to_m(basis: Basis, n: usize) -> Result<PolyMatrix> {
    BrickFamily::of(basis)?;
    let labels = enumerate_types(n);
    let empty = SplitType::empty();
    let mut columns = Vec::with_capacity(labels.len());
    for sigma in &labels {
        let delta = BlockSequence::new(sigma.blocks());
        let mut col = Vec::new();
        for tau in &labels {
            col.push((tau.clone(), brick_coefficient(basis, tau, &empty, &delta)?));
        }
        columns.push(col);
    }
    Ok(PolyMatrix::from_columns(n, labels, columns))
}
