//! Expansions in the `p⊗` basis and the constant-row tableaux behind them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::partition::Partition;
use crate::polysym::{multiply_p_tensor, Basis, PolyExpr};
use crate::rational::{neg_one_pow, to_json_pair, Rational};
use crate::types::{enumerate_types, Block, BlockSequence, SplitType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RowFamily {
    #[serde(rename = "ICRPT")]
    Icrpt,
    #[serde(rename = "ICRHT")]
    Icrht,
}

/// What each block contributed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowChoices {
    /// One divisor `k_i | d_i` per block.
    Divisors(Vec<usize>),
    /// One type `ρ^(i)` of weight `d_i` per block.
    Types(Vec<SplitType>),
}

/// A tensor diagram whose rows are constant, labeled by the block that added them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantRowTableau {
    pub family: RowFamily,
    pub shape: SplitType,
    pub inner: SplitType,
    pub content: BlockSequence,
    pub choices: RowChoices,
}

impl ConstantRowTableau {
    /// Rows of every component as `(length, label)`, top to bottom; among rows
    /// of equal length, labels increase downwards.
    pub fn rows(&self) -> BTreeMap<usize, Vec<(usize, usize)>> {
        let mut out: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for (k, p) in self.inner.iter() {
            out.entry(k)
                .or_default()
                .extend(p.parts().iter().map(|&len| (len, 0)));
        }
        for (i, block) in self.content.blocks().iter().enumerate() {
            let label = i + 1;
            match &self.choices {
                RowChoices::Divisors(ks) => {
                    let k = ks[i];
                    out.entry(k).or_default().push((block.weight() / k, label));
                }
                RowChoices::Types(rhos) => {
                    for (k, p) in rhos[i].iter() {
                        let rows = out.entry(k).or_default();
                        rows.extend(p.parts().iter().map(|&len| (len * block.mult, label)));
                    }
                }
            }
        }
        for rows in out.values_mut() {
            rows.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        }
        out
    }

    /// `∏ k_i` for divisor choices, `∏ 1/z⊗_ρ` for type choices.
    pub fn weight(&self) -> Rational {
        match &self.choices {
            RowChoices::Divisors(ks) => {
                Rational::from_integer(ks.iter().map(|&k| BigInt::from(k)).product())
            }
            RowChoices::Types(rhos) => rhos
                .iter()
                .map(|r| Rational::new(BigInt::one(), r.z_tensor()))
                .product(),
        }
    }

    /// `∏ (-1)^{ℓ(ρ)} sgn(ρ)`; always 1 for divisor choices.
    pub fn sign_plus(&self) -> i32 {
        match &self.choices {
            RowChoices::Divisors(_) => 1,
            RowChoices::Types(rhos) => rhos
                .iter()
                .map(|r| neg_one_pow(r.len()) * r.sign())
                .product(),
        }
    }

    /// `(-1)` to the number of rows with a positive label; 1 for divisor choices.
    pub fn sign_minus(&self) -> i32 {
        match &self.choices {
            RowChoices::Divisors(_) => 1,
            RowChoices::Types(rhos) => rhos.iter().map(|r| neg_one_pow(r.len())).product(),
        }
    }

    /// Contribution to the coefficient of `p⊗_τ` in `p⊗_σ F_δ`.
    pub fn contribution(&self, basis: Basis) -> Rational {
        let s = match basis {
            Basis::EPlus => self.sign_plus(),
            Basis::E => self.sign_minus(),
            _ => 1,
        };
        self.weight() * Rational::from_integer(BigInt::from(s))
    }

    pub fn to_json(&self) -> Value {
        let (num, den) = to_json_pair(&self.weight());
        json!({
            "family": self.family,
            "shape": self.shape,
            "inner": self.inner,
            "content": self.content,
            "choices": self.choices,
            "rows": self.rows(),
            "weight": {"num": num, "den": den},
            "sign_plus": self.sign_plus(),
            "sign_minus": self.sign_minus(),
        })
    }
}

fn divisors(d: usize) -> impl Iterator<Item = usize> {
    (1..=d).filter(move |k| d.is_multiple_of(*k))
}

/// `F_{d^r}` written in `p⊗`.
pub fn block_in_p(basis: Basis, d: usize, r: usize) -> Result<PolyExpr> {
    let block = Block::new(d, r)?;
    let mut out = PolyExpr::zero(Basis::PT);
    if basis == Basis::P {
        for k in divisors(d) {
            let t = SplitType::single(k, Partition::from_unsorted(vec![block.weight() / k]));
            out.add_term(t, Rational::from_integer(BigInt::from(k)));
        }
        return Ok(out);
    }
    let signed = |rho: &SplitType| -> i32 {
        match basis {
            Basis::H => 1,
            Basis::EPlus => neg_one_pow(rho.len()) * rho.sign(),
            Basis::E => neg_one_pow(rho.len()),
            _ => unreachable!(),
        }
    };
    if !matches!(basis, Basis::H | Basis::EPlus | Basis::E) {
        return Err(Error::Unsupported(format!(
            "{basis} has no block expansion; expected P, H, E+ or E"
        )));
    }
    for rho in enumerate_types(d) {
        let c = Rational::new(BigInt::from(signed(&rho)), rho.z_tensor());
        out.add_term(rho.scale(r), c);
    }
    Ok(out)
}

/// `expr · F_{d^m}` for `expr` in `p⊗`.
pub fn p_times_block(expr: &PolyExpr, basis: Basis, block: Block) -> Result<PolyExpr> {
    expr.expect_basis(Basis::PT)?;
    multiply_p_tensor(&[expr.clone(), block_in_p(basis, block.degree, block.mult)?])
}

/// `expr · F_δ`, blocks taken left to right.
pub fn p_times_sequence(expr: &PolyExpr, basis: Basis, delta: &BlockSequence) -> Result<PolyExpr> {
    delta
        .blocks()
        .iter()
        .try_fold(expr.clone(), |acc, &b| p_times_block(&acc, basis, b))
}

/// `M(F, p⊗)` at weight `n`.
pub fn transition_to_p(basis: Basis, n: usize) -> Result<PolyMatrix> {
    if basis.is_pure() {
        return Err(Error::Unsupported(format!(
            "{basis} has no block expansion; expected P, H, E+ or E"
        )));
    }
    let labels = enumerate_types(n);
    let mut cache: BTreeMap<Block, PolyExpr> = BTreeMap::new();
    let mut columns = Vec::with_capacity(labels.len());
    for sigma in &labels {
        let mut factors = Vec::new();
        for b in sigma.blocks() {
            if let std::collections::btree_map::Entry::Vacant(e) = cache.entry(b) {
                e.insert(block_in_p(basis, b.degree, b.mult)?);
            }
            factors.push(cache[&b].clone());
        }
        columns.push(
            multiply_p_tensor(&factors)?
                .into_terms()
                .into_iter()
                .collect(),
        );
    }
    Ok(PolyMatrix::from_columns(n, labels, columns))
}

/// Rows of `τ` not yet accounted for, as a multiset of `(component, length)`.
struct Inventory(BTreeMap<(usize, usize), usize>);

impl Inventory {
    /// `τ` minus `σ` as row multisets, or `None` when `σ` has a row `τ` lacks.
    fn new(tau: &SplitType, sigma: &SplitType) -> Option<Self> {
        let mut m = BTreeMap::new();
        for (k, p) in tau.iter() {
            for &len in p.parts() {
                *m.entry((k, len)).or_insert(0) += 1;
            }
        }
        let mut inv = Inventory(m);
        for (k, p) in sigma.iter() {
            for &len in p.parts() {
                if !inv.take(k, len) {
                    return None;
                }
            }
        }
        Some(inv)
    }

    fn take(&mut self, k: usize, len: usize) -> bool {
        match self.0.get_mut(&(k, len)) {
            Some(c) if *c > 0 => {
                *c -= 1;
                true
            }
            _ => false,
        }
    }

    fn put(&mut self, k: usize, len: usize) {
        *self.0.entry((k, len)).or_insert(0) += 1;
    }

    fn take_type(&mut self, rho: &SplitType, m: usize) -> bool {
        let rows: Vec<(usize, usize)> = rho
            .iter()
            .flat_map(|(k, p)| p.parts().iter().map(move |&len| (k, len * m)))
            .collect();
        for (n, &(k, len)) in rows.iter().enumerate() {
            if !self.take(k, len) {
                for &(k2, len2) in &rows[..n] {
                    self.put(k2, len2);
                }
                return false;
            }
        }
        true
    }

    fn put_type(&mut self, rho: &SplitType, m: usize) {
        for (k, p) in rho.iter() {
            for &len in p.parts() {
                self.put(k, len * m);
            }
        }
    }

    fn is_exhausted(&self) -> bool {
        self.0.values().all(|&c| c == 0)
    }
}

/// All increasing constant-row P-tableaux of shape `τ` and extended content `(σ; δ)`,
/// listed by divisor tuple in lexicographic order.
pub fn enumerate_icrpt(
    tau: &SplitType,
    sigma: &SplitType,
    delta: &BlockSequence,
) -> Vec<ConstantRowTableau> {
    let mut out = Vec::new();
    let Some(mut inv) = Inventory::new(tau, sigma) else {
        return out;
    };
    let mut ks = Vec::new();
    divisor_walk(delta.blocks(), &mut inv, &mut ks, &mut |ks| {
        out.push(ConstantRowTableau {
            family: RowFamily::Icrpt,
            shape: tau.clone(),
            inner: sigma.clone(),
            content: delta.clone(),
            choices: RowChoices::Divisors(ks.to_vec()),
        })
    });
    out
}

fn divisor_walk(
    rest: &[Block],
    inv: &mut Inventory,
    ks: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let Some((&b, tail)) = rest.split_first() else {
        if inv.is_exhausted() {
            emit(ks);
        }
        return;
    };
    for k in divisors(b.degree) {
        let len = b.weight() / k;
        if inv.take(k, len) {
            ks.push(k);
            divisor_walk(tail, inv, ks, emit);
            ks.pop();
            inv.put(k, len);
        }
    }
}

/// All increasing constant-row H-tableaux of shape `τ` and extended content `(σ; δ)`,
/// listed by type tuple with each coordinate in canonical type order.
pub fn enumerate_icrht(
    tau: &SplitType,
    sigma: &SplitType,
    delta: &BlockSequence,
) -> Vec<ConstantRowTableau> {
    let mut out = Vec::new();
    let Some(mut inv) = Inventory::new(tau, sigma) else {
        return out;
    };
    let mut menus: BTreeMap<usize, Vec<SplitType>> = BTreeMap::new();
    for b in delta.blocks() {
        menus
            .entry(b.degree)
            .or_insert_with(|| enumerate_types(b.degree));
    }
    let mut rhos = Vec::new();
    type_walk(delta.blocks(), &menus, &mut inv, &mut rhos, &mut |rhos| {
        out.push(ConstantRowTableau {
            family: RowFamily::Icrht,
            shape: tau.clone(),
            inner: sigma.clone(),
            content: delta.clone(),
            choices: RowChoices::Types(rhos.to_vec()),
        })
    });
    out
}

fn type_walk(
    rest: &[Block],
    menus: &BTreeMap<usize, Vec<SplitType>>,
    inv: &mut Inventory,
    rhos: &mut Vec<SplitType>,
    emit: &mut dyn FnMut(&[SplitType]),
) {
    let Some((&b, tail)) = rest.split_first() else {
        if inv.is_exhausted() {
            emit(rhos);
        }
        return;
    };
    for rho in &menus[&b.degree] {
        if inv.take_type(rho, b.mult) {
            rhos.push(rho.clone());
            type_walk(tail, menus, inv, rhos, emit);
            rhos.pop();
            inv.put_type(rho, b.mult);
        }
    }
}

/// Sum of contributions, the coefficient of `p⊗_τ` in `p⊗_σ F_δ`.
pub fn tableau_coefficient(tableaux: &[ConstantRowTableau], basis: Basis) -> Rational {
    tableaux
        .iter()
        .fold(Rational::zero(), |acc, t| acc + t.contribution(basis))
}
