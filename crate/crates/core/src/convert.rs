//! Change of basis at a fixed weight by composing registered transition matrices.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::oracle;
use crate::polysym::{multiply_p_tensor, tensor_transition, Basis, PolyExpr};
use crate::sym::ClassicalBasis;
use crate::types::enumerate_types;

/// Where transition matrices come from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Tableau and tabloid rules, composed along a shortest path.
    #[default]
    Rules,
    /// Explicit monomial expansion.
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    Tensor(ClassicalBasis, ClassicalBasis),
    /// Non-pure family into `s⊗`, `p⊗` or `m⊗`.
    Rule(Basis, Basis),
    /// The inverse of a rule step.
    Unrule(Basis, Basis),
}

fn edges(from: Basis) -> Vec<(Basis, Step)> {
    let targets = [Basis::S, Basis::PT, Basis::M];
    match from {
        Basis::Tensor(f) => {
            let mut out: Vec<(Basis, Step)> = ClassicalBasis::ALL
                .iter()
                .filter(|&&g| g != f)
                .map(|&g| (Basis::Tensor(g), Step::Tensor(f, g)))
                .collect();
            if targets.contains(&from) {
                out.extend(Basis::NON_PURE.iter().map(|&b| (b, Step::Unrule(b, from))));
            }
            out
        }
        _ => targets.iter().map(|&t| (t, Step::Rule(from, t))).collect(),
    }
}

/// Shortest chain of registered matrices from one basis to another.
fn path(from: Basis, to: Basis) -> Result<Vec<Step>> {
    let mut prev: HashMap<Basis, (Basis, Step)> = HashMap::new();
    let mut queue = VecDeque::from([from]);
    while let Some(b) = queue.pop_front() {
        if b == to {
            let mut steps = Vec::new();
            let mut cur = to;
            while cur != from {
                let (p, s) = prev[&cur];
                steps.push(s);
                cur = p;
            }
            steps.reverse();
            return Ok(steps);
        }
        for (next, step) in edges(b) {
            if next != from && !prev.contains_key(&next) {
                prev.insert(next, (b, step));
                queue.push_back(next);
            }
        }
    }
    Err(Error::NoPath { from, to })
}

fn step_matrix(step: Step, n: usize) -> Result<PolyMatrix> {
    match step {
        Step::Tensor(f, g) => tensor_transition(f, g, n),
        Step::Rule(f, g) => oracle::rule_transition(f, g, n),
        Step::Unrule(f, g) => oracle::rule_transition(f, g, n)?.inverse(),
    }
}

/// `M(F, G)` at weight `n`.
pub fn transition(from: Basis, to: Basis, n: usize, engine: Engine) -> Result<PolyMatrix> {
    if engine == Engine::Oracle {
        return oracle::oracle_transition(from, to, n);
    }
    let mut acc = PolyMatrix::identity(n, enumerate_types(n));
    for step in path(from, to)? {
        acc = acc.then(&step_matrix(step, n)?)?;
    }
    Ok(acc)
}

/// Rewrites `expr`, homogeneous of weight `n`, in `target`.
pub fn convert(expr: &PolyExpr, target: Basis, n: usize) -> Result<PolyExpr> {
    expr.expect_weight(n)?;
    if expr.basis() == target {
        return Ok(expr.clone());
    }
    let m = transition(expr.basis(), target, n, Engine::Rules)?;
    let mut out = PolyExpr::zero(target);
    for (sigma, c) in expr.terms() {
        for (tau, v) in m.column(sigma).expect("type of weight n") {
            out.add_term(tau, v * c);
        }
    }
    Ok(out)
}

/// Product of homogeneous expressions, computed in `p⊗` and returned in `target`.
pub fn multiply(factors: &[PolyExpr], target: Basis) -> Result<PolyExpr> {
    let mut in_p = Vec::with_capacity(factors.len());
    for f in factors {
        if f.is_zero() {
            return Ok(PolyExpr::zero(target));
        }
        let n = f.weight().expect("nonzero expression");
        in_p.push(convert(f, Basis::PT, n)?);
    }
    let product = multiply_p_tensor(&in_p)?;
    match product.weight() {
        Some(n) => convert(&product, target, n),
        None => Ok(PolyExpr::zero(target)),
    }
}
