//! Brute-force expansion into explicit monomials in the variables `x_{d,i}`.
//!
//! Everything here works straight from the defining sums, with no tableaux or
//! tabloids, so it serves as an independent check on the rule modules.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::matrix::PolyMatrix;
use crate::partition::Partition;
use crate::polysym::{Basis, PolyExpr};
use crate::rational::{int, Rational};
use crate::sym::ClassicalBasis;
use crate::types::{enumerate_types, Block, SplitType};
use crate::{monomial_rules, power_rules, schur_rules};

/// Sparse exponent vector: `(degree, index, exponent)` sorted by `(degree, index)`,
/// exponents positive.
pub type Monomial = Vec<(u16, u16, u16)>;

fn monomial_weight(m: &Monomial) -> usize {
    m.iter().map(|&(d, _, e)| d as usize * e as usize).sum()
}

fn monomial_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ka, kb) = ((a[i].0, a[i].1), (b[j].0, b[j].1));
        if ka < kb {
            out.push(a[i]);
            i += 1;
        } else if kb < ka {
            out.push(b[j]);
            j += 1;
        } else {
            out.push((a[i].0, a[i].1, a[i].2 + b[j].2));
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Per degree, exponents sorted decreasingly onto indices `1, 2, ...`.
fn canonical(m: &Monomial) -> Monomial {
    let mut by_degree: BTreeMap<u16, Vec<u16>> = BTreeMap::new();
    for &(d, _, e) in m {
        by_degree.entry(d).or_default().push(e);
    }
    let mut out = Vec::with_capacity(m.len());
    for (d, mut es) in by_degree {
        es.sort_unstable_by(|a, b| b.cmp(a));
        out.extend(
            es.into_iter()
                .enumerate()
                .map(|(i, e)| (d, i as u16 + 1, e)),
        );
    }
    out
}

/// Applies an index permutation to the variables of degree `d`.
fn permute(m: &Monomial, d: u16, f: impl Fn(u16) -> u16) -> Monomial {
    let mut out: Monomial = m
        .iter()
        .map(|&(k, i, e)| if k == d { (k, f(i), e) } else { (k, i, e) })
        .collect();
    out.sort_unstable();
    out
}

fn type_of(m: &Monomial) -> SplitType {
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(d, _, e) in m {
        by_degree.entry(d as usize).or_default().push(e as usize);
    }
    SplitType::from_map(
        by_degree
            .into_iter()
            .map(|(d, es)| (d, Partition::from_unsorted(es)))
            .collect(),
    )
}

fn leading_monomial(t: &SplitType) -> Monomial {
    t.iter()
        .flat_map(|(d, p)| {
            p.parts()
                .iter()
                .enumerate()
                .map(move |(i, &e)| (d as u16, i as u16 + 1, e as u16))
        })
        .collect()
}

/// Polynomial in `x_{d,i}` (`d ≤ cap`, `i ≤ width`) with every term of weight at most `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPoly {
    cap: usize,
    width: usize,
    terms: HashMap<Monomial, Rational>,
}

impl TruncatedPoly {
    pub fn new(cap: usize, width: usize) -> Result<Self> {
        if width < cap {
            return Err(Error::WidthTooSmall { width, cap });
        }
        Ok(TruncatedPoly {
            cap,
            width,
            terms: HashMap::new(),
        })
    }

    pub fn one(cap: usize, width: usize) -> Result<Self> {
        let mut p = Self::new(cap, width)?;
        p.add_term(Vec::new(), Rational::one());
        Ok(p)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical key order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort();
        v
    }

    /// Adds `c·m`; terms above the cap are dropped.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() || monomial_weight(&m) > self.cap {
            return;
        }
        debug_assert!(m
            .iter()
            .all(|&(d, i, e)| d >= 1 && i >= 1 && e >= 1 && i as usize <= self.width));
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn mul(&self, other: &TruncatedPoly) -> TruncatedPoly {
        assert_eq!(
            (self.cap, self.width),
            (other.cap, other.width),
            "incompatible truncations"
        );
        let mut out = TruncatedPoly {
            cap: self.cap,
            width: self.width,
            terms: HashMap::new(),
        };
        for (a, ca) in &self.terms {
            let wa = monomial_weight(a);
            for (b, cb) in &other.terms {
                if wa + monomial_weight(b) > self.cap {
                    continue;
                }
                *out.terms
                    .entry(monomial_mul(a, b))
                    .or_insert_with(Rational::zero) += ca * cb;
            }
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    /// Replaces every variable `x` by `x^m`.
    pub fn substitute_power(&self, m: usize) -> TruncatedPoly {
        let mut out = TruncatedPoly {
            cap: self.cap,
            width: self.width,
            terms: HashMap::new(),
        };
        for (mono, c) in &self.terms {
            let scaled: Monomial = mono.iter().map(|&(d, i, e)| (d, i, e * m as u16)).collect();
            out.add_term(scaled, c.clone());
        }
        out
    }
}

/// Classical `f_λ` in the variables `x_{d,1..width}`.
fn classical(
    basis: ClassicalBasis,
    lambda: &Partition,
    d: usize,
    cap: usize,
    width: usize,
) -> Result<TruncatedPoly> {
    let mut out = TruncatedPoly::new(cap, width)?;
    let exps: Vec<Vec<u16>> = match basis {
        ClassicalBasis::M => distinct_arrangements(lambda.parts(), width),
        ClassicalBasis::S => ssyt_contents(lambda.parts(), width),
        ClassicalBasis::H | ClassicalBasis::E | ClassicalBasis::P => {
            let mut acc = TruncatedPoly::one(cap, width)?;
            for &k in lambda.parts() {
                let mut factor = TruncatedPoly::new(cap, width)?;
                for e in single_part(basis, k, width) {
                    factor.add_term(dense_to_monomial(d, &e), Rational::one());
                }
                acc = acc.mul(&factor);
            }
            return Ok(acc);
        }
    };
    for e in exps {
        out.add_term(dense_to_monomial(d, &e), Rational::one());
    }
    Ok(out)
}

fn dense_to_monomial(d: usize, e: &[u16]) -> Monomial {
    e.iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, &x)| (d as u16, i as u16 + 1, x))
        .collect()
}

/// Exponent vectors of `h_k`, `e_k` or `p_k` in `width` variables.
fn single_part(basis: ClassicalBasis, k: usize, width: usize) -> Vec<Vec<u16>> {
    match basis {
        ClassicalBasis::P => (0..width)
            .map(|i| {
                let mut e = vec![0; width];
                e[i] = k as u16;
                e
            })
            .collect(),
        ClassicalBasis::H | ClassicalBasis::E => {
            let max = if basis == ClassicalBasis::E { 1 } else { k };
            let mut out = Vec::new();
            bounded_compositions(k, width, max, &mut vec![], &mut out);
            out
        }
        _ => unreachable!(),
    }
}

fn bounded_compositions(
    k: usize,
    slots: usize,
    max: usize,
    cur: &mut Vec<u16>,
    out: &mut Vec<Vec<u16>>,
) {
    if cur.len() == slots {
        if k == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for x in 0..=k.min(max) {
        cur.push(x as u16);
        bounded_compositions(k - x, slots, max, cur, out);
        cur.pop();
    }
}

fn distinct_arrangements(parts: &[usize], width: usize) -> Vec<Vec<u16>> {
    if parts.len() > width {
        return Vec::new();
    }
    let mut padded: Vec<u16> = parts.iter().map(|&p| p as u16).collect();
    padded.resize(width, 0);
    padded.sort_unstable();
    let mut out = vec![padded.clone()];
    // lexicographic next permutation visits each distinct arrangement once
    while let Some(i) = (1..padded.len()).rev().find(|&i| padded[i - 1] < padded[i]) {
        let j = (i..padded.len())
            .rev()
            .find(|&j| padded[j] > padded[i - 1])
            .unwrap();
        padded.swap(i - 1, j);
        padded[i..].reverse();
        out.push(padded.clone());
    }
    out
}

/// Contents of all semistandard tableaux of shape `parts` with entries in `1..=width`.
fn ssyt_contents(parts: &[usize], width: usize) -> Vec<Vec<u16>> {
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = parts.iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0u16; width];
    let mut out = Vec::new();
    fill_ssyt(&cells, 0, &mut grid, &mut content, width, &mut out);
    out
}

fn fill_ssyt(
    cells: &[(usize, usize)],
    at: usize,
    grid: &mut Vec<Vec<usize>>,
    content: &mut Vec<u16>,
    width: usize,
    out: &mut Vec<Vec<u16>>,
) {
    let Some(&(r, c)) = cells.get(at) else {
        out.push(content.clone());
        return;
    };
    let left = if c > 0 { grid[r][c - 1] } else { 1 };
    let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    for v in left.max(above)..=width {
        grid[r][c] = v;
        content[v - 1] += 1;
        fill_ssyt(cells, at + 1, grid, content, width, out);
        content[v - 1] -= 1;
    }
}

/// `H_d`, `E⁺_d`, `E_d` or `P_d` in every variable of degree at most `d`.
fn block_base(basis: Basis, d: usize, cap: usize, width: usize) -> Result<TruncatedPoly> {
    let mut out = TruncatedPoly::new(cap, width)?;
    match basis {
        Basis::P => {
            for k in (1..=d).filter(|k| d.is_multiple_of(*k)) {
                for i in 1..=width {
                    out.add_term(vec![(k as u16, i as u16, (d / k) as u16)], int(k as i64));
                }
            }
        }
        Basis::H | Basis::EPlus | Basis::E => {
            let vars: Vec<(u16, u16)> = (1..=d)
                .flat_map(|k| (1..=width).map(move |i| (k as u16, i as u16)))
                .collect();
            let square_free = basis != Basis::H;
            let mut found = Vec::new();
            weighted_multisets(&vars, 0, d, square_free, &mut Vec::new(), &mut found);
            for m in found {
                let c = if basis == Basis::E && m.len() % 2 == 1 {
                    -Rational::one()
                } else {
                    Rational::one()
                };
                out.add_term(m, c);
            }
        }
        Basis::Tensor(_) => unreachable!(),
    }
    Ok(out)
}

fn weighted_multisets(
    vars: &[(u16, u16)],
    from: usize,
    rest: usize,
    square_free: bool,
    cur: &mut Monomial,
    out: &mut Vec<Monomial>,
) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for v in from..vars.len() {
        let (d, i) = vars[v];
        let d = d as usize;
        if d > rest {
            break;
        }
        let max = if square_free { 1 } else { rest / d };
        for e in 1..=max {
            cur.push((d as u16, i, e as u16));
            weighted_multisets(vars, v + 1, rest - e * d, square_free, cur, out);
            cur.pop();
        }
    }
}

/// Expansion of `F_{d^m}` for a non-pure family.
pub fn generate_block(
    basis: Basis,
    block: Block,
    cap: usize,
    width: usize,
) -> Result<TruncatedPoly> {
    if basis.is_pure() {
        return Err(Error::Unsupported(format!(
            "{basis} is not built from blocks"
        )));
    }
    Ok(block_base(basis, block.degree, cap, width)?.substitute_power(block.mult))
}

/// Expansion of the basis element `F_τ`.
pub fn generate(basis: Basis, t: &SplitType, cap: usize, width: usize) -> Result<TruncatedPoly> {
    let mut cache = HashMap::new();
    generate_cached(basis, t, cap, width, &mut cache)
}

fn generate_cached(
    basis: Basis,
    t: &SplitType,
    cap: usize,
    width: usize,
    cache: &mut HashMap<(usize, usize), TruncatedPoly>,
) -> Result<TruncatedPoly> {
    let mut acc = TruncatedPoly::one(cap, width)?;
    match basis {
        Basis::Tensor(f) => {
            for (d, p) in t.iter() {
                acc = acc.mul(&classical(f, p, d, cap, width)?);
            }
        }
        _ => {
            for b in t.blocks() {
                let key = (b.degree, b.mult);
                if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(key) {
                    e.insert(generate_block(basis, b, cap, width)?);
                }
                acc = acc.mul(&cache[&key]);
            }
        }
    }
    Ok(acc)
}

/// Reads off the `m⊗` expansion of a polynomial homogeneous of weight `n`.
pub fn extract_m_tensor(poly: &TruncatedPoly, n: usize) -> Result<PolyExpr> {
    if poly.width < n {
        return Err(Error::WidthTooSmall {
            width: poly.width,
            cap: n,
        });
    }
    let mut out = PolyExpr::zero(Basis::M);
    for (m, c) in &poly.terms {
        if monomial_weight(m) != n {
            return Err(Error::NotHomogeneous { expected: n });
        }
        // a transposition and a full cycle generate each symmetric group
        let w = poly.width as u16;
        for d in m.iter().map(|v| v.0) {
            let swapped = permute(m, d, |i| match i {
                1 if w > 1 => 2,
                2 => 1,
                i => i,
            });
            let cycled = permute(m, d, |i| i % w + 1);
            if poly.coeff(&swapped) != *c || poly.coeff(&cycled) != *c {
                return Err(Error::Asymmetric);
            }
        }
        if canonical(m) == *m {
            out.add_term(type_of(m), c.clone());
        }
    }
    debug_assert!(out
        .terms()
        .keys()
        .all(|t| poly.coeff(&leading_monomial(t)) == out.coeff(t)));
    Ok(out)
}

/// Columns `F_σ` in `m⊗` for every `σ ⊩ n`, in canonical label order.
fn m_columns(basis: Basis, labels: &[SplitType], n: usize) -> Result<RatMatrix> {
    if basis == Basis::M {
        return Ok(RatMatrix::identity(labels.len()));
    }
    let mut cache = HashMap::new();
    let mut m = RatMatrix::zeros(labels.len(), labels.len());
    for (j, sigma) in labels.iter().enumerate() {
        let poly = generate_cached(basis, sigma, n, n, &mut cache)?;
        let expr = extract_m_tensor(&poly, n)?;
        for (i, tau) in labels.iter().enumerate() {
            m[(i, j)] = expr.coeff(tau);
        }
    }
    Ok(m)
}

/// `M(F, G)` at weight `n` from explicit monomial expansions.
pub fn oracle_transition(from: Basis, to: Basis, n: usize) -> Result<PolyMatrix> {
    let labels = enumerate_types(n);
    let a = m_columns(from, &labels, n)?;
    let entries = if to == Basis::M {
        a
    } else {
        m_columns(to, &labels, n)?.solve(&a)?
    };
    Ok(PolyMatrix::new(n, labels, entries))
}

/// Expands any expression into `m⊗` through monomials.
pub fn expand_in_m(expr: &PolyExpr) -> Result<PolyExpr> {
    let Some(n) = expr.weight() else {
        return Ok(PolyExpr::zero(Basis::M));
    };
    if !expr.is_homogeneous() {
        return Err(Error::NotHomogeneous { expected: n });
    }
    let mut total = TruncatedPoly::new(n, n)?;
    let mut cache = HashMap::new();
    for (t, c) in expr.terms() {
        let poly = generate_cached(expr.basis(), t, n, n, &mut cache)?;
        for (m, v) in poly.terms {
            total.add_term(m, v * c);
        }
    }
    extract_m_tensor(&total, n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub row: SplitType,
    pub column: SplitType,
    pub rules: String,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub from: Basis,
    pub to: Basis,
    pub mismatches: Vec<Mismatch>,
}

impl FamilyCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub weight: usize,
    pub families: Vec<FamilyCheck>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilyCheck::passed)
    }

    pub fn matching(&self) -> usize {
        self.families.iter().filter(|f| f.passed()).count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "weight": self.weight,
            "families": self.families,
            "matching": self.matching(),
            "total": self.families.len(),
            "passed": self.passed(),
        })
    }
}

impl fmt::Display for CrossCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "weight {}: {}/{} families match",
            self.weight,
            self.matching(),
            self.families.len()
        )?;
        for fam in &self.families {
            let status = if fam.passed() { "ok" } else { "MISMATCH" };
            writeln!(f, "  M({}, {}) {status}", fam.from, fam.to)?;
            for m in &fam.mismatches {
                writeln!(
                    f,
                    "    row {} column {}: rules {} oracle {}",
                    m.row, m.column, m.rules, m.oracle
                )?;
            }
        }
        Ok(())
    }
}

/// Compares every rule-based matrix into `s⊗`, `p⊗` and `m⊗` with the oracle at weight `n`.
pub fn cross_check(n: usize) -> Result<CrossCheckReport> {
    let targets = [Basis::S, Basis::PT, Basis::M];
    let mut families = Vec::new();
    for to in targets {
        for from in Basis::NON_PURE {
            let rules = rule_transition(from, to, n)?;
            let oracle = oracle_transition(from, to, n)?;
            families.push(FamilyCheck {
                from,
                to,
                mismatches: compare(&rules, &oracle),
            });
        }
    }
    Ok(CrossCheckReport {
        weight: n,
        families,
    })
}

/// The combinatorial matrix `M(F, G)` for `F` non-pure and `G ∈ {s⊗, p⊗, m⊗}`.
pub fn rule_transition(from: Basis, to: Basis, n: usize) -> Result<PolyMatrix> {
    match to {
        Basis::Tensor(ClassicalBasis::S) => schur_rules::transition_to_s(from, n),
        Basis::Tensor(ClassicalBasis::P) => power_rules::transition_to_p(from, n),
        Basis::Tensor(ClassicalBasis::M) => monomial_rules::transition_to_m(from, n),
        _ => Err(Error::Unsupported(format!(
            "no combinatorial rule expands into {to}"
        ))),
    }
}

fn compare(rules: &PolyMatrix, oracle: &PolyMatrix) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for col in oracle.labels() {
        for row in oracle.labels() {
            let a = rules.get(row, col).cloned().unwrap_or_else(Rational::zero);
            let b = oracle.get(row, col).cloned().unwrap_or_else(Rational::zero);
            if a != b {
                out.push(Mismatch {
                    row: row.clone(),
                    column: col.clone(),
                    rules: a.to_string(),
                    oracle: b.to_string(),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{blocks, ty};

    fn expr(text: &str) -> PolyExpr {
        text.parse().unwrap()
    }

    #[test]
    fn degree_one_generators() {
        let h = generate(Basis::H, &ty("1^1"), 1, 1).unwrap();
        assert_eq!(extract_m_tensor(&h, 1).unwrap(), expr("m[1^1]"));
        let e = generate(Basis::E, &ty("1^1"), 3, 3).unwrap();
        assert_eq!(e.len(), 3);
        assert!(e.sorted_terms().iter().all(|(_, c)| **c == int(-1)));
    }

    #[test]
    fn narrow_width_is_rejected() {
        assert_eq!(
            generate(Basis::H, &ty("1^2"), 2, 1),
            Err(Error::WidthTooSmall { width: 1, cap: 2 })
        );
    }

    #[test]
    fn monomial_round_trip() {
        for t in enumerate_types(4) {
            let poly = generate(Basis::M, &t, 4, 4).unwrap();
            assert_eq!(
                extract_m_tensor(&poly, 4).unwrap(),
                PolyExpr::basis_element(Basis::M, t)
            );
        }
    }

    #[test]
    fn p_block_is_divisor_sum() {
        let got = generate_block(Basis::P, Block { degree: 2, mult: 3 }, 6, 6).unwrap();
        let mut want = TruncatedPoly::new(6, 6).unwrap();
        for i in 1..=6u16 {
            want.add_term(vec![(1, i, 6)], int(1));
            want.add_term(vec![(2, i, 3)], int(2));
        }
        assert_eq!(got, want);
    }

    #[test]
    fn h4_in_h_tensor() {
        let h4 = expand_in_m(&expr("H[4^1]")).unwrap();
        let tensor = expand_in_m(&expr(
            "h[1^4] + h[2^{2}] + h[2^1 1^2] + h[3^1 1^1] + h[4^1]",
        ))
        .unwrap();
        assert_eq!(h4, tensor);
    }

    #[test]
    fn substitution_matches_power_map() {
        let cap = 6;
        let base = block_base(Basis::H, 2, cap, cap).unwrap();
        let direct = generate_block(Basis::H, Block { degree: 2, mult: 3 }, cap, cap).unwrap();
        assert_eq!(base.substitute_power(3), direct);
    }

    #[test]
    fn truncated_product_laws() {
        let a = generate_block(Basis::H, Block { degree: 1, mult: 1 }, 4, 4).unwrap();
        let b = generate_block(Basis::E, Block { degree: 2, mult: 1 }, 4, 4).unwrap();
        let c = generate_block(Basis::P, Block { degree: 1, mult: 2 }, 4, 4).unwrap();
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert!(a.mul(&b).mul(&c).mul(&a).is_empty());
    }

    #[test]
    fn asymmetric_input_is_detected() {
        let mut p = TruncatedPoly::new(2, 2).unwrap();
        p.add_term(vec![(1, 1, 2)], int(1));
        assert_eq!(extract_m_tensor(&p, 2), Err(Error::Asymmetric));
        p.add_term(vec![(1, 2, 2)], int(1));
        assert_eq!(extract_m_tensor(&p, 2).unwrap(), expr("m[1^2]"));
    }

    #[test]
    fn p_product_matches_brick_rule() {
        let a = generate(Basis::P, &ty("2^2"), 8, 8).unwrap();
        let prod = extract_m_tensor(&a.mul(&a), 8).unwrap();
        let rules =
            monomial_rules::m_times_p(&PolyExpr::one(Basis::M), &blocks("2^2, 2^2")).unwrap();
        assert_eq!(prod, rules);
    }

    #[test]
    fn power_sum_product_at_weight_twelve() {
        let factors = [expr("p[1^6] + 2 p[2^3]"), expr("p[1^6] + 3 p[3^2]")];
        let product = crate::polysym::multiply_p_tensor(&factors).unwrap();
        let direct = generate(Basis::P, &ty("2^3"), 12, 12)
            .unwrap()
            .mul(&generate(Basis::P, &ty("3^2"), 12, 12).unwrap());
        assert_eq!(
            expand_in_m(&product).unwrap(),
            extract_m_tensor(&direct, 12).unwrap()
        );
    }

    #[test]
    fn self_transition_is_identity() {
        for b in Basis::ALL {
            assert!(oracle_transition(b, b, 3).unwrap().is_identity(), "{b}");
        }
    }

    #[test]
    fn trivial_and_small_cross_checks() {
        assert!(cross_check(0).unwrap().passed());
        let r = cross_check(3).unwrap();
        assert_eq!(r.families.len(), 12);
        assert!(r.passed(), "{r}");
    }
}
