//! The classical ring of symmetric functions in the bases m, h, e, p, s.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bricks::{count_fillings, BrickKind, BrickSet, LabelRule};
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::matrix::ClassicalMatrix;
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::{
    from_json_pair, neg_one_pow, sign, to_json_pair, to_plain, JsonInt, Rational,
};
use crate::shapes::add_ribbons;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassicalBasis {
    M,
    H,
    E,
    P,
    S,
}

impl ClassicalBasis {
    pub const ALL: [ClassicalBasis; 5] = [
        ClassicalBasis::M,
        ClassicalBasis::H,
        ClassicalBasis::E,
        ClassicalBasis::P,
        ClassicalBasis::S,
    ];

    pub fn letter(self) -> &'static str {
        match self {
            ClassicalBasis::M => "m",
            ClassicalBasis::H => "h",
            ClassicalBasis::E => "e",
            ClassicalBasis::P => "p",
            ClassicalBasis::S => "s",
        }
    }
}

impl fmt::Display for ClassicalBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl FromStr for ClassicalBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "m" => Ok(ClassicalBasis::M),
            "h" => Ok(ClassicalBasis::H),
            "e" => Ok(ClassicalBasis::E),
            "p" => Ok(ClassicalBasis::P),
            "s" => Ok(ClassicalBasis::S),
            other => Err(Error::Parse {
                what: "classical basis",
                input: other.to_string(),
                reason: "expected one of m, h, e, p, s".into(),
            }),
        }
    }
}

/// A finite linear combination of one classical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymExpr {
    basis: ClassicalBasis,
    terms: BTreeMap<Partition, Rational>,
}

impl SymExpr {
    pub fn zero(basis: ClassicalBasis) -> Self {
        SymExpr {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: ClassicalBasis, p: Partition) -> Self {
        let mut e = Self::zero(basis);
        e.add_term(p, Rational::one());
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Rational)>>(
        basis: ClassicalBasis,
        terms: I,
    ) -> Self {
        let mut e = Self::zero(basis);
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    pub fn basis(&self) -> ClassicalBasis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn coeff(&self, p: &Partition) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The common degree of all terms, or `None` for mixed or zero expressions.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Partition::area);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(
            self.basis,
            self.terms.iter().map(|(p, v)| (p.clone(), v * c)),
        )
    }

    pub fn add(&self, other: &SymExpr) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::Unsupported(format!(
                "cannot add {} and {} expressions without conversion",
                self.basis, other.basis
            )));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(p, c)| {
                let (num, den) = to_json_pair(c);
                serde_json::json!({"partition": p, "num": num, "den": den})
            })
            .collect();
        serde_json::json!({"basis": self.basis, "terms": terms})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Term {
            partition: Partition,
            num: JsonInt,
            den: JsonInt,
        }
        #[derive(Deserialize)]
        struct Raw {
            basis: ClassicalBasis,
            terms: Vec<Term>,
        }
        let raw: Raw = serde_json::from_value(v.clone()).map_err(|e| Error::Parse {
            what: "symmetric expression",
            input: v.to_string(),
            reason: e.to_string(),
        })?;
        let mut out = SymExpr::zero(raw.basis);
        for t in raw.terms {
            let c = from_json_pair(&t.num, &t.den).ok_or_else(|| Error::Parse {
                what: "coefficient",
                input: v.to_string(),
                reason: "bad fraction".into(),
            })?;
            out.add_term(t.partition, c);
        }
        Ok(out)
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear(
            f,
            self.basis.letter(),
            self.terms.iter().map(|(p, c)| {
                let parts: Vec<String> = p.parts().iter().map(usize::to_string).collect();
                (parts.join(","), c)
            }),
        )
    }
}

/// Writes `c1 b[i1] + c2 b[i2] - …`, dropping unit coefficients.
pub(crate) fn write_linear<'a, I>(f: &mut fmt::Formatter<'_>, letter: &str, terms: I) -> fmt::Result
where
    I: Iterator<Item = (String, &'a Rational)>,
{
    let mut first = true;
    for (index, c) in terms {
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
        }
        if !mag.is_one() {
            write!(f, "{} ", to_plain(&mag))?;
        }
        write!(f, "{letter}[{index}]")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// All `λ ⊇ μ` with `λ/μ` a horizontal strip of `k` cells.
pub fn horizontal_strips(mu: &Partition, k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut rows = Vec::with_capacity(mu.len() + 1);
    strip_rows(mu, 0, k, &mut rows, &mut out);
    out
}

fn strip_rows(
    mu: &Partition,
    i: usize,
    left: usize,
    rows: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if i > mu.len() {
        if left == 0 {
            out.push(Partition::from_unsorted(rows.clone()));
        }
        return;
    }
    let cap = if i == 0 {
        left
    } else {
        (mu.get(i - 1) - mu.get(i)).min(left)
    };
    for add in (0..=cap).rev() {
        rows.push(mu.get(i) + add);
        strip_rows(mu, i + 1, left - add, rows, out);
        rows.pop();
    }
}

/// `K_{λ,μ}`, the number of semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.area() != mu.area() {
        return BigInt::zero();
    }
    let mut memo = HashMap::new();
    kostka_from(&Partition::empty(), lambda, mu.parts(), &mut memo)
}

fn kostka_from(
    cur: &Partition,
    target: &Partition,
    content: &[usize],
    memo: &mut HashMap<(Partition, usize), BigInt>,
) -> BigInt {
    if content.is_empty() {
        return if cur == target {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let key = (cur.clone(), content.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for next in horizontal_strips(cur, content[0]) {
        if target.contains(&next) {
            total += kostka_from(&next, target, &content[1..], memo);
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `m_μ · f_α` in the monomial basis, for `f` one of `p`, `h`, `e`, counted by brick tabloids.
pub fn multiply_m_by(mu: &Partition, alpha: &[usize], family: ClassicalBasis) -> Result<SymExpr> {
    let (kinds, rule): (Vec<BrickKind>, LabelRule) = match family {
        ClassicalBasis::P => (
            alpha
                .iter()
                .enumerate()
                .map(|(i, &a)| BrickKind {
                    label: i + 1,
                    length: a,
                    count: 1,
                })
                .collect(),
            LabelRule::Strict,
        ),
        ClassicalBasis::H | ClassicalBasis::E => (
            alpha
                .iter()
                .enumerate()
                .map(|(i, &a)| BrickKind {
                    label: i + 1,
                    length: 1,
                    count: a,
                })
                .collect(),
            if family == ClassicalBasis::H {
                LabelRule::Weak
            } else {
                LabelRule::Strict
            },
        ),
        other => {
            return Err(Error::Unsupported(format!(
                "no brick tabloids for the {other} basis"
            )));
        }
    };
    if alpha.contains(&0) {
        return Err(Error::Unsupported(
            "composition parts must be positive".into(),
        ));
    }
    let set = BrickSet::new(mu.clone(), kinds);
    let n = set.area();
    Ok(SymExpr::from_terms(
        ClassicalBasis::M,
        enumerate_partitions(n).into_iter().map(|nu| {
            let c = count_fillings(&nu, &set, rule);
            (nu, Rational::from_integer(c))
        }),
    ))
}

/// The monomial expansion of a single basis element.
pub fn basis_in_m(basis: ClassicalBasis, lambda: &Partition) -> SymExpr {
    match basis {
        ClassicalBasis::M => SymExpr::basis_element(ClassicalBasis::M, lambda.clone()),
        ClassicalBasis::S => SymExpr::from_terms(
            ClassicalBasis::M,
            enumerate_partitions(lambda.area()).into_iter().map(|mu| {
                let k = kostka(lambda, &mu);
                (mu, Rational::from_integer(k))
            }),
        ),
        f => {
            multiply_m_by(&Partition::empty(), lambda.parts(), f).expect("p, h, e have brick rules")
        }
    }
}

/// Exact monomial expansion of a homogeneous expression of degree `n`.
pub fn to_monomial(expr: &SymExpr, n: usize) -> Result<SymExpr> {
    if expr.terms.keys().any(|p| p.area() != n) {
        return Err(Error::NotHomogeneous { expected: n });
    }
    let mut out = SymExpr::zero(ClassicalBasis::M);
    for (p, c) in &expr.terms {
        for (q, v) in basis_in_m(expr.basis, p).terms {
            out.add_term(q, v * c);
        }
    }
    Ok(out)
}

/// `expr · p_k` for `expr` in the Schur basis.
pub fn mn_multiply(expr: &SymExpr, k: usize) -> Result<SymExpr> {
    if expr.basis != ClassicalBasis::S {
        return Err(Error::BasisMismatch {
            expected: crate::polysym::Basis::Tensor(ClassicalBasis::S),
            found: crate::polysym::Basis::Tensor(expr.basis),
        });
    }
    let mut out = SymExpr::zero(ClassicalBasis::S);
    for (mu, c) in &expr.terms {
        for step in add_ribbons(mu, k) {
            out.add_term(step.result, c * sign(step.sign));
        }
    }
    Ok(out)
}

type MatrixKey = (ClassicalBasis, ClassicalBasis, usize);

fn matrix_cache() -> &'static Mutex<HashMap<MatrixKey, ClassicalMatrix>> {
    static CACHE: OnceLock<Mutex<HashMap<MatrixKey, ClassicalMatrix>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Columns are the monomial expansions of `basis_λ`.
fn monomial_matrix(basis: ClassicalBasis, labels: &[Partition]) -> RatMatrix {
    let cols: Vec<Vec<Rational>> = labels
        .iter()
        .map(|lam| {
            let e = basis_in_m(basis, lam);
            labels.iter().map(|mu| e.coeff(mu)).collect()
        })
        .collect();
    RatMatrix::from_columns(&cols)
}

/// `M(f,g)` at degree `n`, so that `f_μ = Σ_λ M(f,g)_{λ,μ} g_λ`.
pub fn classical_transition(
    f: ClassicalBasis,
    g: ClassicalBasis,
    n: usize,
) -> Result<ClassicalMatrix> {
    let key = (f, g, n);
    if let Some(m) = matrix_cache().lock().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let labels = enumerate_partitions(n);
    let m = if f == g {
        ClassicalMatrix::identity(n, labels)
    } else {
        let a_f = monomial_matrix(f, &labels);
        let entries = if g == ClassicalBasis::M {
            a_f
        } else {
            monomial_matrix(g, &labels).solve(&a_f)?
        };
        ClassicalMatrix::new(n, labels, entries)
    };
    matrix_cache().lock().unwrap().insert(key, m.clone());
    Ok(m)
}

/// Change of basis, degree by degree.
pub fn convert(expr: &SymExpr, target: ClassicalBasis) -> Result<SymExpr> {
    if expr.basis == target {
        return Ok(expr.clone());
    }
    let mut by_degree: BTreeMap<usize, Vec<(&Partition, &Rational)>> = BTreeMap::new();
    for (p, c) in &expr.terms {
        by_degree.entry(p.area()).or_default().push((p, c));
    }
    let mut out = SymExpr::zero(target);
    for (n, terms) in by_degree {
        let m = classical_transition(expr.basis, target, n)?;
        for (p, c) in terms {
            for (q, v) in m.column(p).expect("partition of n") {
                out.add_term(q, v * c);
            }
        }
    }
    Ok(out)
}

/// Product, returned in the basis of `a`.
pub fn multiply(a: &SymExpr, b: &SymExpr) -> Result<SymExpr> {
    let (route, joiner): (ClassicalBasis, fn(&Partition, &Partition) -> Partition) =
        match (a.basis, b.basis) {
            (ClassicalBasis::H, ClassicalBasis::H) => (ClassicalBasis::H, Partition::union),
            (ClassicalBasis::E, ClassicalBasis::E) => (ClassicalBasis::E, Partition::union),
            _ => (ClassicalBasis::P, Partition::union),
        };
    let x = convert(a, route)?;
    let y = convert(b, route)?;
    let mut out = SymExpr::zero(route);
    for (p, c) in &x.terms {
        for (q, d) in &y.terms {
            out.add_term(joiner(p, q), c * d);
        }
    }
    convert(&out, a.basis)
}

/// `f[p_r]`, returned in the power-sum basis.
pub fn pleth_pr(expr: &SymExpr, r: usize) -> Result<SymExpr> {
    assert!(r >= 1, "plethysm exponent must be positive");
    let p = convert(expr, ClassicalBasis::P)?;
    Ok(SymExpr::from_terms(
        ClassicalBasis::P,
        p.terms.into_iter().map(|(lam, c)| (lam.scale(r), c)),
    ))
}

/// The involution `ω`, returned in the basis of `expr`.
pub fn omega(expr: &SymExpr) -> Result<SymExpr> {
    let b = expr.basis;
    Ok(match b {
        ClassicalBasis::H | ClassicalBasis::E => {
            let other = if b == ClassicalBasis::H {
                ClassicalBasis::E
            } else {
                ClassicalBasis::H
            };
            let swapped = SymExpr::from_terms(other, expr.terms.clone());
            convert(&swapped, b)?
        }
        ClassicalBasis::P => SymExpr::from_terms(
            b,
            expr.terms
                .iter()
                .map(|(lam, c)| (lam.clone(), c * sign(neg_one_pow(lam.area() - lam.len())))),
        ),
        ClassicalBasis::S => SymExpr::from_terms(
            b,
            expr.terms
                .iter()
                .map(|(lam, c)| (lam.conjugate(), c.clone())),
        ),
        ClassicalBasis::M => convert(
            &omega(&convert(expr, ClassicalBasis::P)?)?,
            ClassicalBasis::M,
        )?,
    })
}
