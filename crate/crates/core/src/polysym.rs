//! Polysymmetric expressions and the pure tensor bases.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::partition::Partition;
use crate::rational::{from_json_pair, parse_rational, to_json_pair, JsonInt, Rational};
use crate::sym::{classical_transition, write_linear, ClassicalBasis};
use crate::types::{enumerate_types, SplitType};

/// Every basis of the polysymmetric ring at fixed weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// `f⊗` built from a classical basis `f`.
    Tensor(ClassicalBasis),
    P,
    H,
    EPlus,
    E,
}

impl Basis {
    pub const ALL: [Basis; 9] = [
        Basis::Tensor(ClassicalBasis::M),
        Basis::Tensor(ClassicalBasis::H),
        Basis::Tensor(ClassicalBasis::E),
        Basis::Tensor(ClassicalBasis::P),
        Basis::Tensor(ClassicalBasis::S),
        Basis::P,
        Basis::H,
        Basis::EPlus,
        Basis::E,
    ];

    pub const NON_PURE: [Basis; 4] = [Basis::P, Basis::H, Basis::EPlus, Basis::E];

    pub const M: Basis = Basis::Tensor(ClassicalBasis::M);
    pub const S: Basis = Basis::Tensor(ClassicalBasis::S);
    pub const PT: Basis = Basis::Tensor(ClassicalBasis::P);

    /// Symbol used in rendered expressions: `p[...]` for `p⊗`, `P[...]` for `P`.
    pub fn letter(self) -> &'static str {
        match self {
            Basis::Tensor(c) => c.letter(),
            Basis::P => "P",
            Basis::H => "H",
            Basis::EPlus => "E+",
            Basis::E => "E",
        }
    }

    pub fn is_pure(self) -> bool {
        matches!(self, Basis::Tensor(_))
    }

    pub fn name(self) -> String {
        match self {
            Basis::Tensor(c) => format!("{}-tensor", c.letter()),
            other => other.letter().to_string(),
        }
    }

    fn from_letter(s: &str) -> Option<Basis> {
        Some(match s {
            "m" => Basis::Tensor(ClassicalBasis::M),
            "h" => Basis::Tensor(ClassicalBasis::H),
            "e" => Basis::Tensor(ClassicalBasis::E),
            "p" => Basis::Tensor(ClassicalBasis::P),
            "s" => Basis::Tensor(ClassicalBasis::S),
            "P" => Basis::P,
            "H" => Basis::H,
            "E+" | "E⁺" => Basis::EPlus,
            "E" => Basis::E,
            _ => return None,
        })
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;

    /// Accepts `m-tensor`, `m⊗` and the bare names `P`, `H`, `E+`, `E⁺`, `E`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let stem = t.strip_suffix("-tensor").or_else(|| t.strip_suffix('⊗'));
        let found = match stem {
            Some(c) => c.parse::<ClassicalBasis>().ok().map(Basis::Tensor),
            None => Basis::from_letter(t).filter(|b| !b.is_pure()),
        };
        found.ok_or_else(|| Error::Parse {
            what: "basis",
            input: s.to_string(),
            reason: "expected m-tensor, h-tensor, e-tensor, p-tensor, s-tensor, P, H, E+ or E"
                .into(),
        })
    }
}

impl Serialize for Basis {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for Basis {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite linear combination of one polysymmetric basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyExpr {
    basis: Basis,
    terms: BTreeMap<SplitType, Rational>,
}

impl PolyExpr {
    pub fn zero(basis: Basis) -> Self {
        PolyExpr {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `f_∅`.
    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, SplitType::empty())
    }

    pub fn basis_element(basis: Basis, t: SplitType) -> Self {
        let mut e = Self::zero(basis);
        e.add_term(t, Rational::one());
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (SplitType, Rational)>>(
        basis: Basis,
        terms: I,
    ) -> Self {
        let mut e = Self::zero(basis);
        for (t, c) in terms {
            e.add_term(t, c);
        }
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<SplitType, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<SplitType, Rational> {
        self.terms
    }

    pub fn coeff(&self, t: &SplitType) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add_term(&mut self, t: SplitType, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
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

    /// Common weight of all terms; `None` when mixed or zero.
    pub fn weight(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(SplitType::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.weight().is_some()
    }

    /// Checks that every term has weight `n`.
    pub fn expect_weight(&self, n: usize) -> Result<()> {
        if self.terms.keys().all(|t| t.weight() == n) {
            Ok(())
        } else {
            Err(Error::NotHomogeneous { expected: n })
        }
    }

    pub fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                expected: basis,
                found: self.basis,
            })
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(
            self.basis,
            self.terms.iter().map(|(t, v)| (t.clone(), v * c)),
        )
    }

    pub fn add(&self, other: &PolyExpr) -> Result<Self> {
        other.expect_basis(self.basis)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    pub(crate) fn add_assign(&mut self, other: &PolyExpr) {
        for (t, c) in &other.terms {
            self.add_term(t.clone(), c.clone());
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(t, c)| {
                let (num, den) = to_json_pair(c);
                serde_json::json!({"type": t, "num": num, "den": den})
            })
            .collect();
        serde_json::json!({"basis": self.basis, "terms": terms})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Term {
            #[serde(rename = "type")]
            ty: SplitType,
            num: JsonInt,
            den: JsonInt,
        }
        #[derive(Deserialize)]
        struct Raw {
            basis: Basis,
            terms: Vec<Term>,
        }
        let bad = |reason: String| Error::Parse {
            what: "polysymmetric expression",
            input: v.to_string(),
            reason,
        };
        let raw: Raw = serde_json::from_value(v.clone()).map_err(|e| bad(e.to_string()))?;
        let mut out = PolyExpr::zero(raw.basis);
        for t in raw.terms {
            let c = from_json_pair(&t.num, &t.den).ok_or_else(|| bad("bad fraction".into()))?;
            out.add_term(t.ty, c);
        }
        Ok(out)
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear(
            f,
            self.basis.letter(),
            self.terms.iter().map(|(t, c)| (t.to_string(), c)),
        )
    }
}

fn parse_error(input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        what: "expression",
        input: input.to_string(),
        reason: reason.into(),
    }
}

/// Splits `a + b - c` into signed chunks, ignoring signs inside brackets.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    let mut negative = false;
    for ch in s.chars() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| parse_error(s, "unbalanced ']'"))?;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 && !cur.trim().is_empty() && !cur.trim_end().ends_with('E') => {
                out.push((negative, std::mem::take(&mut cur)));
                negative = ch == '-';
            }
            '-' if depth == 0 && cur.trim().is_empty() => negative = !negative,
            '+' if depth == 0 && cur.trim().is_empty() => {}
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err(parse_error(s, "unbalanced '['"));
    }
    if cur.trim().is_empty() {
        return Err(parse_error(s, "missing term"));
    }
    out.push((negative, cur));
    Ok(out)
}

impl FromStr for PolyExpr {
    type Err = Error;

    /// Parses sums like `p[1^6] + 2 p[2^3]`, `-1/2 E+[3^2]` or `s[]` (the unit).
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Err(parse_error(s, "the zero expression has no basis"));
        }
        let mut out: Option<PolyExpr> = None;
        for (negative, chunk) in split_terms(s)? {
            let chunk = chunk.trim();
            let open = chunk
                .find('[')
                .ok_or_else(|| parse_error(s, "expected letter[type]"))?;
            if !chunk.ends_with(']') {
                return Err(parse_error(s, "term must end with ']'"));
            }
            let head = chunk[..open].trim();
            let inner = chunk[open + 1..chunk.len() - 1].trim();
            let letter_start = head
                .char_indices()
                .rev()
                .take_while(|(_, c)| c.is_alphabetic() || *c == '+' || *c == '⁺')
                .last()
                .map(|(i, _)| i)
                .ok_or_else(|| parse_error(s, "missing basis letter"))?;
            let letter = &head[letter_start..];
            let coeff_text = head[..letter_start].trim().trim_end_matches('*').trim();
            let b = Basis::from_letter(letter)
                .ok_or_else(|| parse_error(s, format!("unknown basis letter {letter:?}")))?;
            let e = out.get_or_insert_with(|| PolyExpr::zero(b));
            if e.basis != b {
                return Err(parse_error(s, "all terms must use one basis"));
            }
            let mut c = if coeff_text.is_empty() {
                Rational::one()
            } else {
                parse_rational(coeff_text)
                    .ok_or_else(|| parse_error(s, format!("bad coefficient {coeff_text:?}")))?
            };
            if negative {
                c = -c;
            }
            let t = if inner.is_empty() {
                SplitType::empty()
            } else {
                inner.parse()?
            };
            e.add_term(t, c);
        }
        Ok(out.expect("split_terms yields at least one term"))
    }
}

/// Product of expressions in `p⊗`, where `p⊗_σ · p⊗_ρ = p⊗_{σ∪ρ}`.
pub fn multiply_p_tensor(exprs: &[PolyExpr]) -> Result<PolyExpr> {
    let mut acc = PolyExpr::one(Basis::PT);
    for e in exprs {
        e.expect_basis(Basis::PT)?;
        let mut next = PolyExpr::zero(Basis::PT);
        for (a, x) in &acc.terms {
            for (b, y) in &e.terms {
                next.add_term(a.union(b), x * y);
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// `M(f⊗, g⊗)` at weight `n`; each entry is a product of classical entries
/// over the restrictions, and vanishes when the restriction sizes disagree.
pub fn tensor_transition(f: ClassicalBasis, g: ClassicalBasis, n: usize) -> Result<PolyMatrix> {
    let labels = enumerate_types(n);
    if f == g {
        return Ok(PolyMatrix::identity(n, labels));
    }
    let mut columns = Vec::with_capacity(labels.len());
    for sigma in &labels {
        let mut col: Vec<(SplitType, Rational)> = vec![(SplitType::empty(), Rational::one())];
        for (d, part) in sigma.iter() {
            let m = classical_transition(f, g, part.area())?;
            let entries: Vec<(Partition, Rational)> =
                m.column(part).expect("partition of its own size");
            let mut next = Vec::with_capacity(col.len() * entries.len());
            for (t, c) in &col {
                for (q, v) in &entries {
                    next.push((t.with_restriction(d, q.clone()), c * v));
                }
            }
            col = next;
        }
        columns.push(col);
    }
    Ok(PolyMatrix::from_columns(n, labels, columns))
}

/// Rewrites a pure tensor expression in another pure tensor basis.
pub fn convert_tensor(expr: &PolyExpr, target: ClassicalBasis) -> Result<PolyExpr> {
    let source = match expr.basis {
        Basis::Tensor(c) => c,
        other => {
            return Err(Error::BasisMismatch {
                expected: Basis::Tensor(target),
                found: other,
            })
        }
    };
    let mut out = PolyExpr::zero(Basis::Tensor(target));
    let mut by_weight: BTreeMap<usize, Vec<(&SplitType, &Rational)>> = BTreeMap::new();
    for (t, c) in &expr.terms {
        by_weight.entry(t.weight()).or_default().push((t, c));
    }
    for (n, terms) in by_weight {
        let m = tensor_transition(source, target, n)?;
        for (t, c) in terms {
            for (q, v) in m.column(t).expect("type of weight n") {
                out.add_term(q, v * c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use crate::types::ty;

    #[test]
    fn basis_names_round_trip() {
        for b in Basis::ALL {
            assert_eq!(b.name().parse::<Basis>().unwrap(), b);
        }
        assert_eq!("s⊗".parse::<Basis>().unwrap(), Basis::S);
        assert_eq!("E⁺".parse::<Basis>().unwrap(), Basis::EPlus);
        assert!("q-tensor".parse::<Basis>().is_err());
        assert!("p".parse::<Basis>().is_err());
    }

    #[test]
    fn parse_and_render() {
        let e: PolyExpr = "p[1^6] + 2 p[2^3]".parse().unwrap();
        assert_eq!(e.basis(), Basis::PT);
        assert_eq!(e.coeff(&ty("2^3")), int(2));
        assert_eq!(e.to_string(), "p[1^6] + 2 p[2^3]");
        let f: PolyExpr = "-1/2 E+[3^2] + E+[1^{4,2}] - E+[1^{4,2}]".parse().unwrap();
        assert_eq!(f.basis(), Basis::EPlus);
        assert_eq!(f.len(), 1);
        assert_eq!(f.to_string(), "-1/2 E+[3^2]");
        let unit: PolyExpr = "s[]".parse().unwrap();
        assert_eq!(unit, PolyExpr::one(Basis::S));
        assert!("p[1^2] + h[2^1]".parse::<PolyExpr>().is_err());
        assert!("p[1^0]".parse::<PolyExpr>().is_err());
        assert!("2 q[1]".parse::<PolyExpr>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let e: PolyExpr = "3/4 H[2^1 1^2] - H[1^{2,2}]".parse().unwrap();
        let j = e.to_json();
        assert_eq!(j["basis"], "H");
        assert_eq!(j["terms"][0]["type"], serde_json::json!([[1, 2], [1, 2]]));
        assert_eq!(PolyExpr::from_json(&j).unwrap(), e);
    }

    #[test]
    fn p_tensor_products_merge_blocks() {
        let a = PolyExpr::basis_element(Basis::PT, ty("1^2 2^1"));
        let b = PolyExpr::basis_element(Basis::PT, ty("1^1"));
        let ab = multiply_p_tensor(&[a.clone(), b]).unwrap();
        assert_eq!(ab, PolyExpr::basis_element(Basis::PT, ty("1^{2,1} 2^1")));
        assert_eq!(
            multiply_p_tensor(&[PolyExpr::one(Basis::PT), a.clone()]).unwrap(),
            a
        );
        let h = PolyExpr::one(Basis::H);
        assert!(multiply_p_tensor(&[h]).is_err());
    }

    #[test]
    fn tensor_entries_factor() {
        let m = tensor_transition(ClassicalBasis::P, ClassicalBasis::M, 2).unwrap();
        assert_eq!(m.get(&ty("1^{1,1}"), &ty("1^2")), Some(&int(0)));
        assert_eq!(m.get(&ty("1^2"), &ty("1^{1,1}")), Some(&int(1)));
        assert_eq!(m.get(&ty("1^{1,1}"), &ty("1^{1,1}")), Some(&int(2)));
        // a mixed type factors across its two degrees
        let m = tensor_transition(ClassicalBasis::H, ClassicalBasis::M, 5).unwrap();
        let classical = classical_transition(ClassicalBasis::H, ClassicalBasis::M, 3).unwrap();
        let expected = classical
            .get(&"1,1,1".parse().unwrap(), &"2,1".parse().unwrap())
            .unwrap();
        assert_eq!(
            m.get(&ty("2^1 1^{1,1,1}"), &ty("2^1 1^{2,1}")),
            Some(expected)
        );
        assert_eq!(m.get(&ty("1^5"), &ty("2^1 1^{2,1}")), Some(&int(0)));
    }

    #[test]
    fn tensor_matrices_invert_each_other() {
        for n in 0..=4 {
            for f in ClassicalBasis::ALL {
                for g in ClassicalBasis::ALL {
                    let a = tensor_transition(f, g, n).unwrap();
                    let b = tensor_transition(g, f, n).unwrap();
                    assert!(a.then(&b).unwrap().is_identity(), "{f} {g} {n}");
                }
            }
        }
    }

    #[test]
    fn tensor_conversion() {
        let e: PolyExpr = "h[2^1 1^1]".parse().unwrap();
        let m = convert_tensor(&e, ClassicalBasis::M).unwrap();
        assert_eq!(m.to_string(), "m[2^1 1^1]");
        let p = convert_tensor(&"h[1^2]".parse().unwrap(), ClassicalBasis::P).unwrap();
        assert_eq!(p.coeff(&ty("1^{1,1}")), frac(1, 2));
        assert_eq!(p.coeff(&ty("1^2")), frac(1, 2));
    }
}
