//! Exact rational coefficients.
//!
//! Every coefficient in the library is a [`Rational`], an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den`, normalized. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn sign(s: i32) -> Rational {
    if s < 0 {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// `(-1)^e`
pub fn neg_one_pow(e: usize) -> i32 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Plain `a` or `a/b`.
pub fn to_plain(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn to_latex(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else if q.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -q.numer(), q.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// A JSON integer: a number when it fits in `i64`, a decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    pub fn from_big(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => JsonInt::Small(v),
            None => JsonInt::Big(n.to_string()),
        }
    }

    pub fn to_big(&self) -> Option<BigInt> {
        match self {
            JsonInt::Small(v) => Some(BigInt::from(*v)),
            JsonInt::Big(s) => s.parse().ok(),
        }
    }
}

pub fn to_json_pair(q: &Rational) -> (JsonInt, JsonInt) {
    (JsonInt::from_big(q.numer()), JsonInt::from_big(q.denom()))
}

pub fn from_json_pair(num: &JsonInt, den: &JsonInt) -> Option<Rational> {
    let d = den.to_big()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(num.to_big()?, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_on_construction() {
        let q = frac(6, -8);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(4));
        assert_eq!(frac(0, 5), Rational::zero());
        assert!(frac(0, 5).denom().is_one());
    }

    #[test]
    fn exact_sums_without_overflow() {
        let big = Rational::from_integer(factorial(40));
        let q = big.clone() / frac(7, 1) + frac(1, 3);
        assert_eq!(q * int(21), big * int(3) + int(7));
        assert_eq!(frac(1, 2) + frac(1, 3), frac(5, 6));
    }

    #[test]
    fn plain_and_latex_rendering() {
        assert_eq!(to_plain(&frac(-1, 2)), "-1/2");
        assert_eq!(to_plain(&int(4)), "4");
        assert_eq!(to_latex(&frac(-1, 24)), "-\\frac{1}{24}");
        assert_eq!(to_latex(&frac(3, 8)), "\\frac{3}{8}");
        assert_eq!(parse_rational(" -3/6 "), Some(frac(-1, 2)));
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn json_ints_fall_back_to_strings() {
        let huge = factorial(30);
        assert!(matches!(JsonInt::from_big(&huge), JsonInt::Big(_)));
        assert_eq!(JsonInt::from_big(&huge).to_big(), Some(huge));
        assert_eq!(JsonInt::from_big(&BigInt::from(-7)), JsonInt::Small(-7));
    }
}
