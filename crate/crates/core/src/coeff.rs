//! Sparse polynomials in two parameters `q` and `t` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of `ℤ[q,t]`, stored as `(q-exponent, t-exponent) → integer`
/// with no zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QtCoeff {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl QtCoeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::term(0, 0, c)
    }

    /// `c · q^qexp · t^texp`.
    pub fn term(qexp: u32, texp: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((qexp, texp), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::term(1, 0, 1)
    }

    pub fn t() -> Self {
        Self::term(0, 1, 1)
    }

    pub fn t_pow(e: u32) -> Self {
        Self::term(0, e, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(One::is_one)
    }

    /// Iterates `((qexp, texp), coefficient)` in increasing `(qexp, texp)`.
    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, qexp: u32, texp: u32) -> BigInt {
        self.terms.get(&(qexp, texp)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, qexp: u32, texp: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (qexp, texp);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    /// Adds `sign · other` in place.
    pub fn add_signed(&mut self, other: &QtCoeff, negate: bool) {
        for (&(a, b), c) in &other.terms {
            if negate {
                self.add_term(a, b, &-c);
            } else {
                self.add_term(a, b, c);
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect() }
    }

    pub fn max_q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    /// True when `q` does not occur.
    pub fn is_q_free(&self) -> bool {
        self.terms.keys().all(|&(a, _)| a == 0)
    }

    /// True when every stored integer is positive.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Sets `q = 0`.
    pub fn at_q_zero(&self) -> Self {
        Self { terms: self.terms.iter().filter(|(&(a, _), _)| a == 0).map(|(&e, c)| (e, c.clone())).collect() }
    }

    /// If this is a single term `c·q^a·t^b`, returns it.
    pub fn as_term(&self) -> Option<((u32, u32), &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&e, c)| (e, c))
        } else {
            None
        }
    }

    /// Exact quotient `self / divisor` in ℤ[q,t], or `None` when the division
    /// leaves a remainder. Leading-term reduction in lex order on `(q, t)`.
    pub fn exact_div(&self, divisor: &QtCoeff) -> Option<Self> {
        let (&(da, db), dc) = divisor.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quot = QtCoeff::zero();
        while let Some((&(ra, rb), rc)) = rem.terms.iter().next_back() {
            if ra < da || rb < db || !(rc % dc).is_zero() {
                return None;
            }
            let step = QtCoeff::term(ra - da, rb - db, rc / dc);
            rem.add_signed(&(&step * divisor), true);
            quot += &step;
        }
        Some(quot)
    }
}

impl From<i64> for QtCoeff {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add<&QtCoeff> for &QtCoeff {
    type Output = QtCoeff;

    fn add(self, rhs: &QtCoeff) -> QtCoeff {
        let mut out = self.clone();
        out.add_signed(rhs, false);
        out
    }
}

impl Sub<&QtCoeff> for &QtCoeff {
    type Output = QtCoeff;

    fn sub(self, rhs: &QtCoeff) -> QtCoeff {
        let mut out = self.clone();
        out.add_signed(rhs, true);
        out
    }
}

impl AddAssign<&QtCoeff> for QtCoeff {
    fn add_assign(&mut self, rhs: &QtCoeff) {
        self.add_signed(rhs, false);
    }
}

impl Neg for &QtCoeff {
    type Output = QtCoeff;

    fn neg(self) -> QtCoeff {
        QtCoeff { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Neg for QtCoeff {
    type Output = QtCoeff;

    fn neg(mut self) -> QtCoeff {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul<&QtCoeff> for &QtCoeff {
    type Output = QtCoeff;

    fn mul(self, rhs: &QtCoeff) -> QtCoeff {
        let mut out = QtCoeff::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Display for QtCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                factors.push(mag.to_string());
            }
            for (sym, e) in [("q", a), ("t", b)] {
                match e {
                    0 => {}
                    1 => factors.push(sym.to_string()),
                    _ => factors.push(format!("{sym}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Integers go out as JSON numbers when they fit in 64 bits and as decimal
/// strings otherwise; both forms are accepted on input.
fn bigint_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

fn bigint_from_json(v: &serde_json::Value) -> Result<BigInt> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| Error::Format(format!("non-integer coefficient {n}"))),
        serde_json::Value::String(s) => s.parse().map_err(|_| Error::Format(format!("bad integer string {s:?}"))),
        other => Err(Error::Format(format!("bad coefficient {other}"))),
    }
}

impl Serialize for QtCoeff {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (&(a, b), c) in &self.terms {
            seq.serialize_element(&(a, b, bigint_to_json(c)))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QtCoeff {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(u32, u32, serde_json::Value)> = Vec::deserialize(deserializer)?;
        let mut out = QtCoeff::zero();
        for (a, b, v) in raw {
            let c = bigint_from_json(&v).map_err(de::Error::custom)?;
            out.add_term(a, b, &c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_canonical() {
        let a = &QtCoeff::q() + &QtCoeff::t();
        let b = &a - &QtCoeff::q();
        assert_eq!(b, QtCoeff::t());
        assert!((&b - &b).is_zero());
        assert_eq!(&QtCoeff::t() * &QtCoeff::q(), QtCoeff::term(1, 1, 1));
    }

    #[test]
    fn display() {
        let c = &(&QtCoeff::one() + &QtCoeff::term(1, 2, 1)) - &QtCoeff::term(0, 1, 3);
        assert_eq!(c.to_string(), "1 - 3*t + q*t^2");
        assert_eq!(QtCoeff::zero().to_string(), "0");
        assert_eq!((-QtCoeff::one()).to_string(), "-1");
    }

    #[test]
    fn json_round_trip_including_big_integers() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let mut c = QtCoeff::term(0, 2, 5);
        c.add_term(3, 0, &big);
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"[[0,2,5],[3,0,"123456789012345678901234567890"]]"#);
        let back: QtCoeff = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn deserialization_merges_and_drops_zeros() {
        let c: QtCoeff = serde_json::from_str("[[0,0,1],[0,0,-1],[1,1,0]]").unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn exact_division() {
        let c = QtCoeff::term(2, 3, 6);
        assert_eq!(c.exact_div(&QtCoeff::term(1, 1, 3)), Some(QtCoeff::term(1, 2, 2)));
        assert_eq!(c.exact_div(&QtCoeff::term(3, 0, 1)), None);
        assert_eq!(c.exact_div(&QtCoeff::term(0, 0, 4)), None);
        // (1 + q)(2 - t) / (1 + q)
        let a = &QtCoeff::one() + &QtCoeff::q();
        let b = &QtCoeff::from_int(2) - &QtCoeff::t();
        assert_eq!((&a * &b).exact_div(&a), Some(b.clone()));
        assert_eq!((&(&a * &b) + &QtCoeff::one()).exact_div(&a), None);
        assert_eq!(a.exact_div(&QtCoeff::zero()), None);
    }
}
