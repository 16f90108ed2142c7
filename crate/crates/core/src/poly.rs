//! Sparse multivariate polynomials in `x₁..x_N` over `ℤ[q,t]`.
//!
//! Monomials are ordered graded-lexicographically: total degree first, then
//! exponent vectors lexicographically. The largest monomial under this order
//! is the leading term used by [`SparsePoly::exact_divide`].

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::coeff::QtCoeff;
use crate::combinat::Permutation;
use crate::error::{Error, Result};

/// An exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[u32; 12]>);

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Self(SmallVec::from_slice(exps))
    }

    pub fn one(vars: usize) -> Self {
        Self(SmallVec::from_elem(0, vars))
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if every exponent of `other` fits.
    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<SmallVec<_>>>().map(Monomial)
    }

    fn has_repeated_exponent(&self) -> bool {
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        sorted.windows(2).any(|w| w[0] == w[1])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial over a fixed number of variables with `ℤ[q,t]` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    vars: usize,
    terms: BTreeMap<Monomial, QtCoeff>,
}

impl SparsePoly {
    pub fn zero(vars: usize) -> Self {
        Self { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, QtCoeff::one())
    }

    pub fn constant(vars: usize, c: QtCoeff) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars), &c);
        p
    }

    /// The single term `c · x^exps`.
    pub fn monomial(exps: &[u32], c: QtCoeff) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(Monomial::new(exps), &c);
        p
    }

    /// The variable `x_i`, with `i` counted from 1.
    pub fn var(vars: usize, i: usize) -> Self {
        assert!((1..=vars).contains(&i), "variable index out of range");
        let mut exps = vec![0; vars];
        exps[i - 1] = 1;
        Self::monomial(&exps, QtCoeff::one())
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated monomials.
    pub fn from_terms<I>(vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, QtCoeff)>,
    {
        let mut p = Self::zero(vars);
        for (exps, c) in terms {
            if exps.len() != vars {
                return Err(Error::MonomialLength { expected: vars, got: exps.len() });
            }
            p.add_term(Monomial::new(&exps), &c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &QtCoeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> QtCoeff {
        self.terms.get(&Monomial::new(exps)).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &QtCoeff)> {
        self.terms.iter().next_back()
    }

    /// The common total degree of all terms; `None` for the zero polynomial
    /// or a non-homogeneous one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, m: Monomial, c: &QtCoeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check_vars(&self, other: &SparsePoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch { left: self.vars, right: other.vars });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_vars(other)?;
        let mut acc: HashMap<Monomial, QtCoeff> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                acc.entry(m1.mul(m2)).or_default().add_signed(&(c1 * c2), false);
            }
        }
        Ok(Self::from_accumulator(self.vars, acc))
    }

    pub fn scale(&self, c: &QtCoeff) -> SparsePoly {
        let mut out = Self::zero(self.vars);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), &(v * c));
        }
        out
    }

    fn from_accumulator(vars: usize, acc: HashMap<Monomial, QtCoeff>) -> Self {
        Self { vars, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Permutes variable positions: the exponent on `x_i` moves to `x_{σ_i}`.
    pub fn permute_vars(&self, sigma: &Permutation) -> Result<SparsePoly> {
        if sigma.len() != self.vars {
            return Err(Error::DimensionMismatch { left: self.vars, right: sigma.len() });
        }
        let mut out = Self::zero(self.vars);
        for (m, c) in &self.terms {
            let mut exps: SmallVec<[u32; 12]> = SmallVec::from_elem(0, self.vars);
            for (i, &s) in sigma.word().iter().enumerate() {
                exps[s - 1] = m.0[i];
            }
            out.add_term(Monomial(exps), c);
        }
        Ok(out)
    }

    /// Swaps `x_i` and `x_j` (1-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> SparsePoly {
        let mut out = Self::zero(self.vars);
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m.0.swap(i - 1, j - 1);
            out.add_term(m, c);
        }
        out
    }

    /// Specializes `x_N = 0`, giving a polynomial in `N − 1` variables.
    pub fn drop_last_var(&self) -> SparsePoly {
        let vars = self.vars.saturating_sub(1);
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            if m.0.last().copied().unwrap_or(0) == 0 {
                out.add_term(Monomial::new(&m.0[..vars]), c);
            }
        }
        out
    }

    /// Maps every coefficient through `f`, dropping those that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&QtCoeff) -> QtCoeff) -> SparsePoly {
        let mut out = Self::zero(self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    /// The antisymmetrizer `Σ_{σ∈S_N} sgn(σ) σ(p)` where
    /// `σ(x₁^{a₁}⋯x_N^{a_N}) = x_{σ₁}^{a₁}⋯x_{σ_N}^{a_N}`.
    ///
    /// Source monomials with a repeated exponent vanish and are skipped.
    pub fn antisymmetrize(&self) -> SparsePoly {
        let perms = signed_permutations(self.vars);
        let sources: Vec<(&Monomial, &QtCoeff)> =
            self.terms.iter().filter(|(m, _)| !m.has_repeated_exponent()).collect();
        let acc = sources
            .par_chunks(64)
            .map(|chunk| {
                let mut acc: HashMap<Monomial, QtCoeff> = HashMap::new();
                for &(m, c) in chunk {
                    let neg = -c;
                    for (sigma, odd) in &perms {
                        let mut exps: SmallVec<[u32; 12]> = SmallVec::from_elem(0, self.vars);
                        for (i, &s) in sigma.iter().enumerate() {
                            exps[s as usize] = m.0[i];
                        }
                        let entry = acc.entry(Monomial(exps)).or_default();
                        entry.add_signed(if *odd { &neg } else { c }, false);
                    }
                }
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                if a.len() < b.len() {
                    return merge_into(b, a);
                }
                for (m, c) in b {
                    a.entry(m).or_default().add_signed(&c, false);
                }
                a
            });
        Self::from_accumulator(self.vars, acc)
    }

    /// Exact quotient by `divisor` using leading-term reduction in
    /// graded-lex order. Any remainder is an error.
    pub fn exact_divide(&self, divisor: &SparsePoly) -> Result<SparsePoly> {
        self.check_vars(divisor)?;
        let (lead_m, lead_c) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let mut rem = self.terms.clone();
        let mut quot = Self::zero(self.vars);
        while let Some((m, c)) = rem.iter().next_back() {
            let qm = m.checked_div(lead_m).ok_or(Error::NotDivisible)?;
            let qc = c.exact_div(lead_c).ok_or(Error::NotDivisible)?;
            for (dm, dc) in &divisor.terms {
                let key = qm.mul(dm);
                let delta = -(&qc * dc);
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v += &delta;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, delta);
                    }
                }
            }
            quot.add_term(qm, &qc);
        }
        Ok(quot)
    }

    /// Returns the first `i` such that swapping `x_i, x_{i+1}` changes the
    /// polynomial, or `None` when it is symmetric.
    pub fn symmetry_violation(&self) -> Option<usize> {
        (1..self.vars).find(|&i| {
            self.terms.iter().any(|(m, c)| {
                let mut swapped = m.clone();
                swapped.0.swap(i - 1, i);
                self.terms.get(&swapped) != Some(c)
            })
        })
    }

    /// Invariance under all adjacent transpositions of variables.
    pub fn is_symmetric(&self) -> bool {
        self.symmetry_violation().is_none()
    }
}

fn merge_into(mut big: HashMap<Monomial, QtCoeff>, small: HashMap<Monomial, QtCoeff>) -> HashMap<Monomial, QtCoeff> {
    for (m, c) in small {
        big.entry(m).or_default().add_signed(&c, false);
    }
    big
}

/// All permutations of `0..n` with a flag for odd parity.
fn signed_permutations(n: usize) -> Vec<(SmallVec<[u8; 12]>, bool)> {
    Permutation::all(n).map(|p| (p.word().iter().map(|&w| (w - 1) as u8).collect(), p.sign() < 0)).collect()
}

/// The Vandermonde product `∏_{i<j} (x_i − x_j)`.
pub fn vandermonde(n: usize) -> SparsePoly {
    let mut out = SparsePoly::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let factor = SparsePoly::var(n, i) - SparsePoly::var(n, j);
            out = &out * &factor;
        }
    }
    out
}

/// `x^{δ_N}` with `δ_N = (N−1, N−2, …, 0)`.
pub fn staircase(n: usize) -> Vec<u32> {
    (0..n as u32).rev().collect()
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    /// Panics on mismatched variable counts; use [`SparsePoly::try_add`] to
    /// get an error instead.
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_add(rhs).expect("ambient dimension mismatch")
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: SparsePoly) -> SparsePoly {
        &self + &rhs
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_sub(rhs).expect("ambient dimension mismatch")
    }
}

impl Sub for SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: SparsePoly) -> SparsePoly {
        &self - &rhs
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_mul(rhs).expect("ambient dimension mismatch")
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        SparsePoly { vars: self.vars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(j, &e)| if e == 1 { format!("x{}", j + 1) } else { format!("x{}^{e}", j + 1) })
                    .collect();
            match (c.is_one(), vars.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{}", vars.join("*"))?,
                (false, true) => write!(f, "({c})")?,
                (false, false) => write!(f, "({c})*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyDoc {
    vars: usize,
    terms: Vec<PolyTermDoc>,
}

#[derive(Serialize, Deserialize)]
struct PolyTermDoc {
    exps: Vec<u32>,
    coeff: QtCoeff,
}

/// `{"vars": N, "terms": [{"exps": [...], "coeff": [[q, t, c], ...]}]}`, terms
/// in increasing graded-lex order.
impl Serialize for SparsePoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyDoc {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| PolyTermDoc { exps: m.0.to_vec(), coeff: c.clone() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SparsePoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = PolyDoc::deserialize(deserializer)?;
        SparsePoly::from_terms(doc.vars, doc.terms.into_iter().map(|t| (t.exps, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

/// Shorthand for an integer coefficient.
pub fn int(c: i64) -> QtCoeff {
    QtCoeff::from_int(BigInt::from(c))
}
