//! Fundamental quasisymmetric polynomials and basis-labelled expansions.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::coeff::QtCoeff;
use crate::combinat::{Composition, Partition};
use crate::error::{Error, Result};
use crate::poly::{Monomial, SparsePoly};
use crate::schur::schur_ssyt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    /// Gessel fundamentals, indexed by compositions.
    #[serde(rename = "F")]
    Fundamental,
    /// Monomial quasisymmetric functions, indexed by compositions.
    #[serde(rename = "M")]
    Monomial,
    /// Schur functions, indexed by partitions.
    #[serde(rename = "s")]
    Schur,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Fundamental => "F",
            Basis::Monomial => "M",
            Basis::Schur => "s",
        })
    }
}

/// A homogeneous linear combination of basis elements with `ℤ[q,t]`
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    basis: Basis,
    degree: usize,
    terms: BTreeMap<Vec<usize>, QtCoeff>,
}

impl Expansion {
    pub fn new(basis: Basis, degree: usize) -> Self {
        Self { basis, degree, terms: BTreeMap::new() }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted lexicographically by index.
    pub fn iter(&self) -> impl Iterator<Item = (&[usize], &QtCoeff)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, index: &[usize]) -> QtCoeff {
        self.terms.get(index).cloned().unwrap_or_default()
    }

    fn validate_index(&self, index: &[usize]) -> Result<()> {
        let valid = match self.basis {
            Basis::Fundamental | Basis::Monomial => Composition::new(index.to_vec()).is_ok(),
            Basis::Schur => Partition::new(index.to_vec()).is_ok(),
        };
        if !valid {
            return Err(Error::InvalidIndex { index: index.to_vec(), basis: self.basis.to_string() });
        }
        let weight: usize = index.iter().sum();
        if weight != self.degree {
            return Err(Error::WeightMismatch { index: index.to_vec(), got: weight, degree: self.degree });
        }
        Ok(())
    }

    /// Adds `c` to the coefficient of `index`.
    pub fn add_term(&mut self, index: &[usize], c: &QtCoeff) -> Result<()> {
        self.validate_index(index)?;
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(index) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(index);
                }
            }
            None => {
                self.terms.insert(index.to_vec(), c.clone());
            }
        }
        Ok(())
    }

    /// Builds an expansion from `(index, coefficient)` pairs.
    pub fn from_terms<I>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, QtCoeff)>,
    {
        let mut e = Self::new(basis, degree);
        for (index, c) in terms {
            e.add_term(&index, &c)?;
        }
        Ok(e)
    }

    /// `self − other`, both in the same basis and degree.
    pub fn difference(&self, other: &Expansion) -> Result<Expansion> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch { expected: self.basis.to_string(), found: other.basis.to_string() });
        }
        if self.degree != other.degree && !self.is_empty() && !other.is_empty() {
            return Err(Error::WeightMismatch {
                index: other.terms.keys().next().cloned().unwrap_or_default(),
                got: other.degree,
                degree: self.degree,
            });
        }
        let mut out = self.clone();
        if out.is_empty() {
            out.degree = other.degree;
        }
        for (k, v) in &other.terms {
            out.add_term(k, &-v)?;
        }
        Ok(out)
    }

    /// Applies `q = 0` to every coefficient.
    pub fn at_q_zero(&self) -> Expansion {
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v.at_q_zero())).filter(|(_, v)| !v.is_zero()).collect();
        Expansion { basis: self.basis, degree: self.degree, terms }
    }

    /// True when every coefficient has only positive integers.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(QtCoeff::is_nonnegative)
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let idx: Vec<String> = k.iter().map(ToString::to_string).collect();
            if v.is_one() {
                write!(f, "{}[{}]", self.basis, idx.join(","))?;
            } else {
                write!(f, "({v})*{}[{}]", self.basis, idx.join(","))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ExpansionDoc {
    basis: Basis,
    degree: usize,
    terms: Vec<ExpansionTermDoc>,
}

#[derive(Serialize, Deserialize)]
struct ExpansionTermDoc {
    index: Vec<usize>,
    coeff: QtCoeff,
}

/// `{"basis": "F"|"s"|"M", "degree": n, "terms": [{"index": [...], "coeff": [[q, t, c], ...]}]}`.
impl Serialize for Expansion {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ExpansionDoc {
            basis: self.basis,
            degree: self.degree,
            terms: self.terms.iter().map(|(k, v)| ExpansionTermDoc { index: k.clone(), coeff: v.clone() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Expansion {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = ExpansionDoc::deserialize(deserializer)?;
        Expansion::from_terms(doc.basis, doc.degree, doc.terms.into_iter().map(|t| (t.index, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

/// `F_α(x₁..x_N)`: the sum of `x_{a₁}⋯x_{a_n}` over `1 ≤ a₁ ≤ ⋯ ≤ a_n ≤ N`
/// with `a_i < a_{i+1}` for every `i ∈ Set(α)`.
pub fn fundamental(alpha: &Composition, vars: usize) -> SparsePoly {
    let n = alpha.weight();
    let strict: Vec<bool> = {
        let set = alpha.descent_set();
        (1..=n).map(|i| set.contains(&i)).collect()
    };
    let mut terms = Vec::new();
    let mut exps = vec![0u32; vars];
    fn rec(
        pos: usize,
        min: usize,
        strict: &[bool],
        vars: usize,
        exps: &mut Vec<u32>,
        out: &mut Vec<(Vec<u32>, QtCoeff)>,
    ) {
        if pos == strict.len() {
            out.push((exps.clone(), QtCoeff::one()));
            return;
        }
        for a in min..=vars {
            exps[a - 1] += 1;
            let next_min = if strict[pos] { a + 1 } else { a };
            rec(pos + 1, next_min, strict, vars, exps, out);
            exps[a - 1] -= 1;
        }
    }
    rec(0, 1, &strict, vars, &mut exps, &mut terms);
    SparsePoly::from_terms(vars, terms).expect("exponent vectors have length N")
}

/// `M_β(x₁..x_N)`: the sum of `x_{i₁}^{β₁}⋯x_{i_ℓ}^{β_ℓ}` over `i₁ < ⋯ < i_ℓ`.
pub fn monomial_quasisymmetric(beta: &Composition, vars: usize) -> SparsePoly {
    let mut terms = Vec::new();
    let mut exps = vec![0u32; vars];
    fn rec(k: usize, min: usize, beta: &[usize], vars: usize, exps: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, QtCoeff)>) {
        if k == beta.len() {
            out.push((exps.clone(), QtCoeff::one()));
            return;
        }
        for i in min..vars {
            exps[i] = beta[k] as u32;
            rec(k + 1, i + 1, beta, vars, exps, out);
            exps[i] = 0;
        }
    }
    rec(0, 0, beta.parts(), vars, &mut exps, &mut terms);
    SparsePoly::from_terms(vars, terms).expect("exponent vectors have length N")
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// Monomial quasisymmetric coefficients `c_β` of a quasisymmetric polynomial,
/// after checking that it is quasisymmetric.
fn monomial_coefficients(p: &SparsePoly) -> Result<BTreeMap<Vec<usize>, QtCoeff>> {
    let vars = p.vars();
    let mut groups: HashMap<Vec<usize>, (usize, &QtCoeff, &Monomial)> = HashMap::new();
    for (m, c) in p.terms() {
        let flat: Vec<usize> = m.exps().iter().filter(|&&e| e > 0).map(|&e| e as usize).collect();
        match groups.get_mut(&flat) {
            Some((count, rep, rep_m)) => {
                if *rep != c {
                    return Err(Error::NotQuasisymmetric(format!(
                        "{:?} and {:?} have different coefficients",
                        rep_m.exps(),
                        m.exps()
                    )));
                }
                *count += 1;
            }
            None => {
                groups.insert(flat, (1, c, m));
            }
        }
    }
    let mut out = BTreeMap::new();
    for (flat, (count, c, m)) in groups {
        if BigInt::from(count) != binomial(vars, flat.len()) {
            return Err(Error::NotQuasisymmetric(format!("only {count} of the shifts of {:?} are present", m.exps())));
        }
        out.insert(flat, c.clone());
    }
    Ok(out)
}

/// The unique fundamental expansion of a homogeneous quasisymmetric polynomial.
///
/// Reads the monomial quasisymmetric coefficients `c_β`. Since
/// `F_α = Σ_{Set(β) ⊇ Set(α)} M_β`, we have `c_β = Σ_{Set(α) ⊆ Set(β)} a_α`,
/// and Möbius inversion on the subset lattice gives
/// `a_α = Σ_{Set(β) ⊆ Set(α)} (−1)^{|Set(α)| − |Set(β)|} c_β`.
pub fn extract_f_expansion(p: &SparsePoly) -> Result<Expansion> {
    if p.is_zero() {
        return Ok(Expansion::new(Basis::Fundamental, 0));
    }
    let degree = p.homogeneous_degree().ok_or(Error::NotHomogeneous)? as usize;
    if degree == 0 {
        return Err(Error::NotQuasisymmetric("constant polynomials have no fundamental expansion".into()));
    }
    if p.vars() < degree {
        return Err(Error::InsufficientVariables { vars: p.vars(), degree });
    }
    let c = monomial_coefficients(p)?;
    let mut out = Expansion::new(Basis::Fundamental, degree);
    for (beta, coeff) in &c {
        let set = Composition::new(beta.clone())?.descent_set();
        let free: Vec<usize> = (1..degree).filter(|i| !set.contains(i)).collect();
        let neg = -coeff;
        for mask in 0u64..(1u64 << free.len()) {
            let mut sup: BTreeSet<usize> = set.clone();
            sup.extend(free.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e));
            let alpha = Composition::from_descent_set(&sup, degree)?;
            let added = sup.len() - set.len();
            out.add_term(alpha.parts(), if added.is_multiple_of(2) { coeff } else { &neg })?;
        }
    }
    Ok(out)
}

/// `Σ coeff · basis(index)` in `vars` variables.
pub fn expansion_to_poly(e: &Expansion, vars: usize) -> SparsePoly {
    let mut out = SparsePoly::zero(vars);
    for (index, c) in e.iter() {
        let basis_poly = match e.basis() {
            Basis::Fundamental => fundamental(&Composition::new(index.to_vec()).expect("validated"), vars),
            Basis::Monomial => monomial_quasisymmetric(&Composition::new(index.to_vec()).expect("validated"), vars),
            Basis::Schur => schur_ssyt(&Partition::new(index.to_vec()).expect("validated"), vars),
        };
        out = &out + &basis_poly.scale(c);
    }
    out
}
