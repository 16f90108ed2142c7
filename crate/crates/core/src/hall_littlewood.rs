//! Fillings of French Ferrers diagrams, their major-index and
//! inversion-triple statistics, and the Schur expansion of the modified
//! Hall–Littlewood polynomial `H̃_μ[X;0,t]` obtained from inversion-free
//! fillings.
//!
//! Conventions: row 1 is the bottom row with `μ₁` cells. The reading word
//! lists rows from the top row down, each left to right. A column is read
//! from top to bottom for the major index. A triple is two cells `u`, `v`
//! in one row with `u` left of `v`, plus the cell `w` directly below `u`
//! (a virtual `+∞` under the bottom row); with `a, b, c` the entries of
//! `u, v, w` it is an inversion when `a > b > c`, `b > c > a` or `c > a > b`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::coeff::QtCoeff;
use crate::combinat::{
    multinomial, rsk_insert, Composition, Decompositions, OrderedSetDecomposition, Partition, Permutation,
};
use crate::elw::elw_to_schur;
use crate::error::{Error, Result};
use crate::quasisym::{expansion_to_poly, Basis, Expansion};
use crate::schur::{straighten, SignedSchur};

pub const DEFAULT_MAX_N: usize = 9;

/// A bijective filling of the cells of `μ` by `1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: Partition,
    /// `rows[0]` is the bottom row.
    rows: Vec<Vec<usize>>,
}

impl Filling {
    pub fn new(shape: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lens != shape.parts() {
            return Err(Error::Format(format!("rows of lengths {lens:?} do not fit shape {shape}")));
        }
        let word: Vec<usize> = rows.iter().rev().flatten().copied().collect();
        Permutation::new(word)?;
        Ok(Self { shape, rows })
    }

    /// Places `word` into the cells in reading order.
    pub fn from_reading_word(shape: Partition, word: &Permutation) -> Result<Self> {
        if word.len() != shape.weight() {
            return Err(Error::NotAPermutation { word: word.word().to_vec(), n: shape.weight() });
        }
        let mut rows = vec![Vec::new(); shape.len()];
        let mut it = word.word().iter().copied();
        for (r, &len) in shape.parts().iter().enumerate().rev() {
            rows[r] = it.by_ref().take(len).collect();
        }
        Ok(Self { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.weight()
    }

    pub fn reading_word(&self) -> Permutation {
        Permutation::new(self.rows.iter().rev().flatten().copied().collect()).expect("filling is bijective")
    }

    /// Entries of column `c` (0-based) from top to bottom.
    pub fn column_word(&self, c: usize) -> Vec<usize> {
        self.rows.iter().rev().filter_map(|row| row.get(c).copied()).collect()
    }

    pub fn stats(&self) -> StatisticsTriple {
        StatisticsTriple { maj: maj_stat(self), inv: inv_stat(self), pides: pides(&self.reading_word()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatisticsTriple {
    pub maj: usize,
    pub inv: usize,
    pub pides: Composition,
}

/// Sum of the descent positions of a word.
fn word_maj(w: &[usize]) -> usize {
    w.windows(2).enumerate().filter(|(_, p)| p[0] > p[1]).map(|(i, _)| i + 1).sum()
}

/// Sum over columns of the major index of the column read top to bottom.
pub fn maj_stat(f: &Filling) -> usize {
    let width = f.shape.parts().first().copied().unwrap_or(0);
    (0..width).map(|c| word_maj(&f.column_word(c))).sum()
}

fn is_inversion_triple(a: usize, b: usize, c: usize) -> bool {
    (a > b && b > c) || (b > c && c > a) || (c > a && a > b)
}

fn row_inversions(row: &[usize], below: Option<&[usize]>) -> usize {
    let mut count = 0;
    for i in 0..row.len() {
        let c = below.map_or(usize::MAX, |b| b[i]);
        for j in i + 1..row.len() {
            if is_inversion_triple(row[i], row[j], c) {
                count += 1;
            }
        }
    }
    count
}

/// Number of inversion triples.
pub fn inv_stat(f: &Filling) -> usize {
    (0..f.rows.len()).map(|r| row_inversions(&f.rows[r], if r == 0 { None } else { Some(&f.rows[r - 1]) })).sum()
}

/// The composition of the descent set of `σ⁻¹`.
pub fn pides(sigma: &Permutation) -> Composition {
    Composition::from_descent_set(&sigma.inverse().descents(), sigma.len()).expect("descents lie in 1..n-1")
}

/// The unique inversion-free filling whose rows hold the blocks of `d`.
///
/// The bottom row is increasing; each higher row is found by searching the
/// orderings of its block for the ones with no inversion triple against the
/// row beneath, which must be exactly one.
pub fn inv_zero_filling(mu: &Partition, d: &OrderedSetDecomposition) -> Result<Filling> {
    let blocks = d.blocks();
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
    rows.push(blocks[0].clone());
    for block in &blocks[1..] {
        let below = rows.last().expect("bottom row placed");
        let mut candidate = block.clone();
        let mut found: Option<Vec<usize>> = None;
        loop {
            if row_inversions(&candidate, Some(below)) == 0 {
                if found.is_some() {
                    return Err(Error::ConventionInconsistency(format!("two orderings of {block:?} above {below:?}")));
                }
                found = Some(candidate.clone());
            }
            if !crate::combinat::next_permutation(&mut candidate) {
                break;
            }
        }
        let row =
            found.ok_or_else(|| Error::ConventionInconsistency(format!("no ordering of {block:?} above {below:?}")))?;
        rows.push(row);
    }
    Filling::new(mu.clone(), rows)
}

/// Streams one inversion-free filling per ordered set decomposition.
pub fn inv_zero_fillings(mu: &Partition) -> impl Iterator<Item = Result<Filling>> + '_ {
    Decompositions::new(mu).map(move |d| inv_zero_filling(mu, &d))
}

/// Schur expansion whose coefficients are polynomials in `t` alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SchurExpansionT(Expansion);

impl SchurExpansionT {
    pub fn new(e: Expansion) -> Result<Self> {
        if e.basis() != Basis::Schur {
            return Err(Error::BasisMismatch { expected: Basis::Schur.to_string(), found: e.basis().to_string() });
        }
        if let Some((index, _)) = e.iter().find(|(_, c)| !c.is_q_free()) {
            return Err(Error::Format(format!("coefficient of s{index:?} involves q")));
        }
        Ok(Self(e))
    }

    pub fn expansion(&self) -> &Expansion {
        &self.0
    }

    pub fn into_expansion(self) -> Expansion {
        self.0
    }

    /// Coefficients of `1, t, t², …` for `s_λ`.
    pub fn t_coefficients(&self, lambda: &Partition) -> Vec<BigInt> {
        let c = self.0.coeff(lambda.parts());
        let top = c.iter().map(|(&(_, b), _)| b as usize + 1).max().unwrap_or(0);
        (0..top).map(|e| c.coeff(0, e as u32)).collect()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }
}

/// How the straightened `s_{pides(σ)}` of a filling came out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Alternative {
    Zero,
    Minus,
    Plus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FillingRecord {
    pub reading_word: Permutation,
    pub maj: usize,
    pub pides: Composition,
    pub class: Alternative,
    pub straightened: SignedSchur,
    pub rsk_shape: Partition,
    pub kept: bool,
}

/// Outcome of the Schensted leftover experiment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentReport {
    pub mu: Partition,
    pub fillings: usize,
    pub zero: usize,
    pub minus: usize,
    pub plus: usize,
    pub kept: usize,
    pub conjectured: SchurExpansionT,
    #[serde(rename = "true")]
    pub actual: SchurExpansionT,
    /// `true − conjectured`, one entry per partition with nonzero coefficient.
    pub discrepancy: Vec<DiscrepancyTerm>,
    #[serde(skip)]
    pub records: Vec<FillingRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscrepancyTerm {
    pub index: Partition,
    pub coeff: QtCoeff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityRecord {
    pub mu: Partition,
    pub fillings: usize,
    #[serde(serialize_with = "ser_biguint")]
    pub multinomial: BigUint,
    pub census_ok: bool,
    pub positive: bool,
    pub one_row_coefficient_is_one: bool,
    pub expansion: SchurExpansionT,
}

fn ser_biguint<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(small) => s.serialize_u64(small),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

/// Entry point for the filling-based computations, with a size bound that
/// fails fast instead of starting a runaway enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HallLittlewoodLab {
    max_n: usize,
}

impl Default for HallLittlewoodLab {
    fn default() -> Self {
        Self { max_n: DEFAULT_MAX_N }
    }
}

impl HallLittlewoodLab {
    pub fn new(max_n: usize) -> Self {
        Self { max_n }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    fn check(&self, mu: &Partition) -> Result<()> {
        if mu.weight() > self.max_n {
            return Err(Error::BoundExceeded { n: mu.weight(), max: self.max_n });
        }
        if mu.is_empty() {
            return Err(Error::InvalidPartition(Vec::new()));
        }
        Ok(())
    }

    /// Bounded form of [`inv_zero_fillings`].
    pub fn inv_zero_fillings<'a>(&self, mu: &'a Partition) -> Result<impl Iterator<Item = Result<Filling>> + 'a> {
        self.check(mu)?;
        Ok(inv_zero_fillings(mu))
    }

    /// `Σ_{inv = 0} t^{maj} F_{pides}` over inversion-free fillings.
    pub fn inv_zero_f_expansion(&self, mu: &Partition) -> Result<Expansion> {
        self.check(mu)?;
        let mut counts: BTreeMap<(Composition, usize), i64> = BTreeMap::new();
        for filling in inv_zero_fillings(mu) {
            let filling = filling?;
            *counts.entry((pides(&filling.reading_word()), maj_stat(&filling))).or_default() += 1;
        }
        let mut e = Expansion::new(Basis::Fundamental, mu.weight());
        for ((alpha, maj), c) in counts {
            e.add_term(alpha.parts(), &QtCoeff::term(0, maj as u32, c))?;
        }
        Ok(e)
    }

    /// `Σ_σ q^{inv} t^{maj} F_{pides}` over all `n!` fillings.
    pub fn full_f_expansion(&self, mu: &Partition) -> Result<Expansion> {
        self.check(mu)?;
        let mut counts: BTreeMap<(Composition, usize, usize), i64> = BTreeMap::new();
        for sigma in Permutation::all(mu.weight()) {
            let f = Filling::from_reading_word(mu.clone(), &sigma)?;
            let st = f.stats();
            *counts.entry((st.pides, st.inv, st.maj)).or_default() += 1;
        }
        let mut e = Expansion::new(Basis::Fundamental, mu.weight());
        for ((alpha, inv, maj), c) in counts {
            e.add_term(alpha.parts(), &QtCoeff::term(inv as u32, maj as u32, c))?;
        }
        Ok(e)
    }

    /// Schur expansion of `H̃_μ[X;0,t]`.
    pub fn hll_expansion(&self, mu: &Partition) -> Result<SchurExpansionT> {
        SchurExpansionT::new(elw_to_schur(&self.inv_zero_f_expansion(mu)?)?)
    }

    /// Whether `Σ_{inv=0} t^{maj} F_{pides}` is symmetric in `n` variables,
    /// separately in every power of `t`.
    pub fn symmetry_check(&self, mu: &Partition) -> Result<bool> {
        let e = self.inv_zero_f_expansion(mu)?;
        Ok(expansion_to_poly(&e, mu.weight()).is_symmetric())
    }

    /// Whether `Σ_σ q^{inv} t^{maj} F_{pides}` is symmetric in `n` variables,
    /// separately in every bidegree.
    pub fn full_symmetry_check(&self, mu: &Partition) -> Result<bool> {
        let e = self.full_f_expansion(mu)?;
        Ok(expansion_to_poly(&e, mu.weight()).is_symmetric())
    }

    /// Schur positivity and filling census for one shape.
    pub fn positivity(&self, mu: &Partition) -> Result<PositivityRecord> {
        self.check(mu)?;
        let fillings = inv_zero_fillings(mu).try_fold(0usize, |n, f| f.map(|_| n + 1))?;
        let expected = multinomial(mu);
        let e = self.hll_expansion(mu)?;
        let one_row = Partition::new(vec![mu.weight()]).expect("nonempty");
        Ok(PositivityRecord {
            mu: mu.clone(),
            fillings,
            census_ok: BigUint::from(fillings) == expected,
            multinomial: expected,
            positive: e.is_positive(),
            one_row_coefficient_is_one: e.expansion().coeff(one_row.parts()).is_one(),
            expansion: e,
        })
    }

    /// Keeps the fillings whose `s_{pides}` straightens to `+s_λ` and whose
    /// reading word has RSK shape `λ`, and compares `Σ_kept t^{maj} s_λ`
    /// with the true expansion.
    pub fn leftover_experiment(&self, mu: &Partition) -> Result<ExperimentReport> {
        self.check(mu)?;
        let n = mu.weight();
        let mut records = Vec::new();
        let mut conjectured = Expansion::new(Basis::Schur, n);
        let (mut zero, mut minus, mut plus, mut kept) = (0, 0, 0, 0);
        for filling in inv_zero_fillings(mu) {
            let filling = filling?;
            let sigma = filling.reading_word();
            let maj = maj_stat(&filling);
            let alpha = pides(&sigma);
            let straightened = straighten(&alpha.pad(n)?);
            let rsk_shape = rsk_insert(sigma.word())?.shape();
            let class = match &straightened {
                SignedSchur::Zero => Alternative::Zero,
                SignedSchur::Minus(_) => Alternative::Minus,
                SignedSchur::Plus(_) => Alternative::Plus,
            };
            let keep = matches!(&straightened, SignedSchur::Plus(lambda) if *lambda == rsk_shape);
            match class {
                Alternative::Zero => zero += 1,
                Alternative::Minus => minus += 1,
                Alternative::Plus => plus += 1,
            }
            if keep {
                kept += 1;
                conjectured.add_term(rsk_shape.parts(), &QtCoeff::t_pow(maj as u32))?;
            }
            records.push(FillingRecord {
                reading_word: sigma,
                maj,
                pides: alpha,
                class,
                straightened,
                rsk_shape,
                kept: keep,
            });
        }
        let actual = self.hll_expansion(mu)?;
        let diff = actual.expansion().difference(&conjectured)?;
        let discrepancy = diff
            .iter()
            .map(|(index, coeff)| DiscrepancyTerm {
                index: Partition::new(index.to_vec()).expect("Schur index"),
                coeff: coeff.clone(),
            })
            .collect();
        Ok(ExperimentReport {
            mu: mu.clone(),
            fillings: records.len(),
            zero,
            minus,
            plus,
            kept,
            conjectured: SchurExpansionT::new(conjectured)?,
            actual,
            discrepancy,
            records,
        })
    }
}
