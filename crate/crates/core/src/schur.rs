//! Schur functions indexed by weak compositions.
//!
//! `s_γ` for an arbitrary weak composition `γ` of length `n` is the
//! bialternant `Δ_γ / Δ`. Swapping adjacent entries of the shifted vector
//! `(γ_j + n − j)_j` negates it, so every `s_γ` is zero or `±s_λ` for a
//! partition `λ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coeff::QtCoeff;
use crate::combinat::{Partition, WeakComposition};
use crate::error::{Error, Result};
use crate::poly::{staircase, vandermonde, SparsePoly};

/// The normal form of `s_γ`: zero, or a signed partition-indexed Schur function.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignedSchur {
    Zero,
    Plus(Partition),
    Minus(Partition),
}

impl SignedSchur {
    /// `0`, `1` or `-1`.
    pub fn sign(&self) -> i32 {
        match self {
            SignedSchur::Zero => 0,
            SignedSchur::Plus(_) => 1,
            SignedSchur::Minus(_) => -1,
        }
    }

    pub fn shape(&self) -> Option<&Partition> {
        match self {
            SignedSchur::Zero => None,
            SignedSchur::Plus(p) | SignedSchur::Minus(p) => Some(p),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SignedSchur::Zero)
    }

    pub fn negate(&self) -> SignedSchur {
        match self {
            SignedSchur::Zero => SignedSchur::Zero,
            SignedSchur::Plus(p) => SignedSchur::Minus(p.clone()),
            SignedSchur::Minus(p) => SignedSchur::Plus(p.clone()),
        }
    }
}

impl fmt::Display for SignedSchur {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (sign, shape) = match self {
            SignedSchur::Zero => return write!(f, "0"),
            SignedSchur::Plus(p) => ('+', p),
            SignedSchur::Minus(p) => ('-', p),
        };
        let parts: Vec<String> = shape.parts().iter().map(ToString::to_string).collect();
        write!(f, "{sign}s[{}]", parts.join(","))
    }
}

impl FromStr for SignedSchur {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(SignedSchur::Zero);
        }
        let bad = || Error::Format(format!("not a signed Schur term: {s:?}"));
        let (negative, rest) = match s.as_bytes().first() {
            Some(b'+') => (false, &s[1..]),
            Some(b'-') => (true, &s[1..]),
            _ => return Err(bad()),
        };
        let inner = rest.strip_prefix("s[").and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let parts = if inner.is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<_>>()?
        };
        let shape = Partition::new(parts)?;
        Ok(if negative { SignedSchur::Minus(shape) } else { SignedSchur::Plus(shape) })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SignedSchurDoc {
    Zero { zero: bool },
    Term { sign: i32, shape: Partition },
}

impl Serialize for SignedSchur {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SignedSchur::Zero => SignedSchurDoc::Zero { zero: true },
            SignedSchur::Plus(p) => SignedSchurDoc::Term { sign: 1, shape: p.clone() },
            SignedSchur::Minus(p) => SignedSchurDoc::Term { sign: -1, shape: p.clone() },
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedSchur {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match SignedSchurDoc::deserialize(deserializer)? {
            SignedSchurDoc::Zero { zero: true } => Ok(SignedSchur::Zero),
            SignedSchurDoc::Term { sign: 1, shape } => Ok(SignedSchur::Plus(shape)),
            SignedSchurDoc::Term { sign: -1, shape } => Ok(SignedSchur::Minus(shape)),
            _ => Err(serde::de::Error::custom("sign must be 1 or -1, zero must be true")),
        }
    }
}

/// Normal form of `s_γ` under the adjacent-exchange straightening rule.
///
/// Zero exactly when the shifted vector `(γ_j + n − j)_j` has a repeated
/// entry; otherwise the sign of the permutation sorting it into strictly
/// decreasing order, with shape the sorted vector minus the staircase.
pub fn straighten(gamma: &WeakComposition) -> SignedSchur {
    let n = gamma.len();
    let mut shifted: Vec<usize> = gamma.parts().iter().enumerate().map(|(j, &g)| g + n - 1 - j).collect();
    // Insertion sort, counting transpositions for the sign.
    let mut odd = false;
    for i in 1..n {
        let mut j = i;
        while j > 0 && shifted[j - 1] <= shifted[j] {
            if shifted[j - 1] == shifted[j] {
                return SignedSchur::Zero;
            }
            shifted.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    let parts: Vec<usize> = shifted.iter().enumerate().map(|(j, &l)| l - (n - 1 - j)).collect();
    let shape = Partition::from_weakly_decreasing(parts).expect("sorted shifted vector minus staircase is a partition");
    if odd {
        SignedSchur::Minus(shape)
    } else {
        SignedSchur::Plus(shape)
    }
}

/// `Δ_γ / Δ` in `vars` variables; `γ` must have length `vars`.
pub fn schur_bialternant(gamma: &WeakComposition, vars: usize) -> Result<SparsePoly> {
    if gamma.len() != vars {
        return Err(Error::LengthOverflow { parts: gamma.len(), len: vars });
    }
    let exps: Vec<u32> = gamma.parts().iter().zip(staircase(vars)).map(|(&g, d)| g as u32 + d).collect();
    let alternant = SparsePoly::monomial(&exps, QtCoeff::one()).antisymmetrize();
    alternant.exact_divide(&vandermonde(vars))
}

/// `s_λ(x₁..x_N)` as the content generating function of semistandard tableaux
/// of shape `λ` with entries at most `N`.
pub fn schur_ssyt(lambda: &Partition, vars: usize) -> SparsePoly {
    let shape = lambda.parts();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&len| Vec::with_capacity(len)).collect();
    let mut content = vec![0u32; vars];
    let mut terms: Vec<(Vec<u32>, QtCoeff)> = Vec::new();
    fill_cell(shape, 0, &mut rows, &mut content, vars, &mut terms);
    SparsePoly::from_terms(vars, terms).expect("content vectors have length N")
}

fn fill_cell(
    shape: &[usize],
    row: usize,
    rows: &mut Vec<Vec<usize>>,
    content: &mut Vec<u32>,
    vars: usize,
    out: &mut Vec<(Vec<u32>, QtCoeff)>,
) {
    if row == shape.len() {
        out.push((content.clone(), QtCoeff::one()));
        return;
    }
    if rows[row].len() == shape[row] {
        fill_cell(shape, row + 1, rows, content, vars, out);
        return;
    }
    let col = rows[row].len();
    let left = rows[row].last().copied().unwrap_or(1);
    let above = if row > 0 { rows[row - 1][col] + 1 } else { 1 };
    for v in left.max(above)..=vars {
        rows[row].push(v);
        content[v - 1] += 1;
        fill_cell(shape, row, rows, content, vars, out);
        content[v - 1] -= 1;
        rows[row].pop();
    }
}
