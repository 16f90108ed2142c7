//! Compositions, partitions and weak compositions, plus the enumeration
//! machinery built on them.
//!
//! The three sequence types are kept apart on purpose: a [`Composition`]
//! indexes fundamentals, a [`WeakComposition`] indexes unstraightened Schur
//! alternants, and a [`Partition`] indexes genuine Schur functions. Moving
//! between them always goes through an explicit conversion.

mod decomposition;
mod perm;
mod rsk;

pub use decomposition::{multinomial, Decompositions, OrderedSetDecomposition};
pub(crate) use perm::next_permutation;
pub use perm::Permutation;
pub use rsk::{rsk_insert, StandardTableauPair, Tableau};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sequence of positive integers with positive total weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The partial sums `{α₁, α₁+α₂, …, α₁+⋯+α_{k−1}}`, a subset of `1..n−1`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        self.parts[..self.parts.len() - 1]
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Inverse of [`Composition::descent_set`] for compositions of `n`.
    pub fn from_descent_set(set: &BTreeSet<usize>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidComposition(Vec::new()));
        }
        if let Some(&element) = set.iter().find(|&&e| e == 0 || e >= n) {
            return Err(Error::InvalidDescentSet { element, n });
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &e in set.iter().chain(std::iter::once(&n)) {
            parts.push(e - prev);
            prev = e;
        }
        Ok(Self { parts })
    }

    /// Appends zeros up to length `len`.
    pub fn pad(&self, len: usize) -> Result<WeakComposition> {
        if self.parts.len() > len {
            return Err(Error::LengthOverflow { parts: self.parts.len(), len });
        }
        let mut parts = self.parts.clone();
        parts.resize(len, 0);
        Ok(WeakComposition::new(parts))
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// All `2^{n−1}` compositions of `n`, ordered by descent set bitmask.
    pub fn all(n: usize) -> impl Iterator<Item = Composition> {
        let count: u64 = if n == 0 { 0 } else { 1 << (n - 1) };
        (0..count).map(move |mask| {
            let set = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            Composition::from_descent_set(&set, n).expect("subset of 1..n-1")
        })
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Self { parts: p.parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.parts)
    }
}

/// A weakly decreasing sequence of positive integers. The empty partition
/// (of zero) is allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    /// Drops trailing zeros from a weakly decreasing sequence.
    pub fn from_weakly_decreasing(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn pad(&self, len: usize) -> Result<WeakComposition> {
        if self.parts.len() > len {
            return Err(Error::LengthOverflow { parts: self.parts.len(), len });
        }
        let mut parts = self.parts.clone();
        parts.resize(len, 0);
        Ok(WeakComposition::new(parts))
    }

    pub fn to_composition(&self) -> Result<Composition> {
        Composition::new(self.parts.clone())
    }

    /// Partitions of `n` in reverse lexicographic order, starting at `(n)`.
    pub fn all(n: usize) -> PartitionIter {
        PartitionIter { next: Some(if n == 0 { Vec::new() } else { vec![n] }) }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.parts)
    }
}

pub struct PartitionIter {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: strip trailing ones, decrement the last part > 1, then
        // refill greedily with parts no larger than it.
        let mut parts = current.clone();
        let mut ones = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            ones += 1;
        }
        if let Some(last) = parts.pop() {
            let cap = last - 1;
            parts.push(cap);
            let mut rest = ones + 1;
            while rest > 0 {
                let p = rest.min(cap);
                parts.push(p);
                rest -= p;
            }
            self.next = Some(parts);
        }
        Some(Partition { parts: current })
    }
}

/// A sequence of non-negative integers of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition {
    parts: Vec<usize>,
}

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// All weak compositions of `weight` into exactly `len` parts, in
    /// lexicographic order.
    pub fn all(weight: usize, len: usize) -> Vec<WeakComposition> {
        fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<WeakComposition>) {
            if slots == 1 {
                cur.push(rest);
                out.push(WeakComposition::new(cur.clone()));
                cur.pop();
                return;
            }
            for v in 0..=rest {
                cur.push(v);
                rec(rest - v, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if len == 0 {
            if weight == 0 {
                out.push(WeakComposition::new(Vec::new()));
            }
            return out;
        }
        rec(weight, len, &mut Vec::with_capacity(len), &mut out);
        out
    }
}

impl From<Vec<usize>> for WeakComposition {
    fn from(parts: Vec<usize>) -> Self {
        Self::new(parts)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.parts)
    }
}

fn write_seq(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn descent_set_examples() {
        let set: Vec<_> = comp(&[2, 3, 2, 1]).descent_set().into_iter().collect();
        assert_eq!(set, vec![2, 5, 7]);
        assert!(comp(&[5]).descent_set().is_empty());
        let set: Vec<_> = comp(&[1, 1, 1]).descent_set().into_iter().collect();
        assert_eq!(set, vec![1, 2]);
    }

    #[test]
    fn from_descent_set_examples() {
        let s = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(Composition::from_descent_set(&s(&[2, 5, 7]), 8).unwrap(), comp(&[2, 3, 2, 1]));
        assert_eq!(Composition::from_descent_set(&s(&[]), 5).unwrap(), comp(&[5]));
        assert_eq!(Composition::from_descent_set(&s(&[1, 2, 3]), 4).unwrap(), comp(&[1, 1, 1, 1]));
        assert_eq!(Composition::from_descent_set(&s(&[4]), 4), Err(Error::InvalidDescentSet { element: 4, n: 4 }));
        assert!(Composition::from_descent_set(&s(&[0]), 3).is_err());
    }

    #[test]
    fn pad_examples() {
        assert_eq!(comp(&[2, 3, 2, 1]).pad(8).unwrap().parts(), &[2, 3, 2, 1, 0, 0, 0, 0]);
        assert_eq!(comp(&[1]).pad(1).unwrap().parts(), &[1]);
        assert_eq!(comp(&[1, 1]).pad(4).unwrap().parts(), &[1, 1, 0, 0]);
        assert_eq!(comp(&[1, 1, 1]).pad(2), Err(Error::LengthOverflow { parts: 3, len: 2 }));
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(Composition::new(vec![]).is_err());
        assert!(Composition::new(vec![1, 0, 2]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_weakly_decreasing(vec![3, 1, 0, 0]).unwrap().parts(), &[3, 1]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let five: Vec<Vec<usize>> = Partition::all(4).map(|p| p.parts().to_vec()).collect();
        assert_eq!(five, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn composition_counts() {
        for n in 1..=8 {
            let all: BTreeSet<_> = Composition::all(n).collect();
            assert_eq!(all.len(), 1 << (n - 1));
            assert!(all.iter().all(|c| c.weight() == n));
        }
    }

    #[test]
    fn weak_composition_counts() {
        // C(weight + len - 1, len - 1)
        assert_eq!(WeakComposition::all(4, 3).len(), 15);
        assert_eq!(WeakComposition::all(0, 3).len(), 1);
        assert_eq!(WeakComposition::all(6, 5).len(), 210);
    }

    proptest! {
        #[test]
        fn descent_set_round_trip(parts in prop::collection::vec(1usize..5, 1..7)) {
            let alpha = Composition::new(parts).unwrap();
            let set = alpha.descent_set();
            prop_assert_eq!(set.len(), alpha.len() - 1);
            prop_assert_eq!(Composition::from_descent_set(&set, alpha.weight()).unwrap(), alpha);
        }

        #[test]
        fn subset_round_trip(n in 1usize..12, mask in any::<u16>()) {
            let set: BTreeSet<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let alpha = Composition::from_descent_set(&set, n).unwrap();
            prop_assert_eq!(alpha.descent_set(), set);
        }
    }
}
