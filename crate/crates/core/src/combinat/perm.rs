use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &w in &word {
            if w == 0 || w > n || seen[w] {
                return Err(Error::NotAPermutation { word, n });
            }
            seen[w] = true;
        }
        Ok(Self { word })
    }

    pub fn identity(n: usize) -> Self {
        Self { word: (1..=n).collect() }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.word.len()];
        for (i, &w) in self.word.iter().enumerate() {
            inv[w - 1] = i + 1;
        }
        Self { word: inv }
    }

    /// Positions `i` (1-based) with `w_i > w_{i+1}`.
    pub fn descents(&self) -> BTreeSet<usize> {
        self.word.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(i, _)| i + 1).collect()
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i32 {
        let mut visited = vec![false; self.word.len()];
        let mut sign = 1;
        for start in 0..self.word.len() {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.word[i] - 1;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Every permutation of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((1..=n).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut succ = current.clone();
            if next_permutation(&mut succ) {
                next = Some(succ);
            }
            Some(Permutation { word: current })
        })
    }
}

/// Advances `v` to its lexicographic successor among the rearrangements of its
/// multiset of entries. Returns `false` (leaving `v` untouched) at the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Self::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn inverse_and_descents() {
        let p = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(p.inverse().word(), &[2, 3, 1]);
        assert_eq!(p.inverse().descents().into_iter().collect::<Vec<_>>(), vec![2]);
        assert_eq!(p.sign(), 1);
        assert_eq!(Permutation::new(vec![2, 1, 3]).unwrap().sign(), -1);
    }

    #[test]
    fn enumeration_is_complete_and_sign_balanced() {
        for n in 0..=6 {
            let all: Vec<_> = Permutation::all(n).collect();
            let expected: usize = (1..=n).product();
            assert_eq!(all.len(), expected);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            if n >= 2 {
                assert_eq!(all.iter().map(|p| p.sign()).sum::<i32>(), 0);
            }
        }
    }
}
