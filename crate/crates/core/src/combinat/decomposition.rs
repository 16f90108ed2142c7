use num_bigint::BigUint;
use num_traits::One;

use super::perm::next_permutation;
use super::Partition;

/// An ordered decomposition `T₁ + ⋯ + T_k = {1..n}` with `|Tᵢ| = μᵢ`.
///
/// Stored as the membership word: `membership[j]` is the (0-based) block
/// holding the value `j + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedSetDecomposition {
    membership: Vec<usize>,
    blocks: usize,
}

impl OrderedSetDecomposition {
    pub fn membership(&self) -> &[usize] {
        &self.membership
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks
    }

    /// The elements of block `i` (0-based) in increasing order.
    pub fn block(&self, i: usize) -> Vec<usize> {
        self.membership.iter().enumerate().filter(|&(_, &b)| b == i).map(|(j, _)| j + 1).collect()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (j, &b) in self.membership.iter().enumerate() {
            out[b].push(j + 1);
        }
        out
    }
}

/// Streams every ordered set decomposition of shape `μ`, lexicographically by
/// membership word.
pub struct Decompositions {
    next: Option<Vec<usize>>,
    blocks: usize,
}

impl Decompositions {
    pub fn new(mu: &Partition) -> Self {
        let word: Vec<usize> = mu.parts().iter().enumerate().flat_map(|(i, &m)| std::iter::repeat_n(i, m)).collect();
        Self { next: Some(word), blocks: mu.len() }
    }
}

impl Iterator for Decompositions {
    type Item = OrderedSetDecomposition;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(OrderedSetDecomposition { membership: current, blocks: self.blocks })
    }
}

/// `n! / (μ₁! ⋯ μ_k!)`.
pub fn multinomial(mu: &Partition) -> BigUint {
    let fact = |m: usize| (1..=m).fold(BigUint::one(), |acc, i| acc * i);
    mu.parts().iter().fold(fact(mu.weight()), |acc, &m| acc / fact(m))
}
