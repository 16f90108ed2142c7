use serde::Serialize;

use super::{Partition, Permutation};
use crate::error::Result;

/// A Young tableau in English row order: `rows[0]` is the longest row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("tableau rows shrink")
    }

    /// Rows increase strictly, columns increase strictly, and the row lengths
    /// form a partition.
    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| !r.is_empty() && r.windows(2).all(|w| w[0] < w[1]));
        let shape_ok = self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        let mut entries: Vec<usize> = self.rows.iter().flatten().copied().collect();
        entries.sort_unstable();
        let bijective = entries.iter().enumerate().all(|(i, &e)| e == i + 1);
        rows_ok && shape_ok && cols_ok && bijective
    }
}

/// Insertion tableau `P` and recording tableau `Q` of a common shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandardTableauPair {
    pub p: Tableau,
    pub q: Tableau,
}

impl StandardTableauPair {
    pub fn shape(&self) -> Partition {
        self.p.shape()
    }
}

/// Robinson–Schensted row insertion of a permutation word.
pub fn rsk_insert(word: &[usize]) -> Result<StandardTableauPair> {
    let sigma = Permutation::new(word.to_vec())?;
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in sigma.word().iter().enumerate() {
        let mut bump = x;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![bump]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > bump) {
                Some(col) => {
                    bump = std::mem::replace(&mut p[row][col], bump);
                    row += 1;
                }
                None => {
                    p[row].push(bump);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    Ok(StandardTableauPair { p: Tableau { rows: p }, q: Tableau { rows: q } })
}
