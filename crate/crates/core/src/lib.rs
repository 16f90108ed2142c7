//! Exact symmetric-function arithmetic for converting fundamental
//! quasisymmetric expansions into Schur expansions.
//!
//! A symmetric polynomial `P = Σ a_α F_α` equals `Σ a_α s_α`, where each
//! composition-indexed `s_α` is straightened to zero or `±s_λ`. The crate
//! provides the polynomial machinery to check this, the sign-reversing
//! involution behind it, and the modified Hall–Littlewood application built
//! on inversion-free fillings.

pub mod coeff;
pub mod combinat;
pub mod elw;
pub mod error;
pub mod hall_littlewood;
pub mod poly;
pub mod quasisym;
pub mod schur;

pub use coeff::QtCoeff;
pub use combinat::{Composition, Partition, Permutation, WeakComposition};
pub use error::{Error, Result};
pub use poly::SparsePoly;
pub use quasisym::{Basis, Expansion};
pub use schur::SignedSchur;
