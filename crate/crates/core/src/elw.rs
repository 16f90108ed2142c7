//! Fundamental-to-Schur conversion by composition-indexed replacement, and
//! the sign-reversing involution that proves it.
//!
//! For a composition `α ⊨ n` the alternant of `F_α(x₁..x_n) · x^δ` is a sum
//! over constrained monomials `x_{a₁}⋯x_{a_n}` (weakly increasing `a` with
//! strict rises at `Set(α)`). The involution pairs these monomials so that
//! paired terms straighten to opposite Schur functions; the only survivor is
//! `x₁^{α₁}⋯x_k^{α_k}`, whence `Δ⁻¹ 𝒜_n F_α x^δ = s_{α̃}`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::coeff::QtCoeff;
use crate::combinat::{Composition, WeakComposition};
use crate::error::{Error, Result};
use crate::poly::{staircase, SparsePoly};
use crate::quasisym::{Basis, Expansion};
use crate::schur::{straighten, SignedSchur};

/// Replaces every `F_α` by `s_{α̃}` and straightens, accumulating the signed
/// coefficients onto partitions.
///
/// When the underlying polynomial is symmetric the result is its Schur
/// expansion; otherwise it is a formal signed combination.
pub fn elw_to_schur(e: &Expansion) -> Result<Expansion> {
    if e.basis() != Basis::Fundamental {
        return Err(Error::BasisMismatch { expected: Basis::Fundamental.to_string(), found: e.basis().to_string() });
    }
    let n = e.degree();
    let mut out = Expansion::new(Basis::Schur, n);
    for (index, c) in e.iter() {
        let alpha = Composition::new(index.to_vec())?;
        match straighten(&alpha.pad(n)?) {
            SignedSchur::Zero => {}
            SignedSchur::Plus(shape) => out.add_term(shape.parts(), c)?,
            SignedSchur::Minus(shape) => out.add_term(shape.parts(), &-c)?,
        }
    }
    Ok(out)
}

/// A weakly increasing sequence `1 ≤ a₁ ≤ ⋯ ≤ a_n ≤ n` with `a_i < a_{i+1}`
/// whenever `i ∈ Set(α)`, standing for the monomial `x_{a₁}⋯x_{a_n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ConstrainedMonomial {
    sequence: Vec<usize>,
}

impl ConstrainedMonomial {
    /// Checks membership in the constrained family of `alpha`.
    pub fn new(sequence: Vec<usize>, alpha: &Composition) -> Result<Self> {
        let n = alpha.weight();
        let set = alpha.descent_set();
        let in_range = sequence.len() == n && sequence.iter().all(|&a| (1..=n).contains(&a));
        let ordered = (1..sequence.len()).all(|i| {
            let (a, b) = (sequence[i - 1], sequence[i]);
            if set.contains(&i) {
                a < b
            } else {
                a <= b
            }
        });
        if !(in_range && ordered) {
            return Err(Error::NotConstrained(sequence));
        }
        Ok(Self { sequence })
    }

    /// Rebuilds the weakly increasing sequence with content `gamma`.
    fn from_exponent(gamma: &[usize]) -> Self {
        let sequence = gamma.iter().enumerate().flat_map(|(i, &g)| std::iter::repeat_n(i + 1, g)).collect();
        Self { sequence }
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// `γ(u)_i = #{j : a_j = i}`, a weak composition of `n` into `n` parts.
    pub fn exponent(&self) -> WeakComposition {
        let n = self.sequence.len();
        let mut gamma = vec![0; n];
        for &a in &self.sequence {
            gamma[a - 1] += 1;
        }
        WeakComposition::new(gamma)
    }

    /// `γ(u) + δ_n`.
    pub fn full_exponent(&self) -> Vec<u32> {
        self.exponent().parts().iter().zip(staircase(self.sequence.len())).map(|(&g, d)| g as u32 + d).collect()
    }
}

/// Lexicographic stream over the constrained family of a composition.
pub struct ConstrainedMonomials {
    next: Option<Vec<usize>>,
    /// `strict[i]` is set when `a_{i+1} < a_{i+2}` is forced (0-based `i`).
    strict: Vec<bool>,
    /// Largest admissible value at each position.
    cap: Vec<usize>,
}

impl ConstrainedMonomials {
    fn fill_from(&self, seq: &mut [usize], from: usize) {
        for i in from..seq.len() {
            seq[i] = seq[i - 1] + usize::from(self.strict[i - 1]);
        }
    }
}

impl Iterator for ConstrainedMonomials {
    type Item = ConstrainedMonomial;

    fn next(&mut self) -> Option<ConstrainedMonomial> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if let Some(i) = (0..succ.len()).rev().find(|&i| succ[i] < self.cap[i]) {
            succ[i] += 1;
            self.fill_from(&mut succ, i + 1);
            self.next = Some(succ);
        }
        Some(ConstrainedMonomial { sequence: current })
    }
}

/// All constrained monomials of `alpha`, in lexicographic order of `a`.
pub fn constrained_monomials(alpha: &Composition) -> ConstrainedMonomials {
    let n = alpha.weight();
    let set = alpha.descent_set();
    let strict: Vec<bool> = (1..n).map(|i| set.contains(&i)).collect();
    // a_i ≤ n − #{strict rises at positions ≥ i}
    let mut cap = vec![n; n];
    for i in (0..n.saturating_sub(1)).rev() {
        cap[i] = cap[i + 1] - usize::from(strict[i]);
    }
    let mut it = ConstrainedMonomials { next: None, strict, cap };
    let mut first = vec![1; n];
    it.fill_from(&mut first, 1);
    it.next = Some(first);
    it
}

/// Where the involution acts on a non-fixed monomial: the first `s` blocks
/// of `α` sit exactly on `x₁..x_s`, and block `s+1` spreads over
/// `x_{s+1}..x_{s+r}` with exponents `b_{s+1}..b_{s+r}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionStep {
    pub s: usize,
    pub r: usize,
    /// `(b_{s+r−1}, b_{s+r})` before and after the exchange.
    pub before: (usize, usize),
    pub after: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionOutcome {
    /// `γ(u) = α̃`.
    FixedPoint,
    Image {
        image: ConstrainedMonomial,
        step: InvolutionStep,
    },
}

/// The block data `(s, r)` of a non-fixed monomial, or `None` at the fixed point.
pub fn block_structure(u: &ConstrainedMonomial, alpha: &Composition) -> Option<(usize, usize)> {
    let gamma = u.exponent();
    let g = gamma.parts();
    let parts = alpha.parts();
    let s = (0..parts.len()).take_while(|&i| g[i] == parts[i]).count();
    if s == parts.len() {
        return None;
    }
    // Block s+1 occupies positions start..start+α_{s+1} of the sequence.
    let start: usize = parts[..s].iter().sum();
    let top = u.sequence()[start + parts[s] - 1];
    Some((s, top - s))
}

/// Applies the involution: swaps `(b_{s+r−1}, b_{s+r})` for
/// `(b_{s+r} − 1, b_{s+r−1} + 1)`, the straightening exchange on positions
/// `s+r−1, s+r` of the exponent vector.
pub fn involution(u: &ConstrainedMonomial, alpha: &Composition) -> Result<InvolutionOutcome> {
    let u = ConstrainedMonomial::new(u.sequence().to_vec(), alpha)?;
    let Some((s, r)) = block_structure(&u, alpha) else {
        return Ok(InvolutionOutcome::FixedPoint);
    };
    let mut gamma = u.exponent().parts().to_vec();
    debug_assert!(r >= 2);
    debug_assert_eq!(gamma[s..s + r].iter().sum::<usize>(), alpha.parts()[s]);
    let (i, j) = (s + r - 2, s + r - 1);
    let before = (gamma[i], gamma[j]);
    debug_assert!(before.1 > 0);
    let after = (before.1 - 1, before.0 + 1);
    gamma[i] = after.0;
    gamma[j] = after.1;
    let image = ConstrainedMonomial::from_exponent(&gamma);
    Ok(InvolutionOutcome::Image { image, step: InvolutionStep { s, r, before, after } })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseResults {
    /// Exactly one monomial is the fixed point, and it has exponent `α̃`.
    pub single_fixed_point: bool,
    /// Every other monomial maps into the family, back again under a second
    /// application, keeps `(s, r)`, and straightens to the negative of its image.
    pub sign_reversing_pairing: bool,
    /// `Σ_u straighten(γ(u)) = straighten(α̃)` as signed Schur expansions.
    pub signed_sum_telescopes: bool,
    /// `Σ_u 𝒜_n x^{γ(u)+δ} = 𝒜_n x^{α̃+δ}` as polynomials.
    pub polynomial_identity: bool,
}

impl ClauseResults {
    pub fn all(&self) -> bool {
        self.single_fixed_point && self.sign_reversing_pairing && self.signed_sum_telescopes && self.polynomial_identity
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub clause: String,
    pub sequence: Vec<usize>,
    pub detail: String,
}

/// Outcome of [`verify_involution`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub alpha: Composition,
    pub n: usize,
    pub monomials: usize,
    pub fixed_points: usize,
    /// Exponent of the fixed point, when exactly one was found.
    pub fixed_point: Option<WeakComposition>,
    /// Two-element orbits `{u, I(u)}` with `u ≠ I(u)`.
    pub pairs: usize,
    /// Monomials with `I(u) = u`; their Schur value is zero.
    pub self_paired: usize,
    pub target: SignedSchur,
    pub clauses: ClauseResults,
    pub passed: bool,
    pub witness: Option<Witness>,
}

/// Runs the involution over the whole constrained family of `alpha` and
/// checks the four cancellation clauses.
pub fn verify_involution(alpha: &Composition) -> Result<VerificationReport> {
    let n = alpha.weight();
    let target_exponent = alpha.pad(n)?;
    let target = straighten(&target_exponent);
    let family: Vec<ConstrainedMonomial> = constrained_monomials(alpha).collect();
    let members: BTreeSet<&ConstrainedMonomial> = family.iter().collect();

    let mut witness: Option<Witness> = None;
    let mut note = |clause: &str, u: &ConstrainedMonomial, detail: String| {
        if witness.is_none() {
            witness = Some(Witness { clause: clause.into(), sequence: u.sequence().to_vec(), detail });
        }
    };

    let mut fixed = Vec::new();
    let mut pairs = 0;
    let mut self_paired = 0;
    let mut pairing_ok = true;
    let mut sum = Expansion::new(Basis::Schur, n);
    let mut shifted_sum = SparsePoly::zero(n);

    for u in &family {
        let value = straighten(&u.exponent());
        if let Some(shape) = value.shape() {
            sum.add_term(shape.parts(), &QtCoeff::from_int(value.sign()))?;
        }
        shifted_sum = &shifted_sum + &SparsePoly::monomial(&u.full_exponent(), QtCoeff::one());

        match involution(u, alpha)? {
            InvolutionOutcome::FixedPoint => fixed.push(u.clone()),
            InvolutionOutcome::Image { image, step } => {
                if !members.contains(&image) {
                    pairing_ok = false;
                    note("sign_reversing_pairing", u, format!("image {:?} leaves the family", image.sequence()));
                    continue;
                }
                if block_structure(&image, alpha) != Some((step.s, step.r)) {
                    pairing_ok = false;
                    note("sign_reversing_pairing", u, "image has different (s, r)".into());
                }
                match involution(&image, alpha)? {
                    InvolutionOutcome::Image { image: back, .. } if &back == u => {}
                    _ => {
                        pairing_ok = false;
                        note("sign_reversing_pairing", u, "second application does not return".into());
                    }
                }
                let image_value = straighten(&image.exponent());
                if image_value != value.negate() {
                    pairing_ok = false;
                    note("sign_reversing_pairing", u, format!("{value} and {image_value} do not cancel"));
                }
                if &image == u {
                    self_paired += 1;
                } else if u < &image {
                    pairs += 1;
                }
            }
        }
    }

    let single_fixed_point = fixed.len() == 1 && fixed[0].exponent() == target_exponent;
    if !single_fixed_point {
        let u = fixed.first().unwrap_or(&family[0]);
        note("single_fixed_point", u, format!("{} fixed points", fixed.len()));
    }

    let mut expected = Expansion::new(Basis::Schur, n);
    if let Some(shape) = target.shape() {
        expected.add_term(shape.parts(), &QtCoeff::from_int(target.sign()))?;
    }
    let signed_sum_telescopes = sum == expected;
    if !signed_sum_telescopes {
        note("signed_sum_telescopes", &family[0], format!("sum is {sum}, expected {expected}"));
    }

    let lhs = shifted_sum.antisymmetrize();
    let rhs = SparsePoly::monomial(
        &target_exponent.parts().iter().zip(staircase(n)).map(|(&g, d)| g as u32 + d).collect::<Vec<_>>(),
        QtCoeff::one(),
    )
    .antisymmetrize();
    let polynomial_identity = lhs == rhs;
    if !polynomial_identity {
        note("polynomial_identity", &family[0], "alternant sums differ".into());
    }

    let clauses = ClauseResults {
        single_fixed_point,
        sign_reversing_pairing: pairing_ok,
        signed_sum_telescopes,
        polynomial_identity,
    };
    let passed = clauses.all();
    Ok(VerificationReport {
        alpha: alpha.clone(),
        n,
        monomials: family.len(),
        fixed_points: fixed.len(),
        fixed_point: single_fixed_point.then(|| fixed[0].exponent()),
        pairs,
        self_paired,
        target,
        clauses,
        passed,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Partition;
    use crate::poly::int;
    use crate::quasisym::{expansion_to_poly, extract_f_expansion};
    use crate::schur::schur_ssyt;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn seqs(alpha: &Composition) -> Vec<Vec<usize>> {
        constrained_monomials(alpha).map(|u| u.sequence().to_vec()).collect()
    }

    /// Filter over all of `[n]^n`, independent of the successor rule.
    fn brute_family(alpha: &Composition) -> Vec<Vec<usize>> {
        let n = alpha.weight();
        let mut out = Vec::new();
        for code in 0..n.pow(n as u32) {
            let word: Vec<usize> = (0..n).rev().map(|i| code / n.pow(i as u32) % n + 1).collect();
            if ConstrainedMonomial::new(word.clone(), alpha).is_ok() {
                out.push(word);
            }
        }
        out
    }

    #[test]
    fn family_examples() {
        assert_eq!(seqs(&comp(&[2])), vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
        assert_eq!(seqs(&comp(&[1, 1])), vec![vec![1, 2]]);
        assert!(seqs(&comp(&[2, 3, 3])).contains(&vec![1, 1, 2, 2, 2, 3, 5, 5]));
    }

    #[test]
    fn family_matches_brute_force() {
        for n in 1..=6 {
            for alpha in Composition::all(n) {
                assert_eq!(seqs(&alpha), brute_family(&alpha), "{alpha}");
            }
        }
    }

    #[test]
    fn family_is_the_support_of_the_fundamental() {
        use crate::quasisym::fundamental;
        for n in 1..=5 {
            for alpha in Composition::all(n) {
                let sum = constrained_monomials(&alpha).fold(SparsePoly::zero(n), |acc, u| {
                    let exps: Vec<u32> = u.exponent().parts().iter().map(|&g| g as u32).collect();
                    &acc + &SparsePoly::monomial(&exps, int(1))
                });
                assert_eq!(sum, fundamental(&alpha, n));
            }
        }
    }

    #[test]
    fn worked_example() {
        let alpha = comp(&[2, 3, 3]);
        let u = ConstrainedMonomial::new(vec![1, 1, 2, 2, 2, 3, 5, 5], &alpha).unwrap();
        assert_eq!(u.exponent().parts(), &[2, 3, 1, 0, 2, 0, 0, 0]);
        assert_eq!(block_structure(&u, &alpha), Some((2, 3)));
        let InvolutionOutcome::Image { image, step } = involution(&u, &alpha).unwrap() else {
            panic!("not a fixed point");
        };
        assert_eq!(step, InvolutionStep { s: 2, r: 3, before: (0, 2), after: (1, 1) });
        assert_eq!(image.exponent().parts(), &[2, 3, 1, 1, 1, 0, 0, 0]);
        assert_eq!(image.sequence(), &[1, 1, 2, 2, 2, 3, 4, 5]);
    }

    #[test]
    fn fixed_point_and_errors() {
        let alpha = comp(&[2, 1]);
        let u = ConstrainedMonomial::new(vec![1, 1, 2], &alpha).unwrap();
        assert_eq!(involution(&u, &alpha).unwrap(), InvolutionOutcome::FixedPoint);
        assert!(ConstrainedMonomial::new(vec![1, 2, 2], &alpha).is_err());
        assert!(ConstrainedMonomial::new(vec![1, 1, 4], &alpha).is_err());
        assert!(ConstrainedMonomial::new(vec![1, 1], &alpha).is_err());
    }

    #[test]
    fn involution_properties_up_to_seven() {
        for n in 1..=7 {
            for alpha in Composition::all(n) {
                for u in constrained_monomials(&alpha) {
                    let InvolutionOutcome::Image { image, step } = involution(&u, &alpha).unwrap() else {
                        assert_eq!(u.exponent(), alpha.pad(n).unwrap());
                        continue;
                    };
                    assert!(step.r >= 2);
                    assert!(ConstrainedMonomial::new(image.sequence().to_vec(), &alpha).is_ok(), "closure");
                    assert_eq!(block_structure(&image, &alpha), Some((step.s, step.r)));
                    let InvolutionOutcome::Image { image: back, .. } = involution(&image, &alpha).unwrap() else {
                        panic!("image is the fixed point");
                    };
                    assert_eq!(back, u, "{alpha}");
                    assert_eq!(straighten(&image.exponent()), straighten(&u.exponent()).negate());
                }
            }
        }
    }

    #[test]
    fn verification_examples() {
        let r = verify_involution(&comp(&[4])).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.target, SignedSchur::Plus(Partition::new(vec![4]).unwrap()));

        let r = verify_involution(&comp(&[2, 1])).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.fixed_point.unwrap().parts(), &[2, 1, 0]);
        assert_eq!(r.monomials, 2 * r.pairs + r.self_paired + 1);

        let r = verify_involution(&comp(&[1, 2])).unwrap();
        assert!(r.passed);
        assert_eq!(r.target, SignedSchur::Zero);
    }

    #[test]
    fn verification_all_compositions_up_to_five() {
        for n in 1..=5 {
            for alpha in Composition::all(n) {
                let r = verify_involution(&alpha).unwrap();
                assert!(r.passed, "{alpha}: {r:?}");
            }
        }
    }

    #[test]
    fn conversion_examples() {
        let f = |terms: &[(&[usize], i64)], n| {
            Expansion::from_terms(Basis::Fundamental, n, terms.iter().map(|(k, c)| (k.to_vec(), int(*c)))).unwrap()
        };
        let s = |terms: &[(&[usize], i64)], n| {
            Expansion::from_terms(Basis::Schur, n, terms.iter().map(|(k, c)| (k.to_vec(), int(*c)))).unwrap()
        };
        assert_eq!(elw_to_schur(&f(&[(&[3], 1)], 3)).unwrap(), s(&[(&[3], 1)], 3));
        assert_eq!(elw_to_schur(&f(&[(&[2, 1], 1), (&[1, 2], 1)], 3)).unwrap(), s(&[(&[2, 1], 1)], 3));
        assert_eq!(elw_to_schur(&f(&[(&[1, 1], 1)], 2)).unwrap(), s(&[(&[1, 1], 1)], 2));
        assert!(elw_to_schur(&s(&[(&[1, 1], 1)], 2)).is_err());

        let lhs = expansion_to_poly(&f(&[(&[2, 1], 1), (&[1, 2], 1)], 3), 3);
        let rhs = expansion_to_poly(&s(&[(&[2, 1], 1)], 3), 3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn schur_functions_round_trip() {
        for n in 1..=6 {
            for lambda in Partition::all(n) {
                let f = extract_f_expansion(&schur_ssyt(&lambda, n)).unwrap();
                let s = elw_to_schur(&f).unwrap();
                let expected = Expansion::from_terms(Basis::Schur, n, [(lambda.parts().to_vec(), int(1))]).unwrap();
                assert_eq!(s, expected, "{lambda}");
            }
        }
    }
}
