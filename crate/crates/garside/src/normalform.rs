//! Greedy normal forms for positive words, mixed canonical forms for group
//! elements, the incremental update rules, and the fellow-traveller bound.

use thiserror::Error;

use crate::reversing::{left_complement, right_complement, ReversalOutcome, WordOutcome};
use crate::structure::{GarsideStructure, SimpleId};
use crate::words::{PositiveWord, Sign, SignedWord};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum NfError {
    #[error("reversing budget exhausted")]
    FuelExhausted,
    #[error("complement undefined; the input does not normalize")]
    Undefined,
}

/// Greedy left normal form: factors x₁⋯x_p, none trivial, with
/// star(x_i) ∧ x_{i+1} = 1 for consecutive factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftNormalForm {
    pub factors: Vec<SimpleId>,
}

/// Right normal form: factors x_q⋯x₁ written in product order, with the
/// costar adjacency on consecutive factors; the last factor is w ∧̃ Δ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightNormalForm {
    pub factors: Vec<SimpleId>,
}

/// Mixed canonical form y_q⁻¹⋯y₁⁻¹·x₁⋯x_p. `negatives` holds the left
/// normal form (y₁, …, y_q) of the denominator, innermost factor first;
/// `positives` the left normal form of the numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedNormalForm {
    pub negatives: Vec<SimpleId>,
    pub positives: Vec<SimpleId>,
}

impl MixedNormalForm {
    pub fn identity() -> Self {
        MixedNormalForm { negatives: Vec::new(), positives: Vec::new() }
    }

    pub fn factor_count(&self) -> usize {
        self.negatives.len() + self.positives.len()
    }

    /// The represented group element as a signed word.
    pub fn to_signed(&self, g: &GarsideStructure) -> SignedWord {
        let mut out = SignedWord::empty();
        for &y in self.negatives.iter().rev() {
            out = out.concat(&g.simple_word(y).inverse_signed());
        }
        for &x in &self.positives {
            out = out.concat(&g.simple_word(x).to_signed());
        }
        out
    }

    /// S-letter sequence in written order, for fellow-traveller prefixes.
    fn s_letters(&self) -> Vec<(SimpleId, Sign)> {
        let mut seq: Vec<(SimpleId, Sign)> = self
            .negatives
            .iter()
            .rev()
            .map(|&y| (y, Sign::Minus))
            .collect();
        seq.extend(self.positives.iter().map(|&x| (x, Sign::Plus)));
        seq
    }
}

/// Greedy head of a positive word: the join of all simples dividing it,
/// which is w ∧ Δ.
fn head_simple(w: &PositiveWord, g: &GarsideStructure) -> Result<SimpleId, NfError> {
    let mut head = g.eps();
    for s in 0..g.simple_count() {
        match g.simple_left_divides_word(s, w) {
            Some(true) => head = g.join_simple(head, s),
            Some(false) => {}
            None => return Err(NfError::FuelExhausted),
        }
    }
    Ok(head)
}

/// Left normal form by repeated head extraction.
pub fn left_nf(w: &PositiveWord, g: &GarsideStructure) -> Result<LeftNormalForm, NfError> {
    let mut factors = Vec::new();
    let mut rest = w.clone();
    while !rest.is_empty() {
        let head = head_simple(&rest, g)?;
        // A nonempty word is divisible by its first letter.
        debug_assert_ne!(head, g.eps());
        if head == g.eps() {
            return Err(NfError::Undefined);
        }
        match right_complement(g.simple_word(head), &rest, &g.presentation.f, &g.fuel) {
            ReversalOutcome::Converged { positive, negative, .. } => {
                if !negative.is_empty() {
                    return Err(NfError::Undefined);
                }
                factors.push(head);
                rest = positive;
            }
            ReversalOutcome::Blocked { .. } => return Err(NfError::Undefined),
            ReversalOutcome::FuelExhausted { .. } => return Err(NfError::FuelExhausted),
        }
    }
    Ok(LeftNormalForm { factors })
}

/// Right normal form by repeated extraction of w ∧̃ Δ from the right.
pub fn right_nf(w: &PositiveWord, g: &GarsideStructure) -> Result<RightNormalForm, NfError> {
    let mut factors = Vec::new();
    let mut rest = w.clone();
    while !rest.is_empty() {
        let mut last = g.eps();
        for s in 0..g.simple_count() {
            match g.simple_right_divides_word(s, &rest) {
                Some(true) => last = g.left_lcm_simple(last, s),
                Some(false) => {}
                None => return Err(NfError::FuelExhausted),
            }
        }
        debug_assert_ne!(last, g.eps());
        if last == g.eps() {
            return Err(NfError::Undefined);
        }
        match left_complement(&rest, g.simple_word(last), g.left_selector(), &g.fuel) {
            ReversalOutcome::Converged { positive, negative, .. } => {
                if !negative.is_empty() {
                    return Err(NfError::Undefined);
                }
                factors.push(last);
                rest = positive;
            }
            ReversalOutcome::Blocked { .. } => return Err(NfError::Undefined),
            ReversalOutcome::FuelExhausted { .. } => return Err(NfError::FuelExhausted),
        }
    }
    factors.reverse();
    Ok(RightNormalForm { factors })
}

/// Mixed normal form of a signed word: irreducible left fraction, then the
/// left normal form of each side. Head coprimality is automatic since the
/// fraction has trivial gcd.
pub fn mixed_nf(w: &SignedWord, g: &GarsideStructure) -> Result<MixedNormalForm, NfError> {
    let fraction = g.reduce_fraction_left(w).map_err(|e| match e {
        WordOutcome::FuelExhausted => NfError::FuelExhausted,
        _ => NfError::Undefined,
    })?;
    Ok(MixedNormalForm {
        negatives: left_nf(&fraction.denominator, g)?.factors,
        positives: left_nf(&fraction.numerator, g)?.factors,
    })
}

fn strip_eps(mut factors: Vec<SimpleId>, g: &GarsideStructure) -> Vec<SimpleId> {
    factors.retain(|&s| s != g.eps());
    factors
}

/// Normal form of z·Δ: the innermost negative turns into its star as the
/// new positive head, and φ is applied to the old positives.
pub fn nf_mul_delta(nf: &MixedNormalForm, g: &GarsideStructure) -> MixedNormalForm {
    let y1 = nf.negatives.first().copied().unwrap_or(g.eps());
    let negatives: Vec<SimpleId> = nf.negatives.iter().skip(1).copied().collect();
    let mut positives = vec![g.star(y1)];
    positives.extend(nf.positives.iter().map(|&x| g.phi(x)));
    MixedNormalForm {
        negatives,
        positives: strip_eps(positives, g),
    }
}

/// Normal form of z·Δ⁻¹: the positive head turns into its costar as the
/// new innermost negative, and φ⁻¹ is applied to the remaining positives.
pub fn nf_mul_delta_inv(nf: &MixedNormalForm, g: &GarsideStructure) -> MixedNormalForm {
    let x1 = nf.positives.first().copied().unwrap_or(g.eps());
    let mut negatives = vec![g.costar(x1)];
    negatives.extend(nf.negatives.iter().copied());
    let positives: Vec<SimpleId> = nf.positives.iter().skip(1).map(|&x| g.phi_inv(x)).collect();
    MixedNormalForm {
        negatives: strip_eps(negatives, g),
        positives,
    }
}

/// Normal form of z·s⁻¹ for s simple: a right-complement cascade through
/// the positive factors, then gcd-with-Δ absorption through the negatives.
pub fn nf_mul_simple_inv(
    nf: &MixedNormalForm,
    s: SimpleId,
    g: &GarsideStructure,
) -> Result<MixedNormalForm, NfError> {
    let mut carry = s; // s_{i+1}, initially s_{p+1} = s
    let mut positives = vec![g.eps(); nf.positives.len()];
    for (i, &x) in nf.positives.iter().enumerate().rev() {
        positives[i] = g.left_complement_simple(x, carry); // x_i / s_{i+1}
        carry = g.left_complement_simple(carry, x); // s_i = s_{i+1} / x_i
    }
    let mut t = carry; // t_1 = s_1
    let mut negatives = Vec::with_capacity(nf.negatives.len() + 1);
    for &y in &nf.negatives {
        // y'_j = (t_j·y_j) ∧ Δ = *(y_j* / φ(t_j))
        let yp = g.costar(g.left_complement_simple(g.star(y), g.phi(t)));
        // t_{j+1} is the quotient of t_j·y_j by its head y'_j.
        let prod = g.simple_word(t).concat(g.simple_word(y));
        let quotient =
            match right_complement(g.simple_word(yp), &prod, &g.presentation.f, &g.fuel) {
                ReversalOutcome::Converged { positive, negative, .. } => {
                    if !negative.is_empty() {
                        return Err(NfError::Undefined);
                    }
                    positive
                }
                ReversalOutcome::Blocked { .. } => return Err(NfError::Undefined),
                ReversalOutcome::FuelExhausted { .. } => return Err(NfError::FuelExhausted),
            };
        t = g.class_of_word(&quotient).ok_or(NfError::Undefined)?;
        negatives.push(yp);
    }
    negatives.push(t); // y'_{q+1}; trivial factors are stripped below
    Ok(MixedNormalForm {
        negatives: strip_eps(negatives, g),
        positives: strip_eps(positives, g),
    })
}

/// Normal form of z·s for s simple, via zs = zΔ·(s*)⁻¹.
pub fn nf_mul_simple(
    nf: &MixedNormalForm,
    s: SimpleId,
    g: &GarsideStructure,
) -> Result<MixedNormalForm, NfError> {
    nf_mul_simple_inv(&nf_mul_delta(nf, g), g.star(s), g)
}

/// Maximal S-letter distance between prefixes of two mixed normal forms,
/// the shorter one padded with trivial letters. The distance of two prefix
/// evaluations is the factor count of the normal form of prefix₁⁻¹·prefix₂.
pub fn fellow_traveller_bound(
    z_nf: &MixedNormalForm,
    zs_nf: &MixedNormalForm,
    g: &GarsideStructure,
) -> Result<usize, NfError> {
    let mut a = z_nf.s_letters();
    let mut b = zs_nf.s_letters();
    let len = a.len().max(b.len());
    a.resize(len, (g.eps(), Sign::Plus));
    b.resize(len, (g.eps(), Sign::Plus));
    let eval = |seq: &[(SimpleId, Sign)]| {
        let mut w = SignedWord::empty();
        for &(s, sign) in seq {
            match sign {
                Sign::Plus => w = w.concat(&g.simple_word(s).to_signed()),
                Sign::Minus => w = w.concat(&g.simple_word(s).inverse_signed()),
            }
        }
        w
    };
    let mut bound = 0;
    for i in 1..=len {
        let p1 = eval(&a[..i]);
        let p2 = eval(&b[..i]);
        let diff = p1.inverse().concat(&p2);
        let nf = mixed_nf(&diff, g)?;
        bound = bound.max(nf.factor_count());
    }
    Ok(bound)
}

/// Adjacency law of a left normal form: no trivial factor, and
/// star(x_i) ∧ x_{i+1} = 1.
pub fn is_left_normal(factors: &[SimpleId], g: &GarsideStructure) -> bool {
    if factors.iter().any(|&x| x == g.eps()) {
        return false;
    }
    factors
        .windows(2)
        .all(|w| g.meet_simple(g.star(w[0]), w[1]) == g.eps())
}

/// Validity of a mixed normal form: both sides left-normal and the two
/// heads coprime.
pub fn is_mixed_normal(nf: &MixedNormalForm, g: &GarsideStructure) -> bool {
    if !is_left_normal(&nf.negatives, g) || !is_left_normal(&nf.positives, g) {
        return false;
    }
    match (nf.negatives.first(), nf.positives.first()) {
        (Some(&y), Some(&x)) => g.meet_simple(x, y) == g.eps(),
        _ => true,
    }
}
