//! Checks through the representations on polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{mweyl_coords_closed, normal_coords_closed, WeylNormalForm, WeylWord};
use crate::coeff::{GaussRat, HPoly};
use crate::comb::falling;

/// Both sides of a factorial identity at one value of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorialCheck {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl FactorialCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn suffix_sums(w: &WeylWord) -> Vec<(i64, i64)> {
    let n = w.len();
    (0..n)
        .map(|i| {
            let a: i64 = w.factors[i + 1..].iter().map(|f| f.0 as i64).sum();
            let b: i64 = w.factors[i + 1..].iter().map(|f| f.1 as i64).sum();
            (a, b)
        })
        .collect()
}

/// `Π_i (t + |a_{>i}| − |b_{>i}|)_{b_i}` against `Σ_k N(A,k)(t)_{|b|−k}`.
pub fn weyl_factorial_identity(w: &WeylWord, t: i64) -> FactorialCheck {
    let mut lhs = BigInt::from(1);
    for (&(_, b), (sa, sb)) in w.factors.iter().zip(suffix_sums(w)) {
        lhs *= falling(&BigInt::from(t + sa - sb), b as u64);
    }
    let tb = w.total_y();
    let mut rhs = BigInt::zero();
    for k in 0..=tb {
        rhs += normal_coords_closed(w, k) * falling(&BigInt::from(t), (tb - k) as u64);
    }
    FactorialCheck { lhs, rhs }
}

/// `Π_i (t − |a_{>i}| − |b_{>i}|)_{b_i}` against `Σ_k (−1)^k N_M(A,k)(t)_{|b|−k}`,
/// read off from `x ↦ x⁻¹`, `y ↦ −ħ d/dx` acting on `x^t`.
pub fn mweyl_factorial_identity(w: &WeylWord, t: i64) -> FactorialCheck {
    let mut lhs = BigInt::from(1);
    for (&(_, b), (sa, sb)) in w.factors.iter().zip(suffix_sums(w)) {
        lhs *= falling(&BigInt::from(t - sa - sb), b as u64);
    }
    let tb = w.total_y();
    let mut rhs = BigInt::zero();
    for k in 0..=tb {
        let term = mweyl_coords_closed(w, k) * falling(&BigInt::from(t), (tb - k) as u64);
        if k % 2 == 0 {
            rhs += term;
        } else {
            rhs -= term;
        }
    }
    FactorialCheck { lhs, rhs }
}

/// Applies `x^p y^q` to `x^s` under `x ↦ x·`, `y ↦ ħ d/dx`.
fn apply_mono(p: u32, q: u32, s: u32) -> Option<(u32, HPoly)> {
    if q > s {
        return None;
    }
    let c = falling(&BigInt::from(s), q as u64);
    Some((s - q + p, HPoly::monomial(GaussRat::from_bigint(c), q)))
}

/// The word acting letter block by letter block on `x^t`; result keyed by power of x.
pub fn apply_word_to_power(w: &WeylWord, t: u32) -> BTreeMap<u32, HPoly> {
    let mut state: BTreeMap<u32, HPoly> = BTreeMap::from([(t, HPoly::one())]);
    for &(a, b) in w.factors.iter().rev() {
        let mut next: BTreeMap<u32, HPoly> = BTreeMap::new();
        for (s, c) in &state {
            if let Some((s2, w2)) = apply_mono(a, b, *s) {
                next.entry(s2).or_default().add_assign(&(c * &w2));
            }
        }
        next.retain(|_, c| !c.is_zero());
        state = next;
    }
    state
}

/// The normal form acting on `x^t`.
pub fn apply_normal_form_to_power(nf: &WeylNormalForm, t: u32) -> BTreeMap<u32, HPoly> {
    let mut out: BTreeMap<u32, HPoly> = BTreeMap::new();
    for (&(p, q, h), c) in &nf.terms {
        if let Some((s, w)) = apply_mono(p, q, t) {
            out.entry(s).or_default().add_assign(&w.shift(h).scale(c));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::normal_order;

    #[test]
    fn identities_on_small_words() {
        let w = WeylWord::new(vec![(1, 2), (2, 1), (0, 2)]);
        for t in 0..=10 {
            assert!(weyl_factorial_identity(&w, t).holds(), "t={t}");
            assert!(mweyl_factorial_identity(&w, t).holds(), "t={t}");
        }
    }

    #[test]
    fn representation_matches_normal_form() {
        let w = WeylWord::new(vec![(0, 2), (2, 1), (1, 1)]);
        let nf = normal_order(&w);
        for t in 0..=6 {
            assert_eq!(apply_word_to_power(&w, t), apply_normal_form_to_power(&nf, t));
        }
    }
}
