//! The Weyl algebra `⟨x,y⟩/(yx − xy − ħ)` and the M-Weyl algebra
//! `⟨x,y⟩/(yx − xy − x²ħ)`.
//!
//! Elements are kept in normal order `x^p y^q ħ^h`. Reordering a single
//! block `y^b x^a` is the only rewriting step; every other evaluator in this
//! module is checked against the iterated rewriting.

mod coords;
mod repr;
mod series;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coeff::{GaussRat, HPoly};
use crate::comb::{binomial, falling, rising};

pub use coords::{
    mweyl_coords_closed, mweyl_coords_functions, mweyl_function_counts, normal_coords_closed,
    normal_coords_flows, normal_coords_pairings, pairing_counts, DEFAULT_BUDGET,
};
pub use repr::{
    apply_normal_form_to_power, apply_word_to_power, mweyl_factorial_identity,
    weyl_factorial_identity, FactorialCheck,
};
pub use series::{genseries_check, GenSeriesMismatch, GenSeriesReport};

/// Which of the two algebras a computation takes place in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeylKind {
    Weyl,
    MWeyl,
}

/// A word `Π_i x^{a_i} y^{b_i}`; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct WeylWord {
    pub factors: Vec<(u32, u32)>,
}

impl WeylWord {
    pub fn new(factors: Vec<(u32, u32)>) -> Self {
        WeylWord { factors }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_x(&self) -> u32 {
        self.factors.iter().map(|f| f.0).sum()
    }

    pub fn total_y(&self) -> u32 {
        self.factors.iter().map(|f| f.1).sum()
    }

    pub fn concat(&self, other: &WeylWord) -> WeylWord {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        WeylWord { factors }
    }
}

impl From<Vec<(u32, u32)>> for WeylWord {
    fn from(factors: Vec<(u32, u32)>) -> Self {
        WeylWord { factors }
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|&(a, b)| mono_str(a, b)).collect();
        write!(f, "{}", parts.join(" . "))
    }
}

fn mono_str(a: u32, b: u32) -> String {
    let pow = |v: &str, e: u32| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    let parts: Vec<String> = [pow("x", a), pow("y", b)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// A normally ordered element: `(x-exponent, y-exponent, ħ-degree) ↦ coefficient`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeylNormalForm {
    pub terms: BTreeMap<(u32, u32, u32), GaussRat>,
}

impl WeylNormalForm {
    pub fn one() -> Self {
        Self::monomial(0, 0, 0, GaussRat::one())
    }

    pub fn monomial(x: u32, y: u32, h: u32, c: GaussRat) -> Self {
        let mut nf = WeylNormalForm::default();
        nf.add(x, y, h, &c);
        nf
    }

    pub fn add(&mut self, x: u32, y: u32, h: u32, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((x, y, h)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(x, y, h));
        }
    }

    pub fn add_assign(&mut self, o: &WeylNormalForm) {
        for (&(x, y, h), c) in &o.terms {
            self.add(x, y, h, c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: u32, y: u32, h: u32) -> GaussRat {
        self.terms.get(&(x, y, h)).cloned().unwrap_or_default()
    }

    /// Groups the terms by `(x, y)` with ħ-polynomial coefficients.
    pub fn by_monomial(&self) -> BTreeMap<(u32, u32), HPoly> {
        let mut out: BTreeMap<(u32, u32), HPoly> = BTreeMap::new();
        for (&(x, y, h), c) in &self.terms {
            out.entry((x, y)).or_default().add_term(h, c);
        }
        out
    }

    /// Product in the chosen algebra.
    pub fn mul(&self, other: &WeylNormalForm, kind: WeylKind) -> WeylNormalForm {
        let mut out = WeylNormalForm::default();
        for (&(p, q, h), c) in &self.terms {
            for (&(a, b, h2), c2) in &other.terms {
                let cc = c * c2;
                for (x, y, k, w) in reorder_terms(kind, q, a) {
                    let coef = &cc * &GaussRat::from_bigint(w);
                    out.add(p + x, y + b, h + h2 + k, &coef);
                }
            }
        }
        out
    }
}

impl fmt::Display for WeylNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(x, y, h), c)| {
                let mut s = String::new();
                if !c.is_one() {
                    s.push_str(&format!("({c}) "));
                }
                if h > 0 {
                    s.push_str(&format!("h^{h} "));
                }
                s.push_str(&mono_str(x, y));
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Terms `(x-exponent, y-exponent, ħ-degree, integer coefficient)` of `y^b x^a`.
pub fn reorder_terms(kind: WeylKind, b: u32, a: u32) -> Vec<(u32, u32, u32, BigInt)> {
    let kmax = match kind {
        WeylKind::Weyl => a.min(b),
        WeylKind::MWeyl => b,
    };
    let mut out = Vec::with_capacity(kmax as usize + 1);
    for k in 0..=kmax {
        let w = binomial(b as u64, k as u64)
            * match kind {
                WeylKind::Weyl => falling(&BigInt::from(a), k as u64),
                WeylKind::MWeyl => rising(&BigInt::from(a), k as u64),
            };
        if w.is_zero() {
            continue;
        }
        match kind {
            WeylKind::Weyl => out.push((a - k, b - k, k, w)),
            WeylKind::MWeyl => out.push((a + k, b - k, k, w)),
        }
    }
    out
}

fn reorder_nf(kind: WeylKind, b: u32, a: u32) -> WeylNormalForm {
    let mut nf = WeylNormalForm::default();
    for (x, y, k, w) in reorder_terms(kind, b, a) {
        nf.add(x, y, k, &GaussRat::from_bigint(w));
    }
    nf
}

/// `y^b x^a = Σ_k C(b,k)(a)_k x^{a−k} y^{b−k} ħ^k`.
pub fn reorder_yx(b: u32, a: u32) -> WeylNormalForm {
    reorder_nf(WeylKind::Weyl, b, a)
}

/// `y^b x^a = Σ_k C(b,k) a^{(k)} x^{a+k} y^{b−k} ħ^k` in the M-Weyl algebra.
pub fn mweyl_reorder(b: u32, a: u32) -> WeylNormalForm {
    reorder_nf(WeylKind::MWeyl, b, a)
}

fn normal_order_in(kind: WeylKind, w: &WeylWord) -> WeylNormalForm {
    let mut acc = WeylNormalForm::one();
    for &(a, b) in &w.factors {
        acc = acc.mul(&WeylNormalForm::monomial(a, b, 0, GaussRat::one()), kind);
    }
    acc
}

pub fn normal_order(w: &WeylWord) -> WeylNormalForm {
    normal_order_in(WeylKind::Weyl, w)
}

pub fn mweyl_normal_order(w: &WeylWord) -> WeylNormalForm {
    normal_order_in(WeylKind::MWeyl, w)
}

/// Reference value of `N(A,k)`: the coefficient of `x^{|a|−k} y^{|b|−k} ħ^k`.
pub fn coord_from_normal_form(nf: &WeylNormalForm, w: &WeylWord, k: u32) -> BigInt {
    let (ta, tb) = (w.total_x(), w.total_y());
    if k > ta.min(tb) {
        return BigInt::zero();
    }
    integer_coeff(&nf.coeff(ta - k, tb - k, k))
}

/// Reference value of `N_M(A,k)`: the coefficient of `x^{|a|+k} y^{|b|−k} ħ^k`.
pub fn mcoord_from_normal_form(nf: &WeylNormalForm, w: &WeylWord, k: u32) -> BigInt {
    let (ta, tb) = (w.total_x(), w.total_y());
    if k > tb {
        return BigInt::zero();
    }
    integer_coeff(&nf.coeff(ta + k, tb - k, k))
}

fn integer_coeff(c: &GaussRat) -> BigInt {
    c.to_integer().expect("normal-order coefficients of a word are integers")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(terms: &[((u32, u32, u32), i64)]) -> WeylNormalForm {
        let mut out = WeylNormalForm::default();
        for &((x, y, h), c) in terms {
            out.add(x, y, h, &GaussRat::from_int(c));
        }
        out
    }

    fn w(f: &[(u32, u32)]) -> WeylWord {
        WeylWord::new(f.to_vec())
    }

    #[test]
    fn reorder_examples() {
        assert_eq!(reorder_yx(1, 1), nf(&[((1, 1, 0), 1), ((0, 0, 1), 1)]));
        assert_eq!(reorder_yx(0, 3), nf(&[((3, 0, 0), 1)]));
        assert_eq!(reorder_yx(2, 2), nf(&[((2, 2, 0), 1), ((1, 1, 1), 4), ((0, 0, 2), 2)]));
    }

    #[test]
    fn normal_order_examples() {
        assert_eq!(normal_order(&w(&[(1, 1), (1, 1)])), nf(&[((2, 2, 0), 1), ((1, 1, 1), 1)]));
        assert_eq!(normal_order(&w(&[])), WeylNormalForm::one());
        assert_eq!(normal_order(&w(&[(0, 1), (1, 0)])), nf(&[((1, 1, 0), 1), ((0, 0, 1), 1)]));
    }

    #[test]
    fn mweyl_examples() {
        assert_eq!(mweyl_reorder(1, 1), nf(&[((1, 1, 0), 1), ((2, 0, 1), 1)]));
        assert_eq!(mweyl_reorder(1, 2), nf(&[((2, 1, 0), 1), ((3, 0, 1), 2)]));
        assert_eq!(mweyl_reorder(0, 4), nf(&[((4, 0, 0), 1)]));
        assert_eq!(mweyl_normal_order(&w(&[(0, 1), (1, 0)])), mweyl_reorder(1, 1));
        assert_eq!(mweyl_normal_order(&w(&[])), WeylNormalForm::one());
        assert_eq!(mweyl_normal_order(&w(&[(0, 1), (2, 0)])), mweyl_reorder(1, 2));
    }
}
