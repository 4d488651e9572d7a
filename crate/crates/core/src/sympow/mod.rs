//! Coinvariant (Polya) symmetric powers of based algebras.
//!
//! Elements of `P_K(A) = (A^{⊗n})_K` are stored as linear combinations of
//! canonical label tuples: the lexicographically least element of each
//! K-orbit. In the graded case the Koszul sign of the reordering is folded
//! into the coefficient, and a class equal to its own negative is zero.

mod algebra;
mod boolean;
mod classical;
mod oracle;

use crate::coeff::HPoly;
use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::perm::{Perm, PermGroup};

pub use algebra::{
    boolean_point, truncated_polynomial, truncated_weyl, weyl_label_index, weyl_labels, BasedAlgebra,
};
pub use boolean::{boolean_direct, boolean_product};
pub use classical::{check_family, classical_sym_product, Family};
pub use oracle::{
    monomial_canonical, oracle_product, symmetrize, Character, GroupAction, GroupElement, LabelMap,
};

/// A tuple of basis labels, one per tensor slot.
pub type Tuple = Vec<usize>;

/// An element of `P_K(A)` or of `A^{⊗n}`, keyed by label tuples.
pub type SymElement = Lin<Tuple>;

/// Applies `σ` to a tuple, returning the image and the Koszul sign of the
/// induced reordering of odd factors.
pub fn act_graded(sigma: &Perm, t: &[usize], parity: &[u8]) -> (Tuple, i32) {
    let odd: Vec<bool> = t.iter().map(|&l| parity.get(l).copied().unwrap_or(0) == 1).collect();
    (sigma.act(t), sigma.koszul_sign(&odd))
}

/// The least element of the K-orbit of `t` with the sign relating the two
/// classes: `class(t) = sign·class(rep)`. A sign of 0 means the class vanishes.
/// Pass an empty `parity` slice for ungraded algebras.
pub fn canonicalize(t: &[usize], k: &PermGroup, parity: &[u8]) -> Result<(Tuple, i32)> {
    if t.len() != k.degree() {
        return Err(Error::DegreeMismatch { expected: k.degree(), found: t.len() });
    }
    let mut best: Option<(Tuple, i32)> = None;
    for g in k.elements() {
        let (img, s) = act_graded(g, t, parity);
        match &mut best {
            None => best = Some((img, s)),
            Some((b, bs)) => {
                if img < *b {
                    *b = img;
                    *bs = s;
                } else if img == *b && s != *bs {
                    *bs = 0;
                }
            }
        }
    }
    Ok(best.expect("groups are nonempty"))
}

/// Reduces an element of `A^{⊗n}` to canonical class representatives.
pub fn to_classes(x: &SymElement, k: &PermGroup, parity: &[u8]) -> Result<SymElement> {
    let mut out = SymElement::zero();
    for (t, c) in &x.terms {
        let (rep, s) = canonicalize(t, k, parity)?;
        if s != 0 {
            out.add_term(rep, &if s > 0 { c.clone() } else { -c.clone() });
        }
    }
    Ok(out)
}

/// Product of two label tuples in the graded tensor algebra:
/// `(a_1⊗…)(b_1⊗…) = (−1)^{Σ_{i>j}|a_i||b_j|} (a_1b_1)⊗…`.
pub fn tensor_mul_tuples(alg: &BasedAlgebra, a: &[usize], b: &[usize]) -> Vec<(Tuple, HPoly)> {
    let mut sign_exp = 0u32;
    let mut odd_b_before = 0u32;
    for (i, &ai) in a.iter().enumerate() {
        if i > 0 {
            odd_b_before += alg.parity(b[i - 1]) as u32;
        }
        sign_exp += alg.parity(ai) as u32 * odd_b_before;
    }
    let mut acc: Vec<(Tuple, HPoly)> = vec![(Vec::with_capacity(a.len()), HPoly::one())];
    for (&ai, &bi) in a.iter().zip(b) {
        let prod = alg.product(ai, bi);
        if prod.is_empty() {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(acc.len() * prod.len());
        for (t, c) in &acc {
            for (k, e) in prod {
                let mut t2 = t.clone();
                t2.push(*k);
                next.push((t2, c * e));
            }
        }
        acc = next;
    }
    if sign_exp % 2 == 1 {
        for (_, c) in acc.iter_mut() {
            *c = -c.clone();
        }
    }
    acc
}

/// Bilinear product in the graded tensor algebra `A^{⊗n}`.
pub fn tensor_mul(alg: &BasedAlgebra, x: &SymElement, y: &SymElement) -> SymElement {
    let mut out = SymElement::zero();
    for (a, c) in &x.terms {
        for (b, d) in &y.terms {
            let cd = c * d;
            for (t, e) in tensor_mul_tuples(alg, a, b) {
                out.add_term(t, &(&cd * &e));
            }
        }
    }
    out
}

/// `♯(K)^{m−1}·Π ā_i = Σ_{σ ∈ {id}×K^{m−1}} ⊗_j Π_i a_{i,σ_i⁻¹(j)}`, extended
/// bilinearly, with Koszul signs in the graded case.
pub fn polya_product(factors: &[SymElement], k: &PermGroup, alg: &BasedAlgebra) -> Result<SymElement> {
    let n = k.degree();
    for f in factors {
        for t in f.terms.keys() {
            if t.len() != n {
                return Err(Error::DegreeMismatch { expected: n, found: t.len() });
            }
        }
    }
    let Some((first, rest)) = factors.split_first() else {
        return Err(Error::OutOfRange("empty product".into()));
    };
    let parity = alg.parities();
    let elems = k.elements();
    let mut out = SymElement::zero();
    // running products, one per choice of σ_2..σ_i
    let mut partial: Vec<SymElement> = vec![first.clone()];
    for f in rest {
        let mut next = Vec::with_capacity(partial.len() * elems.len());
        for p in &partial {
            for g in elems {
                let mut moved = SymElement::zero();
                for (t, c) in &f.terms {
                    let (img, s) = act_graded(g, t, parity);
                    moved.add_term(img, &if s > 0 { c.clone() } else { -c.clone() });
                }
                next.push(tensor_mul(alg, p, &moved));
            }
        }
        partial = next;
    }
    for p in &partial {
        out.add_assign(p);
    }
    let denom = (k.order() as u64).pow(rest.len() as u32);
    to_classes(&out, k, parity)?.div_nat(denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::GaussRat;

    fn basis(t: &[usize]) -> SymElement {
        SymElement::basis(t.to_vec())
    }

    #[test]
    fn canonicalize_examples() {
        let s3 = PermGroup::symmetric(3);
        assert_eq!(canonicalize(&[3, 1, 2], &s3, &[]).unwrap(), (vec![1, 2, 3], 1));
        let s2 = PermGroup::symmetric(2);
        assert_eq!(canonicalize(&[1, 1], &s2, &[0, 1]).unwrap().1, 0);
        assert_eq!(canonicalize(&[2, 1], &PermGroup::trivial(2), &[]).unwrap(), (vec![2, 1], 1));
        assert!(canonicalize(&[1], &s2, &[]).is_err());
    }

    #[test]
    fn trivial_group_gives_tensor_product() {
        let alg = truncated_polynomial(6);
        let k = PermGroup::trivial(2);
        let p = polya_product(&[basis(&[1, 2]), basis(&[3, 0])], &k, &alg).unwrap();
        assert_eq!(p, basis(&[4, 2]));
    }

    #[test]
    fn polynomial_classes_average_over_s2() {
        let alg = truncated_polynomial(8);
        let k = PermGroup::symmetric(2);
        let (a, b, c, d) = (1, 2, 0, 3);
        let p = polya_product(&[basis(&[a, b]), basis(&[c, d])], &k, &alg).unwrap();
        let mut expected = SymElement::zero();
        let half = HPoly::constant(GaussRat::ratio(1, 2));
        expected.add_term(canonicalize(&[a + c, b + d], &k, &[]).unwrap().0, &half);
        expected.add_term(canonicalize(&[a + d, b + c], &k, &[]).unwrap().0, &half);
        assert_eq!(p, expected);
    }
}
