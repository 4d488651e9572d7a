//! Star products on `ℂ[z, z̄]` with `z z̄ − z̄ z = 2iħ`, averaged over
//! `Z_mⁿ ⋊ S_n` and over its extension by the reflection `z ↔ z̄`.

use std::collections::BTreeMap;

use super::{averaged_star, averaged_with, bilinear, slot_product, QSymElement};
use crate::coeff::{GaussRat, HPoly};
use crate::error::{Error, Result};
use crate::expmat::ExpMatrix;
use crate::weyl::WeylKind;

/// The contraction weight `−2i`: `z̄ z = z z̄ − 2iħ`.
pub(crate) fn minus_two_i() -> GaussRat {
    &GaussRat::i() * &GaussRat::from_int(-2)
}

fn check_congruence(x: &ExpMatrix, m_cyc: u32) -> Result<()> {
    if m_cyc == 0 {
        return Err(Error::Congruence("the cyclic order must be at least 1".into()));
    }
    if x.width() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "the complex products take one (z, z̄) pair per slot, got width {}",
            x.width()
        )));
    }
    for (j, r) in x.rows.iter().enumerate() {
        if (r[1] as i64 - r[0] as i64).rem_euclid(m_cyc as i64) != 0 {
            return Err(Error::Congruence(format!(
                "row {} = (z^{}, zb^{}) of {x}: exponent difference not divisible by {m_cyc}",
                j + 1,
                r[0],
                r[1]
            )));
        }
    }
    Ok(())
}

/// `Ā⋆C̄ = (1/n!) Σ_{σ,I} (−2i)^{|I|} C(b,I)(σ(c))_I class(A + σ(C) − (I,I)) ħ^{|I|}`
/// on classes with `b − a ≡ 0 mod m` in every row.
pub fn wreath_zm_star(a: &ExpMatrix, c: &ExpMatrix, m_cyc: u32) -> Result<QSymElement> {
    check_congruence(a, m_cyc)?;
    check_congruence(c, m_cyc)?;
    averaged_star(WeylKind::Weyl, &minus_two_i(), a, c)
}

pub fn wreath_zm_star_elem(x: &QSymElement, y: &QSymElement, m_cyc: u32) -> Result<QSymElement> {
    bilinear(x, y, |a, c| wreath_zm_star(a, c, m_cyc))
}

fn transpose(x: &ExpMatrix) -> ExpMatrix {
    ExpMatrix { rows: x.rows.iter().map(|r| vec![r[1], r[0]]).collect() }.canonical()
}

/// `φ(X) − X^T` for `φ: z ↔ z̄`, as `(class, ħ-degree, coefficient)`:
/// each slot `z̄^a z^b` is brought back to normal order.
fn reflection_corrections(x: &ExpMatrix) -> Vec<(ExpMatrix, u32, GaussRat)> {
    let scale = minus_two_i();
    let mut acc: Vec<(Vec<Vec<u32>>, u32, GaussRat)> = vec![(Vec::new(), 0, GaussRat::one())];
    for r in &x.rows {
        // z̄^a z^b = 1 · (z̄^a) · (z^b)
        let terms = slot_product(WeylKind::Weyl, &scale, &[0, r[0]], &[r[1], 0]);
        let mut next = Vec::with_capacity(acc.len() * terms.len());
        for (rows, h, w) in &acc {
            for (row, k, w2) in &terms {
                let mut rows2 = rows.clone();
                rows2.push(row.clone());
                next.push((rows2, h + k, w * w2));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .filter(|(_, h, _)| *h > 0)
        .map(|(rows, h, w)| (ExpMatrix { rows }.canonical(), h, w))
        .collect()
}

/// Normal form of `class(ħ^k X)` in the reflection quotient, memoized.
fn reduce(x: &ExpMatrix, k: u32, memo: &mut BTreeMap<(ExpMatrix, u32), QSymElement>) -> QSymElement {
    if let Some(v) = memo.get(&(x.clone(), k)) {
        return v.clone();
    }
    let t = transpose(x);
    let out = if *x < t || (*x == t && k % 2 == 0) {
        QSymElement::single(x.clone(), HPoly::hbar(k))
    } else {
        // class(ħ^k X) = (−1)^k class(ħ^k φ(X)) = (−1)^k [ħ^k X^T + ħ^k corrections]
        let mut corr = QSymElement::zero();
        for (y, h, w) in reflection_corrections(x) {
            corr.add_assign(&reduce(&y, k + h, memo).scale(&w));
        }
        let sign = if k % 2 == 0 { GaussRat::one() } else { GaussRat::from_int(-1) };
        if *x == t {
            // k odd: 2·class(ħ^k X) = −corrections
            corr.scale(&GaussRat::ratio(-1, 2))
        } else {
            let mut v = QSymElement::single(t, HPoly::hbar(k));
            v.add_assign(&corr);
            v.scale(&sign)
        }
    };
    memo.insert((x.clone(), k), out.clone());
    out
}

/// Rewrites every term into the representative `min(X, X^T)` used for the
/// dihedral quotient (`X^T` swaps the `z` and `z̄` exponents of each row).
pub fn dihedral_normal_form(x: &QSymElement) -> QSymElement {
    let mut memo = BTreeMap::new();
    let mut out = QSymElement::zero();
    for (m, c) in &x.terms {
        for (k, w) in c.terms() {
            out.add_assign(&reduce(m, k, &mut memo).scale(w));
        }
    }
    out
}

/// The star product averaged over `Z_mⁿ ⋊ S_n` together with the global
/// reflection `z ↔ z̄, ħ ↦ −ħ`:
/// `½ Ā⋆C̄ + (1/2n!) Σ_{σ,I} (−2i)^{|I|} C(b+c,I)(σ(d))_I class(A + (σ(d),σ(c)) − (I,I)) ħ^{|I|}`,
/// reduced to [`dihedral_normal_form`].
pub fn dihedral_star(a: &ExpMatrix, c: &ExpMatrix, m_cyc: u32) -> Result<QSymElement> {
    dihedral_star_elem(&QSymElement::basis(a.clone()), &QSymElement::basis(c.clone()), m_cyc)
}

pub fn dihedral_star_elem(x: &QSymElement, y: &QSymElement, m_cyc: u32) -> Result<QSymElement> {
    for m in x.terms.keys().chain(y.terms.keys()) {
        check_congruence(m, m_cyc)?;
    }
    let scale = minus_two_i();
    let rotations = bilinear(x, y, |a, c| averaged_star(WeylKind::Weyl, &scale, a, c))?;
    // φ(q·z^c z̄^d) = q(−ħ)·z̄^c z^d, and z^a z̄^b · z̄^c z^d = z^a z̄^{b+c} z^d
    let mut reflected = QSymElement::zero();
    for (a, p) in &x.terms {
        for (c, q) in &y.terms {
            let part = averaged_with(a, c, |l, r| slot_product(WeylKind::Weyl, &scale, &[l[0], l[1] + r[0]], &[r[1], 0]))?;
            reflected.add_assign(&part.mul_hpoly(&(p * &q.flip_hbar())));
        }
    }
    let mut sum = rotations;
    sum.add_assign(&reflected);
    Ok(dihedral_normal_form(&sum.div_nat(2)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[(u32, u32)]) -> ExpMatrix {
        ExpMatrix::from_weyl_rows(rows)
    }

    #[test]
    fn zbar_z_relation() {
        let p = wreath_zm_star(&m(&[(0, 1)]), &m(&[(1, 0)]), 1).unwrap();
        let mut e = QSymElement::basis(m(&[(1, 1)]));
        e.add_term(m(&[(0, 0)]), &HPoly::monomial(minus_two_i(), 1));
        assert_eq!(p, e);
    }

    #[test]
    fn congruence_is_enforced() {
        assert!(wreath_zm_star(&m(&[(0, 1)]), &m(&[(1, 0)]), 2).is_err());
        assert!(wreath_zm_star(&m(&[(0, 2), (0, 0)]), &m(&[(2, 0), (0, 0)]), 2).is_ok());
    }

    #[test]
    fn reflection_kills_odd_hbar_on_self_conjugate_classes() {
        let x = QSymElement::single(m(&[(0, 0)]), HPoly::hbar(1));
        assert!(dihedral_normal_form(&x).is_zero());
        // class(z z̄) = class(z̄ z) = class(z z̄) − 2iħ, consistent with class(ħ) = 0
        let y = QSymElement::single(m(&[(2, 2)]), HPoly::one());
        assert_eq!(dihedral_normal_form(&y), y);
    }

    #[test]
    fn unit_law() {
        let one = m(&[(0, 0), (0, 0)]);
        let a = m(&[(0, 2), (1, 1)]);
        let na = dihedral_normal_form(&QSymElement::basis(a.clone()));
        assert_eq!(dihedral_star(&one, &a, 2).unwrap(), na);
        assert_eq!(dihedral_star(&a, &one, 2).unwrap(), na);
    }
}
