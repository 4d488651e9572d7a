//! Quantum symmetric functions: star products on `(ℂ[ℕ^{2m}]^{⊗n}[[ħ]])_{S_n}`
//! and their wreath-product variants.
//!
//! A class is keyed by the row-sorted [`ExpMatrix`]; row `j` of width `2m`
//! holds the exponents `(a_j, b_j)` of `x_1..x_m, y_1..y_m` (or `z, z̄`) in
//! slot `j`. Every product here is the `S_n`-average of the slotwise product
//! in the Weyl (or M-Weyl) algebra.

mod complex;
mod multi;
mod oracle;

use num_bigint::BigInt;

use crate::coeff::{GaussRat, HPoly};
use crate::comb::permutations;
use crate::error::{Error, Result};
use crate::expmat::ExpMatrix;
use crate::lin::Lin;
use crate::sympow::{check_family, Family};
use crate::weyl::{reorder_terms, WeylKind};

pub use complex::{dihedral_normal_form, dihedral_star, dihedral_star_elem, wreath_zm_star, wreath_zm_star_elem};
pub use multi::{
    msymweyl_multiproduct, msymweyl_multiproduct_iterated, symweyl_multiproduct, symweyl_multiproduct_iterated,
};
pub use oracle::{
    action_dihedral, action_signed, action_symmetric, action_zm, expmat_to_tuple, from_sym, oracle_degree, qsym_oracle, to_sym,
    tuple_to_expmat, weyl_encoding,
};

/// Element of `QSym(m)`: canonical exponent matrices with ħ-polynomial coefficients.
pub type QSymElement = Lin<ExpMatrix>;

/// Slotwise product `x^a y^b · x^c y^d` with every contraction weighted by
/// `scale·ħ`: `(row, ħ-degree, coefficient)` triples.
pub(crate) fn slot_product(
    kind: WeylKind,
    scale: &GaussRat,
    left: &[u32],
    right: &[u32],
) -> Vec<(Vec<u32>, u32, GaussRat)> {
    let m = left.len() / 2;
    let mut acc: Vec<(Vec<u32>, u32, BigInt)> = vec![(left.iter().zip(right).map(|(p, q)| p + q).collect(), 0, BigInt::from(1))];
    for q in 0..m {
        let (b, c) = (left[m + q], right[q]);
        let terms = reorder_terms(kind, b, c);
        let mut next = Vec::with_capacity(acc.len() * terms.len());
        for (row, h, w) in &acc {
            for (x, y, k, w2) in &terms {
                let mut r = row.clone();
                r[q] = left[q] + x;
                r[m + q] = y + right[m + q];
                next.push((r, h + k, w * w2));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(r, h, w)| {
            let c = &GaussRat::from_bigint(w) * &scale.pow(h);
            (r, h, c)
        })
        .collect()
}

/// `(1/n!) Σ_σ class(⊗_j a_j ⋆ c_{σ⁻¹(j)})` on basis classes.
pub(crate) fn averaged_star(
    kind: WeylKind,
    scale: &GaussRat,
    a: &ExpMatrix,
    c: &ExpMatrix,
) -> Result<QSymElement> {
    averaged_with(a, c, |l, r| slot_product(kind, scale, l, r))
}

/// `(1/n!) Σ_σ class(⊗_j slot(a_j, c_{σ⁻¹(j)}))`.
pub(crate) fn averaged_with(
    a: &ExpMatrix,
    c: &ExpMatrix,
    slot: impl Fn(&[u32], &[u32]) -> Vec<(Vec<u32>, u32, GaussRat)>,
) -> Result<QSymElement> {
    a.check_same_shape(c)?;
    if a.width() % 2 != 0 {
        return Err(Error::DimensionMismatch(format!("rows of odd width {}", a.width())));
    }
    let n = a.n();
    let perms = permutations(n);
    let mut out = QSymElement::zero();
    for p in &perms {
        let mut acc: Vec<(Vec<Vec<u32>>, u32, GaussRat)> = vec![(Vec::with_capacity(n), 0, GaussRat::one())];
        for j in 0..n {
            let terms = slot(&a.rows[j], &c.rows[p[j]]);
            let mut next = Vec::with_capacity(acc.len() * terms.len());
            for (rows, h, w) in &acc {
                for (r, k, w2) in &terms {
                    let mut rows2 = rows.clone();
                    rows2.push(r.clone());
                    next.push((rows2, h + k, w * w2));
                }
            }
            acc = next;
        }
        for (rows, h, w) in acc {
            out.add_term(ExpMatrix { rows }.canonical(), &HPoly::monomial(w, h));
        }
    }
    out.div_nat(perms.len() as u64)
}

/// Bilinear extension of a product on basis classes.
pub(crate) fn bilinear(
    x: &QSymElement,
    y: &QSymElement,
    basis: impl Fn(&ExpMatrix, &ExpMatrix) -> Result<QSymElement>,
) -> Result<QSymElement> {
    let mut out = QSymElement::zero();
    for (a, c) in &x.terms {
        for (b, d) in &y.terms {
            out.add_assign(&basis(a, b)?.mul_hpoly(&(c * d)));
        }
    }
    Ok(out)
}

/// `Ā⋆C̄ = (1/n!) Σ_{σ,I} C(b,I)(σ(c))_I class(A + σ(C) − (I,I)) ħ^{|I|}`.
pub fn qsym_star_a(a: &ExpMatrix, c: &ExpMatrix) -> Result<QSymElement> {
    averaged_star(WeylKind::Weyl, &GaussRat::one(), a, c)
}

/// The type B or D product: the type A formula on admissible classes.
pub fn qsym_star_bd(a: &ExpMatrix, c: &ExpMatrix, family: Family) -> Result<QSymElement> {
    check_family(a, family)?;
    check_family(c, family)?;
    qsym_star_a(a, c)
}

pub fn qsym_star(x: &QSymElement, y: &QSymElement) -> Result<QSymElement> {
    bilinear(x, y, qsym_star_a)
}

/// The `S_n`-averaged product in `Symⁿ` of the M-Weyl algebra.
pub fn mqsym_star_a(a: &ExpMatrix, c: &ExpMatrix) -> Result<QSymElement> {
    averaged_star(WeylKind::MWeyl, &GaussRat::one(), a, c)
}

pub fn mqsym_star(x: &QSymElement, y: &QSymElement) -> Result<QSymElement> {
    bilinear(x, y, mqsym_star_a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sympow::classical_sym_product;

    fn m(rows: &[(u32, u32)]) -> ExpMatrix {
        ExpMatrix::from_weyl_rows(rows)
    }

    fn half() -> HPoly {
        HPoly::constant(GaussRat::ratio(1, 2))
    }

    #[test]
    fn single_slot_examples() {
        assert_eq!(qsym_star_a(&m(&[(1, 0)]), &m(&[(0, 1)])).unwrap(), QSymElement::basis(m(&[(1, 1)])));
        let mut e = QSymElement::basis(m(&[(1, 1)]));
        e.add_term(m(&[(0, 0)]), &HPoly::hbar(1));
        assert_eq!(qsym_star_a(&m(&[(0, 1)]), &m(&[(1, 0)])).unwrap(), e);
    }

    #[test]
    fn two_slot_average() {
        let p = qsym_star_a(&m(&[(1, 0), (0, 0)]), &m(&[(0, 1), (0, 0)])).unwrap();
        let mut e = QSymElement::zero();
        e.add_term(m(&[(0, 0), (1, 1)]), &half());
        e.add_term(m(&[(0, 1), (1, 0)]), &half());
        assert_eq!(p, e);
    }

    #[test]
    fn classical_limit() {
        let a = m(&[(0, 2), (1, 1)]);
        let c = m(&[(2, 0), (0, 1)]);
        let p = qsym_star_a(&a, &c).unwrap();
        assert_eq!(p.hbar_part(0), classical_sym_product(&a, &c, Family::A).unwrap());
    }

    #[test]
    fn two_variable_rows() {
        // y1 ⋆ x1 x2 = x1 x2 y1 + ħ x2
        let a = ExpMatrix::new(vec![vec![0, 0, 1, 0]]).unwrap();
        let c = ExpMatrix::new(vec![vec![1, 1, 0, 0]]).unwrap();
        let mut e = QSymElement::basis(ExpMatrix::new(vec![vec![1, 1, 1, 0]]).unwrap());
        e.add_term(ExpMatrix::new(vec![vec![0, 1, 0, 0]]).unwrap(), &HPoly::hbar(1));
        assert_eq!(qsym_star_a(&a, &c).unwrap(), e);
    }

    #[test]
    fn family_checks() {
        let even = m(&[(1, 1), (2, 0)]);
        assert_eq!(qsym_star_bd(&even, &even, Family::B).unwrap(), qsym_star_a(&even, &even).unwrap());
        assert!(qsym_star_bd(&m(&[(1, 0), (0, 0)]), &even, Family::B).is_err());
        let odd = m(&[(1, 0), (0, 1)]);
        assert_eq!(qsym_star_bd(&odd, &even, Family::D).unwrap(), qsym_star_a(&odd, &even).unwrap());
        assert!(qsym_star_bd(&m(&[(1, 0), (0, 0)]), &even, Family::D).is_err());
    }

    #[test]
    fn mweyl_single_slot() {
        // y ⋆ x = x y + ħ x²
        let mut e = QSymElement::basis(m(&[(1, 1)]));
        e.add_term(m(&[(2, 0)]), &HPoly::hbar(1));
        assert_eq!(mqsym_star_a(&m(&[(0, 1)]), &m(&[(1, 0)])).unwrap(), e);
    }
}
