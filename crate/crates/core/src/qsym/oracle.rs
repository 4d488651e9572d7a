//! Encodings of single-pair classes as label tuples of the truncated Weyl
//! algebra, and the group actions whose averages the star products compute.

use super::complex::minus_two_i;
use super::{slot_product, QSymElement};
use crate::coeff::{GaussRat, HPoly};
use crate::error::{Error, Result};
use crate::expmat::ExpMatrix;
use crate::perm::{Perm, PermGroup};
use crate::sympow::{
    monomial_canonical, oracle_product, truncated_weyl, weyl_label_index, weyl_labels, BasedAlgebra, Character, Family, GroupAction, GroupElement,
    LabelMap, SymElement, Tuple,
};
use crate::weyl::WeylKind;

/// The truncated algebra the oracles run in: Weyl with contraction weight
/// `1` (real form) or `−2i` (complex form), or M-Weyl.
pub fn weyl_encoding(d: u32, kind: WeylKind, complex: bool) -> BasedAlgebra {
    let scale = if complex { minus_two_i() } else { GaussRat::one() };
    truncated_weyl(d, kind, &scale)
}

pub fn expmat_to_tuple(x: &ExpMatrix) -> Result<Tuple> {
    if x.width() != 2 {
        return Err(Error::DimensionMismatch(format!("label encoding needs width 2, got {}", x.width())));
    }
    Ok(x.rows.iter().map(|r| weyl_label_index(r[0], r[1])).collect())
}

fn label_pair(l: usize) -> (u32, u32) {
    let mut t = 0usize;
    while (t + 1) * (t + 2) / 2 <= l {
        t += 1;
    }
    let b = l - t * (t + 1) / 2;
    ((t - b) as u32, b as u32)
}

pub fn tuple_to_expmat(t: &[usize]) -> ExpMatrix {
    ExpMatrix { rows: t.iter().map(|&l| { let (a, b) = label_pair(l); vec![a, b] }).collect() }
}

pub fn to_sym(x: &QSymElement) -> Result<SymElement> {
    let mut out = SymElement::zero();
    for (m, c) in &x.terms {
        out.add_term(expmat_to_tuple(m)?, c);
    }
    Ok(out)
}

/// Reads tuples back as `S_n`-classes (rows sorted).
pub fn from_sym(x: &SymElement) -> QSymElement {
    let mut out = QSymElement::zero();
    for (t, c) in &x.terms {
        out.add_term(tuple_to_expmat(t).canonical(), c);
    }
    out
}

/// `Σ_i max_j deg(row_j)`: a truncation degree at which every product of
/// the factors is exact. Actions passed to [`qsym_oracle`] must be built
/// for at least this degree.
pub fn oracle_degree(factors: &[ExpMatrix]) -> u32 {
    let d: u32 = factors.iter().map(|f| (0..f.n()).map(|j| f.row_degree(j)).max().unwrap_or(0)).sum();
    d.max(1)
}

/// `Π_i Ā_i` by averaging over `action` in the truncated algebra of degree
/// [`oracle_degree`].
pub fn qsym_oracle(factors: &[ExpMatrix], action: &GroupAction, kind: WeylKind, complex: bool) -> Result<QSymElement> {
    let alg = weyl_encoding(oracle_degree(factors), kind, complex);
    let facs = factors
        .iter()
        .map(|f| Ok(SymElement::basis(expmat_to_tuple(f)?)))
        .collect::<Result<Vec<_>>>()?;
    let canon = |t: &Tuple| monomial_canonical(action, &alg, t);
    Ok(from_sym(&oracle_product(&facs, action, &alg, &canon)?))
}

fn plain(perm: &Perm, n: usize) -> GroupElement {
    GroupElement { perm: perm.clone(), slot_maps: vec![None; n], flip_hbar: false }
}

pub fn action_symmetric(n: usize) -> GroupAction {
    GroupAction::from_perm_group(&PermGroup::symmetric(n))
}

/// `Z_2ⁿ ⋊ S_n` (B) or its index-two subgroup of even sign changes (D),
/// the sign acting on `x^a y^b` by `(−1)^{a+b}`.
pub fn action_signed(n: usize, family: Family, d: u32) -> GroupAction {
    let labels = weyl_labels(d);
    let flip = LabelMap {
        images: labels
            .iter()
            .enumerate()
            .map(|(l, &(a, b))| vec![(l, HPoly::from_int(if (a + b) % 2 == 0 { 1 } else { -1 }))])
            .collect(),
    };
    let mut elements = Vec::new();
    for perm in PermGroup::symmetric(n).elements() {
        for mask in 0u32..(1 << n) {
            if family == Family::D && mask.count_ones() % 2 == 1 {
                continue;
            }
            if family == Family::A && mask != 0 {
                continue;
            }
            let slot_maps = (0..n).map(|j| (mask >> j & 1 == 1).then_some(0)).collect();
            elements.push(GroupElement { perm: perm.clone(), slot_maps, flip_hbar: false });
        }
    }
    GroupAction { n, maps: vec![flip], elements, character: None }
}

fn zm_character(m_cyc: u32, d: u32) -> Character {
    Character { modulus: m_cyc, exps: weyl_labels(d).iter().map(|&(a, b)| a as i64 - b as i64).collect() }
}

/// `Z_mⁿ ⋊ S_n` with `ζ` acting on `z^a z̄^b` by `ζ^{a−b}`; the `Z_mⁿ` part
/// is averaged analytically.
pub fn action_zm(n: usize, m_cyc: u32, d: u32) -> GroupAction {
    let mut g = action_symmetric(n);
    g.character = Some(zm_character(m_cyc, d));
    g
}

/// [`action_zm`] extended by the reflection `z ↔ z̄, ħ ↦ −ħ` on all slots.
pub fn action_dihedral(n: usize, m_cyc: u32, d: u32) -> GroupAction {
    let scale = minus_two_i();
    let phi = LabelMap {
        images: weyl_labels(d)
            .iter()
            .map(|&(a, b)| {
                slot_product(WeylKind::Weyl, &scale, &[0, a], &[b, 0])
                    .into_iter()
                    .map(|(r, h, c)| (weyl_label_index(r[0], r[1]), HPoly::monomial(c, h)))
                    .collect()
            })
            .collect(),
    };
    let mut elements = Vec::new();
    for perm in PermGroup::symmetric(n).elements() {
        elements.push(plain(perm, n));
        elements.push(GroupElement { perm: perm.clone(), slot_maps: vec![Some(0); n], flip_hbar: true });
    }
    GroupAction { n, maps: vec![phi], elements, character: Some(zm_character(m_cyc, d)) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_round_trip() {
        for (l, &(a, b)) in weyl_labels(6).iter().enumerate() {
            assert_eq!(label_pair(l), (a, b));
        }
        let x = ExpMatrix::from_weyl_rows(&[(2, 1), (0, 3)]);
        assert_eq!(tuple_to_expmat(&expmat_to_tuple(&x).unwrap()), x);
    }

    #[test]
    fn group_orders() {
        assert_eq!(action_signed(2, Family::B, 2).elements.len(), 8);
        assert_eq!(action_signed(2, Family::D, 2).elements.len(), 4);
        assert_eq!(action_dihedral(2, 2, 2).elements.len(), 4);
    }
}
