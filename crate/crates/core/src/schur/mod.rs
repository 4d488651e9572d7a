//! Morphisms of the Schur supercategory `S(m, n)` and the truncated `gl(∞)`
//! model of the Weyl algebra.
//!
//! A morphism `V → W` is a class in
//! `(Hom(V^{⊕Z_m}, W^{⊕Z_m})^{⊗n})_{Z_mⁿ ⋊ S_n}`. Slots are elementary maps
//! `E_{rs}^{tu}: (r, s) ↦ (t, u)` with `r, t` basis indices and `s, u` in
//! `Z_m = Z_{m_1} × … × Z_{m_k}`.

mod glinf;
mod oracle;

use std::fmt;

use crate::coeff::HPoly;
use crate::comb::permutations;
use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::perm::Perm;
use crate::superalg::koszul_sign;

pub use glinf::{elem_matrix, normal_form_to_glinf, weyl_to_glinf, GlInfTrunc};
pub use oracle::{schur_oracle_compose, SchurOracle};

/// `E_{rs}^{tu}`, indices 0-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElemTrans {
    pub r: usize,
    pub s: Vec<u32>,
    pub t: usize,
    pub u: Vec<u32>,
}

impl ElemTrans {
    pub fn new(r: usize, s: Vec<u32>, t: usize, u: Vec<u32>) -> Self {
        ElemTrans { r, s, t, u }
    }

    /// Parity of the map: `|r| + |t|`.
    pub fn parity(&self, source: &SuperSpace, target: &SuperSpace) -> u8 {
        (source.parity[self.r] + target.parity[self.t]) % 2
    }
}

impl fmt::Display for ElemTrans {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "E[{};{} -> {};{}]", self.r + 1, idx(&self.s), self.t + 1, idx(&self.u))
    }
}

/// A finite-dimensional supervector space, given by the parity of each basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperSpace {
    pub parity: Vec<u8>,
}

impl SuperSpace {
    pub fn even(dim: usize) -> Self {
        SuperSpace { parity: vec![0; dim] }
    }

    pub fn new(parity: Vec<u8>) -> Result<Self> {
        if parity.iter().any(|&p| p > 1) {
            return Err(Error::InvalidAlgebra("parities must be 0 or 1".into()));
        }
        Ok(SuperSpace { parity })
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }
}

/// The type `(m, n)` of the category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurType {
    pub m: Vec<u32>,
    pub n: usize,
}

impl SchurType {
    pub fn new(m: Vec<u32>, n: usize) -> Result<Self> {
        if m.contains(&0) {
            return Err(Error::OutOfRange("cyclic orders must be positive".into()));
        }
        Ok(SchurType { m, n })
    }

    /// `M = m_1 ⋯ m_k`.
    pub fn group_order(&self) -> u64 {
        self.m.iter().map(|&x| x as u64).product()
    }

    fn reduce(&self, v: &[u32]) -> Vec<u32> {
        v.iter().zip(&self.m).map(|(x, m)| x % m).collect()
    }

    fn shift(&self, v: &[u32], by: &[u32], minus: &[u32]) -> Vec<u32> {
        (0..self.m.len())
            .map(|q| {
                let m = self.m[q] as i64;
                (v[q] as i64 + by[q] as i64 - minus[q] as i64).rem_euclid(m) as u32
            })
            .collect()
    }

    /// Every element of `Z_m`, in lexicographic order.
    pub fn group_elements(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for &m in &self.m {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..m).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }
}

/// A morphism: canonical slot tuples with coefficients.
pub type SchurElement = Lin<Vec<ElemTrans>>;

fn check_slots(x: &[ElemTrans], ty: &SchurType, source: &SuperSpace, target: &SuperSpace) -> Result<()> {
    if x.len() != ty.n {
        return Err(Error::DegreeMismatch { expected: ty.n, found: x.len() });
    }
    for e in x {
        if e.r >= source.dim() || e.t >= target.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{e} does not map a {}-dimensional space to a {}-dimensional one",
                source.dim(),
                target.dim()
            )));
        }
        if e.s.len() != ty.m.len() || e.u.len() != ty.m.len() {
            return Err(Error::DimensionMismatch(format!("{e}: multi-indices need {} entries", ty.m.len())));
        }
        if e.s.iter().chain(&e.u).zip(ty.m.iter().chain(&ty.m)).any(|(x, m)| x >= m) {
            return Err(Error::OutOfRange(format!("{e}: multi-index not reduced mod {:?}", ty.m)));
        }
    }
    Ok(())
}

/// Canonical class of a slot tuple: every slot shifted to `s = 0`, slots
/// sorted with the Koszul sign of the reordering. Sign 0 when two equal odd
/// slots make the class its own negative.
pub fn schur_canonicalize(
    x: &[ElemTrans],
    ty: &SchurType,
    source: &SuperSpace,
    target: &SuperSpace,
) -> (Vec<ElemTrans>, i32) {
    let zero = vec![0; ty.m.len()];
    let shifted: Vec<ElemTrans> = x
        .iter()
        .map(|e| ElemTrans { r: e.r, s: zero.clone(), t: e.t, u: ty.shift(&e.u, &zero, &e.s) })
        .collect();
    let mut idx: Vec<usize> = (0..shifted.len()).collect();
    idx.sort_by(|&a, &b| shifted[a].cmp(&shifted[b]));
    let rep: Vec<ElemTrans> = idx.iter().map(|&k| shifted[k].clone()).collect();
    let odd: Vec<bool> = shifted.iter().map(|e| e.parity(source, target) == 1).collect();
    if rep.windows(2).any(|w| w[0] == w[1] && w[0].parity(source, target) == 1) {
        return (rep, 0);
    }
    // rep = σ(shifted) with σ(idx[k]) = k
    let mut images = vec![0; idx.len()];
    for (k, &i) in idx.iter().enumerate() {
        images[i] = k;
    }
    let sigma = Perm::from_images(images).expect("sorting yields a permutation");
    (rep, sigma.koszul_sign(&odd))
}

/// Reduces arbitrary slot tuples to canonical classes.
pub fn schur_classes(x: &SchurElement, ty: &SchurType, source: &SuperSpace, target: &SuperSpace) -> SchurElement {
    let mut out = SchurElement::zero();
    for (t, c) in &x.terms {
        let (rep, s) = schur_canonicalize(t, ty, source, target);
        if s != 0 {
            out.add_term(rep, &if s > 0 { c.clone() } else { -c.clone() });
        }
    }
    out
}

/// `F` then `G` for `F: V → W`, `G: W → Z`:
/// `(1/(Mⁿ n!)) Σ_{σ : r^G_{σ⁻¹(j)} = t^F_j} sgn · ⊗_j E_{r^F_j s^F_j}^{t^G_{σ⁻¹(j)}, u^G_{σ⁻¹(j)} + u^F_j − s^G_{σ⁻¹(j)}}`,
/// the sign being the Koszul sign of interleaving the two tuples.
pub fn schur_compose(
    f: &SchurElement,
    g: &SchurElement,
    ty: &SchurType,
    v: &SuperSpace,
    w: &SuperSpace,
    z: &SuperSpace,
) -> Result<SchurElement> {
    for x in f.terms.keys() {
        check_slots(x, ty, v, w)?;
    }
    for x in g.terms.keys() {
        check_slots(x, ty, w, z)?;
    }
    let perms = permutations(ty.n);
    let mut out = SchurElement::zero();
    for (a, ca) in &f.terms {
        let a_par: Vec<u8> = a.iter().map(|e| e.parity(v, w)).collect();
        for (b, cb) in &g.terms {
            let b_par: Vec<u8> = b.iter().map(|e| e.parity(w, z)).collect();
            let coef = ca * cb;
            for images in &perms {
                let sigma = Perm::from_images(images.clone())?;
                let inv = sigma.inverse();
                if (0..ty.n).any(|j| b[inv.apply(j)].r != a[j].t) {
                    continue;
                }
                let slots: Vec<ElemTrans> = (0..ty.n)
                    .map(|j| {
                        let (fa, gb) = (&a[j], &b[inv.apply(j)]);
                        ElemTrans { r: fa.r, s: fa.s.clone(), t: gb.t, u: ty.shift(&gb.u, &fa.u, &gb.s) }
                    })
                    .collect();
                let sign = koszul_sign(&a_par, &b_par, &sigma)?;
                let (rep, s) = schur_canonicalize(&slots, ty, v, z);
                if s != 0 {
                    let c = if sign * s > 0 { coef.clone() } else { -coef.clone() };
                    out.add_term(rep, &c);
                }
            }
        }
    }
    let denom = ty.group_order().pow(ty.n as u32) * perms.len() as u64;
    out.div_nat(denom)
}

/// `class(id_V^{⊗n}) = Σ_{r, s} class(⊗_j E_{r_j s_j}^{r_j s_j})`.
pub fn schur_identity(ty: &SchurType, v: &SuperSpace) -> SchurElement {
    let zero = vec![0; ty.m.len()];
    let mult = HPoly::from_int(ty.group_order().pow(ty.n as u32) as i64);
    let mut out = SchurElement::zero();
    let d = v.dim();
    let total = d.pow(ty.n as u32);
    for code in 0..total {
        let mut c = code;
        let slots: Vec<ElemTrans> = (0..ty.n)
            .map(|_| {
                let r = c % d;
                c /= d;
                ElemTrans { r, s: zero.clone(), t: r, u: zero.clone() }
            })
            .collect();
        let (rep, s) = schur_canonicalize(&slots, ty, v, v);
        out.add_term(rep, &mult.scale(&crate::coeff::GaussRat::from_int(s as i64)));
    }
    out
}

/// Reduces the multi-indices of a slot tuple mod `m`.
pub fn schur_reduce(x: &[ElemTrans], ty: &SchurType) -> Vec<ElemTrans> {
    x.iter()
        .map(|e| ElemTrans { r: e.r, s: ty.reduce(&e.s), t: e.t, u: ty.reduce(&e.u) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(r: usize, s: u32, t: usize, u: u32) -> ElemTrans {
        ElemTrans::new(r, vec![s], t, vec![u])
    }

    #[test]
    fn single_slot_is_matrix_composition() {
        let ty = SchurType::new(vec![1], 1).unwrap();
        let sp = SuperSpace::even(2);
        let f = SchurElement::basis(vec![e(0, 0, 1, 0)]);
        let g = SchurElement::basis(vec![e(1, 0, 0, 0)]);
        assert_eq!(schur_compose(&f, &g, &ty, &sp, &sp, &sp).unwrap(), SchurElement::basis(vec![e(0, 0, 0, 0)]));
        let g2 = SchurElement::basis(vec![e(0, 0, 1, 0)]);
        assert!(schur_compose(&f, &g2, &ty, &sp, &sp, &sp).unwrap().is_zero());
    }

    #[test]
    fn unit_laws() {
        let ty = SchurType::new(vec![2], 2).unwrap();
        let (v, w) = (SuperSpace::new(vec![0, 1]).unwrap(), SuperSpace::new(vec![1, 0]).unwrap());
        let f = SchurElement::basis(schur_canonicalize(&[e(0, 1, 1, 0), e(1, 0, 0, 0)], &ty, &v, &w).0);
        let left = schur_compose(&schur_identity(&ty, &v), &f, &ty, &v, &v, &w).unwrap();
        let right = schur_compose(&f, &schur_identity(&ty, &w), &ty, &v, &w, &w).unwrap();
        assert_eq!(left, schur_classes(&f, &ty, &v, &w));
        assert_eq!(right, schur_classes(&f, &ty, &v, &w));
    }

    #[test]
    fn odd_duplicate_slots_vanish() {
        let ty = SchurType::new(vec![2], 2).unwrap();
        let (v, w) = (SuperSpace::new(vec![1]).unwrap(), SuperSpace::even(1));
        assert_eq!(schur_canonicalize(&[e(0, 0, 0, 1), e(0, 1, 0, 0)], &ty, &v, &w).1, 0);
        assert_ne!(schur_canonicalize(&[e(0, 0, 0, 1), e(0, 1, 0, 1)], &ty, &v, &w).1, 0);
    }
}
