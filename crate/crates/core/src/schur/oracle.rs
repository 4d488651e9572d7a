//! Brute-force composition: matrix units on `V ⊕ W ⊕ Z` carrying `Z_m`
//! labels form a based superalgebra, and the composition of classes is the
//! `Z_mⁿ ⋊ S_n`-averaged tensor product.

use super::{schur_classes, ElemTrans, SchurElement, SchurType, SuperSpace};
use crate::coeff::HPoly;
use crate::error::Result;
use crate::perm::PermGroup;
use crate::sympow::{monomial_canonical, oracle_product, BasedAlgebra, GroupAction, GroupElement, LabelMap, SymElement};

/// The algebra, the group action and the block offsets of `V`, `W`, `Z`.
pub struct SchurOracle {
    pub ty: SchurType,
    pub spaces: [SuperSpace; 3],
    pub algebra: BasedAlgebra,
    pub action: GroupAction,
    offsets: [usize; 3],
    group: Vec<Vec<u32>>,
}

impl SchurOracle {
    pub fn new(ty: &SchurType, v: &SuperSpace, w: &SuperSpace, z: &SuperSpace) -> Self {
        let offsets = [0, v.dim(), v.dim() + w.dim()];
        let parity: Vec<u8> = v.parity.iter().chain(&w.parity).chain(&z.parity).copied().collect();
        let d = parity.len();
        let group = ty.group_elements();
        let mm = group.len();
        let label = |r: usize, s: usize, t: usize, u: usize| ((r * mm + s) * d + t) * mm + u;
        let dim = d * mm * d * mm;
        let mut names = Vec::with_capacity(dim);
        let mut par = Vec::with_capacity(dim);
        let mut parts = Vec::with_capacity(dim);
        for r in 0..d {
            for s in 0..mm {
                for t in 0..d {
                    for u in 0..mm {
                        names.push(format!("E[{r};{s}->{t};{u}]"));
                        par.push((parity[r] + parity[t]) % 2);
                        parts.push((r, s, t, u));
                    }
                }
            }
        }
        let algebra = BasedAlgebra::new(names, par, None, |a, b| {
            let (r1, s1, t1, u1) = parts[a];
            let (r2, s2, t2, u2) = parts[b];
            if t1 == r2 && u1 == s2 {
                vec![(label(r1, s1, t2, u2), HPoly::one())]
            } else {
                vec![]
            }
        })
        .expect("matrix units form an algebra");
        let code = |v: &[u32]| group.iter().position(|g| g == v).expect("reduced multi-index");
        let maps: Vec<LabelMap> = group
            .iter()
            .map(|c| LabelMap {
                images: parts
                    .iter()
                    .map(|&(r, s, t, u)| {
                        let s2 = code(&ty.shift(&group[s], c, &vec![0; c.len()]));
                        let u2 = code(&ty.shift(&group[u], c, &vec![0; c.len()]));
                        vec![(label(r, s2, t, u2), HPoly::one())]
                    })
                    .collect(),
            })
            .collect();
        let mut elements = Vec::new();
        for perm in PermGroup::symmetric(ty.n).elements() {
            let total = mm.pow(ty.n as u32);
            for mut cc in 0..total {
                let slot_maps = (0..ty.n)
                    .map(|_| {
                        let c = cc % mm;
                        cc /= mm;
                        Some(c)
                    })
                    .collect();
                elements.push(GroupElement { perm: perm.clone(), slot_maps, flip_hbar: false });
            }
        }
        let action = GroupAction { n: ty.n, maps, elements, character: None };
        SchurOracle {
            ty: ty.clone(),
            spaces: [v.clone(), w.clone(), z.clone()],
            algebra,
            action,
            offsets,
            group,
        }
    }

    fn encode(&self, x: &SchurElement, from: usize, to: usize) -> SymElement {
        let d: usize = self.spaces.iter().map(SuperSpace::dim).sum();
        let mm = self.group.len();
        let code = |v: &[u32]| self.group.iter().position(|g| g == v).expect("reduced multi-index");
        let mut out = SymElement::zero();
        for (slots, c) in &x.terms {
            let t = slots
                .iter()
                .map(|e| {
                    let (r, t) = (e.r + self.offsets[from], e.t + self.offsets[to]);
                    ((r * mm + code(&e.s)) * d + t) * mm + code(&e.u)
                })
                .collect();
            out.add_term(t, c);
        }
        out
    }

    fn decode(&self, x: &SymElement, from: usize, to: usize) -> SchurElement {
        let d: usize = self.spaces.iter().map(SuperSpace::dim).sum();
        let mm = self.group.len();
        let mut out = SchurElement::zero();
        for (t, c) in &x.terms {
            let slots = t
                .iter()
                .map(|&l| {
                    let u = l % mm;
                    let t = (l / mm) % d;
                    let s = (l / mm / d) % mm;
                    let r = l / mm / d / mm;
                    ElemTrans {
                        r: r - self.offsets[from],
                        s: self.group[s].clone(),
                        t: t - self.offsets[to],
                        u: self.group[u].clone(),
                    }
                })
                .collect();
            out.add_term(slots, c);
        }
        schur_classes(&out, &self.ty, &self.spaces[from], &self.spaces[to])
    }

    /// `F` then `G` for `F: V → W`, `G: W → Z`, by averaging.
    pub fn compose(&self, f: &SchurElement, g: &SchurElement) -> Result<SchurElement> {
        let canon = |t: &Vec<usize>| monomial_canonical(&self.action, &self.algebra, t);
        let p = oracle_product(&[self.encode(f, 0, 1), self.encode(g, 1, 2)], &self.action, &self.algebra, &canon)?;
        Ok(self.decode(&p, 0, 2))
    }
}

/// One-shot [`SchurOracle::compose`].
pub fn schur_oracle_compose(
    f: &SchurElement,
    g: &SchurElement,
    ty: &SchurType,
    v: &SuperSpace,
    w: &SuperSpace,
    z: &SuperSpace,
) -> Result<SchurElement> {
    SchurOracle::new(ty, v, w, z).compose(f, g)
}
