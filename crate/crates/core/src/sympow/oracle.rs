//! Brute-force averaging: `ā·b̄ = (1/♯G) Σ_g class(a·g(b))`.

use super::{act_graded, tensor_mul_tuples, BasedAlgebra, SymElement, Tuple};
use crate::coeff::HPoly;
use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

/// Largest explicit group the oracle accepts.
const MAX_GROUP: usize = 200_000;

/// A linear map on basis labels: `images[l]` is the image of `e_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMap {
    pub images: Vec<Vec<(usize, HPoly)>>,
}

impl LabelMap {
    pub fn is_monomial(&self) -> bool {
        self.images.iter().all(|im| im.len() == 1)
    }
}

/// `σ ∘ (φ_1 ⊗ … ⊗ φ_n)`, optionally composed with `ħ ↦ −ħ`.
/// `slot_maps[j]` indexes into [`GroupAction::maps`]; `None` is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub perm: Perm,
    pub slot_maps: Vec<Option<usize>>,
    pub flip_hbar: bool,
}

/// A diagonal `Z_m` action by characters: label `l` in any slot is scaled by
/// `ζ^{exps[l]}`. Its average is evaluated analytically as the indicator of
/// `m | exps[l]` in every slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub modulus: u32,
    pub exps: Vec<i64>,
}

impl Character {
    pub fn admits(&self, t: &[usize]) -> bool {
        t.iter().all(|&l| self.exps[l].rem_euclid(self.modulus as i64) == 0)
    }
}

/// An explicitly enumerated group acting on `A^{⊗n}`, times an optional
/// analytically averaged character group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    pub n: usize,
    pub maps: Vec<LabelMap>,
    pub elements: Vec<GroupElement>,
    pub character: Option<Character>,
}

impl GroupAction {
    pub fn from_perm_group(k: &PermGroup) -> Self {
        GroupAction {
            n: k.degree(),
            maps: Vec::new(),
            elements: k
                .elements()
                .iter()
                .map(|p| GroupElement { perm: p.clone(), slot_maps: vec![None; k.degree()], flip_hbar: false })
                .collect(),
            character: None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.maps.iter().all(LabelMap::is_monomial)
    }

    pub fn admits(&self, t: &[usize]) -> bool {
        self.character.as_ref().is_none_or(|c| c.admits(t))
    }

    /// `g(c·e_t)`.
    pub fn apply_tuple(&self, g: &GroupElement, t: &[usize], c: &HPoly, alg: &BasedAlgebra) -> SymElement {
        let c = if g.flip_hbar { c.flip_hbar() } else { c.clone() };
        let mut acc: Vec<(Tuple, HPoly)> = vec![(Vec::with_capacity(t.len()), c)];
        for (j, &l) in t.iter().enumerate() {
            let images: Vec<(usize, HPoly)> = match g.slot_maps[j] {
                None => vec![(l, HPoly::one())],
                Some(m) => self.maps[m].images[l].clone(),
            };
            let mut next = Vec::with_capacity(acc.len() * images.len());
            for (tt, cc) in &acc {
                for (k, e) in &images {
                    let mut t2 = tt.clone();
                    t2.push(*k);
                    next.push((t2, cc * e));
                }
            }
            acc = next;
        }
        let mut out = SymElement::zero();
        for (tt, cc) in acc {
            let (img, s) = act_graded(&g.perm, &tt, alg.parities());
            out.add_term(img, &if s > 0 { cc } else { -cc });
        }
        out
    }

    pub fn apply(&self, g: &GroupElement, x: &SymElement, alg: &BasedAlgebra) -> SymElement {
        let mut out = SymElement::zero();
        for (t, c) in &x.terms {
            out.add_assign(&self.apply_tuple(g, t, c, alg));
        }
        out
    }

    /// Drops every tuple the character average kills.
    pub fn project(&self, x: &SymElement) -> SymElement {
        let mut out = SymElement::zero();
        for (t, c) in &x.terms {
            if self.admits(t) {
                out.add_term(t.clone(), c);
            }
        }
        out
    }

    fn check_size(&self) -> Result<()> {
        if self.elements.len() > MAX_GROUP {
            return Err(Error::GroupTooLarge(self.elements.len()));
        }
        Ok(())
    }
}

/// Canonical class of a tuple under a monomial action: the least tuple of
/// the orbit, with the scalar relating the two classes; zero when the
/// character kills the tuple or the stabilizer acts by a nontrivial scalar.
pub fn monomial_canonical(action: &GroupAction, alg: &BasedAlgebra, t: &[usize]) -> SymElement {
    if !action.admits(t) {
        return SymElement::zero();
    }
    let mut best: Option<(Tuple, HPoly)> = None;
    let mut killed = false;
    for g in &action.elements {
        let img = action.apply_tuple(g, t, &HPoly::one(), alg);
        let Some((u, c)) = img.terms.into_iter().next() else {
            continue;
        };
        match &best {
            Some((b, _)) if u > *b => {}
            Some((b, bc)) if u == *b => killed |= c != *bc,
            _ => {
                best = Some((u, c));
                killed = false;
            }
        }
    }
    match best {
        Some((u, c)) if !killed => SymElement::single(u, c),
        _ => SymElement::zero(),
    }
}

/// Folds `ā_1·ā_2·…` as `(1/♯G) Σ_g class(a·g(b))`, expanding every
/// representative into the tensor algebra; `canon` maps a tuple to its class.
pub fn oracle_product(
    factors: &[SymElement],
    action: &GroupAction,
    alg: &BasedAlgebra,
    canon: &dyn Fn(&Tuple) -> SymElement,
) -> Result<SymElement> {
    action.check_size()?;
    for f in factors {
        for t in f.terms.keys() {
            if t.len() != action.n {
                return Err(Error::DegreeMismatch { expected: action.n, found: t.len() });
            }
        }
    }
    let Some((first, rest)) = factors.split_first() else {
        return Err(Error::OutOfRange("empty product".into()));
    };
    let classes = |x: &SymElement| {
        let mut out = SymElement::zero();
        for (t, c) in &x.terms {
            out.add_assign(&canon(t).mul_hpoly(c));
        }
        out
    };
    let mut acc = classes(first);
    let order = action.elements.len() as u64;
    for f in rest {
        let mut averaged = SymElement::zero();
        for g in &action.elements {
            averaged.add_assign(&action.project(&action.apply(g, f, alg)));
        }
        let mut next = SymElement::zero();
        for (a, c) in &acc.terms {
            for (b, d) in &averaged.terms {
                let cd = c * d;
                for (t, e) in tensor_mul_tuples(alg, a, b) {
                    next.add_assign(&canon(&t).mul_hpoly(&(&cd * &e)));
                }
            }
        }
        acc = next.div_nat(order)?;
    }
    Ok(acc)
}

/// `s(x) = (1/♯G) Σ_g g(x)`, the invariant attached to a coinvariant class.
pub fn symmetrize(x: &SymElement, action: &GroupAction, alg: &BasedAlgebra) -> Result<SymElement> {
    action.check_size()?;
    let mut out = SymElement::zero();
    for g in &action.elements {
        out.add_assign(&action.apply(g, &action.project(x), alg));
    }
    out.div_nat(action.elements.len() as u64)
}
