//! Exterior and Clifford algebras, Koszul signs and symmetric odd functions.

use std::fmt;

use crate::coeff::HPoly;
use crate::comb::permutations;
use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::perm::Perm;
use crate::sympow::BasedAlgebra;

/// `θ_I` for a subset `I ⊆ [m]`, stored as a bitset (bit `i-1` for `θ_i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExtMono(pub u32);

impl ExtMono {
    pub fn from_indices(idx: &[u32]) -> Result<Self> {
        let mut bits = 0u32;
        for &i in idx {
            if i == 0 || i > 32 {
                return Err(Error::OutOfRange(format!("θ index {i} outside 1..32")));
            }
            bits |= 1 << (i - 1);
        }
        Ok(ExtMono(bits))
    }

    pub fn indices(&self) -> Vec<u32> {
        (0..32).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    pub fn len(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn parity(&self) -> u8 {
        (self.0.count_ones() % 2) as u8
    }
}

impl fmt::Display for ExtMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().iter().map(|i| format!("th{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `(−1)^{#{(i,j) ∈ I×J : i > j}}`.
fn inversion_sign(i: ExtMono, j: ExtMono) -> i32 {
    let mut count = 0u32;
    let mut rest = j.0;
    while rest != 0 {
        let b = rest.trailing_zeros();
        // elements of I strictly above b
        count += (i.0 >> b >> 1).count_ones();
        rest &= rest - 1;
    }
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `θ_I θ_J = c(I,J) θ_{I∪J}`, zero when `I ∩ J ≠ ∅`.
pub fn ext_product(i: ExtMono, j: ExtMono) -> Option<(i32, ExtMono)> {
    if i.0 & j.0 != 0 {
        return None;
    }
    Some((inversion_sign(i, j), ExtMono(i.0 | j.0)))
}

/// Product in the Clifford algebra `θ_iθ_j + θ_jθ_i = 2δ_{ij}`.
pub fn clifford_product(i: ExtMono, j: ExtMono) -> (i32, ExtMono) {
    // each θ_j moves left past the larger θ_i, then θ_j θ_j = 1
    (inversion_sign(i, j), ExtMono(i.0 ^ j.0))
}

/// Sign of `(a_1⊗…⊗a_n)·σ(b_1⊗…⊗b_n)` relative to `⊗_k a_k b_{σ⁻¹(k)}`:
/// the factors `a_1..a_n, b_1..b_n` are reordered into
/// `a_1, b_{σ⁻¹(1)}, …, a_n, b_{σ⁻¹(n)}` and every transposition of two odd
/// factors contributes `−1`.
pub fn koszul_sign(a_par: &[u8], b_par: &[u8], sigma: &Perm) -> Result<i32> {
    let n = a_par.len();
    if b_par.len() != n || sigma.degree() != n {
        return Err(Error::DimensionMismatch(format!(
            "parities of length {} and {} with a permutation of degree {}",
            n,
            b_par.len(),
            sigma.degree()
        )));
    }
    let inv = sigma.inverse();
    // target position of each source factor
    let mut target = vec![0usize; 2 * n];
    let mut par = vec![0u8; 2 * n];
    for k in 0..n {
        target[k] = 2 * k;
        par[k] = a_par[k];
        target[n + inv.apply(k)] = 2 * k + 1;
        par[n + inv.apply(k)] = b_par[inv.apply(k)];
    }
    let mut count = 0u32;
    for x in 0..2 * n {
        for y in x + 1..2 * n {
            if target[x] > target[y] && par[x] == 1 && par[y] == 1 {
                count += 1;
            }
        }
    }
    Ok(if count % 2 == 0 { 1 } else { -1 })
}

/// The closed exponent `Σ_{i>j} ā_i b̄_{σ⁻¹(j)} + Σ_{i<j, σ(i)>σ(j)} b̄_i b̄_j`.
pub fn koszul_sign_formula(a_par: &[u8], b_par: &[u8], sigma: &Perm) -> i32 {
    let n = a_par.len();
    let inv = sigma.inverse();
    let mut e = 0u32;
    for i in 0..n {
        for j in 0..i {
            e += (a_par[i] * b_par[inv.apply(j)]) as u32;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if sigma.apply(i) > sigma.apply(j) {
                e += (b_par[i] * b_par[j]) as u32;
            }
        }
    }
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A class in `(⋀[θ]^{⊗n})_{S_n}`.
pub type OddSymElement = Lin<Vec<ExtMono>>;

/// Graded sort of a tuple: `class(t) = sign·class(rep)`; sign 0 when an odd
/// factor repeats (the class is its own negative).
pub fn odd_canonicalize(t: &[ExtMono]) -> (Vec<ExtMono>, i32) {
    let mut idx: Vec<usize> = (0..t.len()).collect();
    idx.sort_by_key(|&k| t[k]);
    let rep: Vec<ExtMono> = idx.iter().map(|&k| t[k]).collect();
    if rep.windows(2).any(|w| w[0] == w[1] && w[0].parity() == 1) {
        return (rep, 0);
    }
    let mut count = 0;
    for x in 0..idx.len() {
        for y in x + 1..idx.len() {
            if idx[x] > idx[y] && t[idx[x]].parity() == 1 && t[idx[y]].parity() == 1 {
                count += 1;
            }
        }
    }
    (rep, if count % 2 == 0 { 1 } else { -1 })
}

/// `(1/n!) Σ_σ sgn(I,J,σ) Π_k c(I_k, J_{σ⁻¹(k)}) class(Π_k θ_{I_k ∪ J_{σ⁻¹(k)}})`.
pub fn odd_sym_product(i_tup: &[ExtMono], j_tup: &[ExtMono]) -> Result<OddSymElement> {
    let n = i_tup.len();
    if j_tup.len() != n {
        return Err(Error::DimensionMismatch(format!("tuples of length {n} and {}", j_tup.len())));
    }
    let a_par: Vec<u8> = i_tup.iter().map(ExtMono::parity).collect();
    let b_par: Vec<u8> = j_tup.iter().map(ExtMono::parity).collect();
    let perms = permutations(n);
    let mut out = OddSymElement::zero();
    'perm: for images in &perms {
        let sigma = Perm::from_images(images.clone())?;
        let inv = sigma.inverse();
        let mut sign = koszul_sign(&a_par, &b_par, &sigma)?;
        let mut slots = Vec::with_capacity(n);
        for k in 0..n {
            match ext_product(i_tup[k], j_tup[inv.apply(k)]) {
                None => continue 'perm,
                Some((s, m)) => {
                    sign *= s;
                    slots.push(m);
                }
            }
        }
        let (rep, s) = odd_canonicalize(&slots);
        if s != 0 {
            out.add_term(rep, &HPoly::from_int((sign * s) as i64));
        }
    }
    out.div_nat(perms.len() as u64)
}

/// Bilinear extension of [`odd_sym_product`].
pub fn odd_sym_mul(x: &OddSymElement, y: &OddSymElement) -> Result<OddSymElement> {
    let mut out = OddSymElement::zero();
    for (a, c) in &x.terms {
        for (b, d) in &y.terms {
            out.add_assign(&odd_sym_product(a, b)?.mul_hpoly(&(c * d)));
        }
    }
    Ok(out)
}

fn subset_algebra(m: u32, clifford: bool) -> BasedAlgebra {
    let dim = 1usize << m;
    let names = (0..dim).map(|b| ExtMono(b as u32).to_string()).collect();
    let parity = (0..dim).map(|b| ExtMono(b as u32).parity()).collect();
    BasedAlgebra::new(names, parity, Some(0), |s, t| {
        let (i, j) = (ExtMono(s as u32), ExtMono(t as u32));
        let prod = if clifford { Some(clifford_product(i, j)) } else { ext_product(i, j) };
        match prod {
            Some((sign, k)) => vec![(k.0 as usize, HPoly::from_int(sign as i64))],
            None => vec![],
        }
    })
    .expect("subset algebras are associative")
}

/// `⋀[θ_1..θ_m]` as a based algebra; label `l` is the bitset of `θ_I`.
pub fn exterior_algebra(m: u32) -> BasedAlgebra {
    subset_algebra(m, false)
}

/// The Clifford algebra `C(m)` as a based algebra of dimension `2^m`.
pub fn clifford_algebra(m: u32) -> BasedAlgebra {
    subset_algebra(m, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn th(idx: &[u32]) -> ExtMono {
        ExtMono::from_indices(idx).unwrap()
    }

    #[test]
    fn ext_examples() {
        assert_eq!(ext_product(th(&[1]), th(&[2])), Some((1, th(&[1, 2]))));
        assert_eq!(ext_product(th(&[2]), th(&[1])), Some((-1, th(&[1, 2]))));
        assert_eq!(ext_product(th(&[1]), th(&[1])), None);
    }

    #[test]
    fn clifford_examples() {
        assert_eq!(clifford_product(th(&[1]), th(&[1])), (1, th(&[])));
        assert_eq!(clifford_product(th(&[1]), th(&[2])), (1, th(&[1, 2])));
        assert_eq!(clifford_product(th(&[1, 2]), th(&[2])), (1, th(&[1])));
        assert_eq!(clifford_product(th(&[2]), th(&[1, 2])), (-1, th(&[1])));
    }

    #[test]
    fn koszul_examples() {
        let id = Perm::identity(2);
        let sw = Perm::from_images(vec![1, 0]).unwrap();
        assert_eq!(koszul_sign(&[0, 0], &[0, 0], &sw).unwrap(), 1);
        assert_eq!(koszul_sign(&[0, 1], &[1, 0], &id).unwrap(), -1);
        // a1 a2 b1 b2 → a1 b2 a2 b1: b2 passes a2 and b1 passes nothing after... four odd factors
        assert_eq!(koszul_sign(&[1, 1], &[1, 1], &sw).unwrap(), 1);
        assert!(koszul_sign(&[1], &[1, 0], &id).is_err());
    }

    #[test]
    fn printed_formula_agrees_with_reordering() {
        for n in 1..=4 {
            for images in permutations(n) {
                let sigma = Perm::from_images(images).unwrap();
                for code in 0..(1u32 << (2 * n)) {
                    let a: Vec<u8> = (0..n).map(|k| (code >> k & 1) as u8).collect();
                    let b: Vec<u8> = (0..n).map(|k| (code >> (n + k) & 1) as u8).collect();
                    assert_eq!(koszul_sign(&a, &b, &sigma).unwrap(), koszul_sign_formula(&a, &b, &sigma));
                }
            }
        }
    }

    #[test]
    fn odd_examples() {
        let p = odd_sym_product(&[th(&[1])], &[th(&[2])]).unwrap();
        assert_eq!(p, OddSymElement::basis(vec![th(&[1, 2])]));
        let z = odd_sym_product(&[th(&[1]), th(&[1])], &[th(&[1, 2]), th(&[1])]).unwrap();
        assert!(z.is_zero());
        assert_eq!(odd_canonicalize(&[th(&[2]), th(&[1])]), (vec![th(&[1]), th(&[2])], -1));
        assert_eq!(odd_canonicalize(&[th(&[1]), th(&[1])]).1, 0);
    }

    #[test]
    fn subset_algebras_build() {
        assert_eq!(exterior_algebra(3).dim(), 8);
        assert_eq!(clifford_algebra(3).dim(), 8);
    }
}
