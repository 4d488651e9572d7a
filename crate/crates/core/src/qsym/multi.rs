//! m-fold products in `Symⁿ(W)` and `Symⁿ(MW)`, one `(x, y)` pair per slot.

use super::{mqsym_star, qsym_star, QSymElement};
use crate::coeff::{GaussRat, HPoly};
use crate::comb::permutations;
use crate::error::{Error, Result};
use crate::expmat::ExpMatrix;
use crate::weyl::{mweyl_coords_closed, normal_coords_closed, WeylKind, WeylWord};

fn check_factors(factors: &[ExpMatrix]) -> Result<usize> {
    let Some(first) = factors.first() else {
        return Err(Error::OutOfRange("empty product".into()));
    };
    for f in factors {
        first.check_same_shape(f)?;
    }
    if first.width() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "one (x, y) pair per slot expected, got width {}",
            first.width()
        )));
    }
    Ok(first.n())
}

/// Terms of the normally ordered slot word: `(x-exp, y-exp, ħ-degree, coefficient)`.
fn slot_terms(kind: WeylKind, w: &WeylWord) -> Vec<(u32, u32, u32, GaussRat)> {
    let (ta, tb) = (w.total_x(), w.total_y());
    let kmax = match kind {
        WeylKind::Weyl => ta.min(tb),
        WeylKind::MWeyl => tb,
    };
    (0..=kmax)
        .filter_map(|k| {
            let (c, x) = match kind {
                WeylKind::Weyl => (normal_coords_closed(w, k), ta - k),
                WeylKind::MWeyl => (mweyl_coords_closed(w, k), ta + k),
            };
            (c != 0.into()).then(|| (x, tb - k, k, GaussRat::from_bigint(c)))
        })
        .collect()
}

/// `(n!)^{m−1} Π_i Ā_i = Σ_{σ ∈ {id}×S_n^{m−1}} class(⊗_j N(Π_i X^{A_{i,σ_i⁻¹(j)}}))`,
/// each slot evaluated through its closed normal coordinates.
fn direct(kind: WeylKind, factors: &[ExpMatrix]) -> Result<QSymElement> {
    let n = check_factors(factors)?;
    let perms = permutations(n);
    let m = factors.len();
    let mut out = QSymElement::zero();
    // odometer over (σ_2, …, σ_m)
    let mut idx = vec![0usize; m.saturating_sub(1)];
    loop {
        let mut acc: Vec<(Vec<Vec<u32>>, u32, GaussRat)> = vec![(Vec::with_capacity(n), 0, GaussRat::one())];
        for j in 0..n {
            let mut word = Vec::with_capacity(m);
            for (i, f) in factors.iter().enumerate() {
                let row = if i == 0 { &f.rows[j] } else { &f.rows[perms[idx[i - 1]][j]] };
                word.push((row[0], row[1]));
            }
            let terms = slot_terms(kind, &WeylWord::new(word));
            let mut next = Vec::with_capacity(acc.len() * terms.len());
            for (rows, h, w) in &acc {
                for (x, y, k, c) in &terms {
                    let mut rows2 = rows.clone();
                    rows2.push(vec![*x, *y]);
                    next.push((rows2, h + k, w * c));
                }
            }
            acc = next;
        }
        for (rows, h, w) in acc {
            out.add_term(ExpMatrix { rows }.canonical(), &HPoly::monomial(w, h));
        }
        let mut pos = 0;
        while pos < idx.len() {
            idx[pos] += 1;
            if idx[pos] < perms.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == idx.len() {
            break;
        }
    }
    out.div_nat((perms.len() as u64).pow(m as u32 - 1))
}

fn iterated(
    factors: &[ExpMatrix],
    star: fn(&QSymElement, &QSymElement) -> Result<QSymElement>,
) -> Result<QSymElement> {
    check_factors(factors)?;
    let mut acc = QSymElement::basis(factors[0].canonical());
    for f in &factors[1..] {
        acc = star(&acc, &QSymElement::basis(f.clone()))?;
    }
    Ok(acc)
}

/// `Π_i Ā_i` in `Symⁿ(W)` by the direct σ-sum over closed normal coordinates.
pub fn symweyl_multiproduct(factors: &[ExpMatrix]) -> Result<QSymElement> {
    direct(WeylKind::Weyl, factors)
}

/// `Π_i Ā_i` in `Symⁿ(W)` by folding the binary star product.
pub fn symweyl_multiproduct_iterated(factors: &[ExpMatrix]) -> Result<QSymElement> {
    iterated(factors, qsym_star)
}

/// `Π_i Ā_i` in `Symⁿ(MW)` by the direct σ-sum; slot exponents `|A_j^σ| + (k, −k)`.
pub fn msymweyl_multiproduct(factors: &[ExpMatrix]) -> Result<QSymElement> {
    direct(WeylKind::MWeyl, factors)
}

pub fn msymweyl_multiproduct_iterated(factors: &[ExpMatrix]) -> Result<QSymElement> {
    iterated(factors, mqsym_star)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsym::qsym_star_a;
    use crate::weyl::mweyl_normal_order;

    fn m(rows: &[(u32, u32)]) -> ExpMatrix {
        ExpMatrix::from_weyl_rows(rows)
    }

    #[test]
    fn one_factor_is_the_class() {
        let a = m(&[(2, 1), (0, 1)]);
        assert_eq!(symweyl_multiproduct(&[a.clone()]).unwrap(), QSymElement::basis(a.canonical()));
        assert_eq!(msymweyl_multiproduct(&[a.clone()]).unwrap(), QSymElement::basis(a.canonical()));
    }

    #[test]
    fn two_factors_match_the_star() {
        let a = m(&[(0, 2), (1, 1)]);
        let c = m(&[(2, 0), (1, 0)]);
        assert_eq!(symweyl_multiproduct(&[a.clone(), c.clone()]).unwrap(), qsym_star_a(&a, &c).unwrap());
    }

    #[test]
    fn mweyl_single_slot_is_normal_order() {
        let p = msymweyl_multiproduct(&[m(&[(0, 2)]), m(&[(1, 1)])]).unwrap();
        let nf = mweyl_normal_order(&WeylWord::new(vec![(0, 2), (1, 1)]));
        let mut e = QSymElement::zero();
        for (&(x, y, h), c) in &nf.terms {
            e.add_term(m(&[(x, y)]), &HPoly::monomial(c.clone(), h));
        }
        assert_eq!(p, e);
    }

    #[test]
    fn three_factors_two_paths() {
        let f = [m(&[(0, 1), (1, 0)]), m(&[(1, 1), (0, 0)]), m(&[(0, 1), (1, 0)])];
        assert_eq!(symweyl_multiproduct(&f).unwrap(), symweyl_multiproduct_iterated(&f).unwrap());
        assert_eq!(msymweyl_multiproduct(&f).unwrap(), msymweyl_multiproduct_iterated(&f).unwrap());
    }
}
