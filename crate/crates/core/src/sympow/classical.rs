//! Products of monomial symmetric functions of types A, B and D.

use crate::coeff::HPoly;
use crate::comb::permutations;
use crate::error::{Error, Result};
use crate::expmat::ExpMatrix;
use crate::lin::Lin;

/// The Weyl-group family whose invariants are being multiplied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    D,
}

/// Checks the parity condition of a family: every row of even degree (B),
/// or all rows of one common parity (D).
pub fn check_family(a: &ExpMatrix, family: Family) -> Result<()> {
    let parities: Vec<u32> = (0..a.n()).map(|j| a.row_degree(j) % 2).collect();
    match family {
        Family::A => Ok(()),
        Family::B => match parities.iter().position(|&p| p == 1) {
            Some(j) => Err(Error::Parity(format!("row {} of {a} has odd degree", j + 1))),
            None => Ok(()),
        },
        Family::D => {
            if parities.windows(2).all(|w| w[0] == w[1]) {
                Ok(())
            } else {
                Err(Error::Parity(format!("rows of {a} mix even and odd degrees")))
            }
        }
    }
}

/// `X̄^A·X̄^B = (1/n!) Σ_σ X̄^{A+σ(B)}`.
pub fn classical_sym_product(a: &ExpMatrix, b: &ExpMatrix, family: Family) -> Result<Lin<ExpMatrix>> {
    a.check_same_shape(b)?;
    check_family(a, family)?;
    check_family(b, family)?;
    let n = a.n();
    let perms = permutations(n);
    let mut out = Lin::zero();
    for p in &perms {
        let rows = (0..n)
            .map(|j| a.rows[j].iter().zip(&b.rows[p[j]]).map(|(x, y)| x + y).collect())
            .collect();
        out.add_term(ExpMatrix { rows }.canonical(), &HPoly::one());
    }
    out.div_nat(perms.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::GaussRat;

    fn m(rows: &[&[u32]]) -> ExpMatrix {
        ExpMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn single_slot_is_monomial_product() {
        let p = classical_sym_product(&m(&[&[1, 2]]), &m(&[&[3, 0]]), Family::A).unwrap();
        assert_eq!(p, Lin::basis(m(&[&[4, 2]])));
    }

    #[test]
    fn two_slots_average() {
        let x1 = m(&[&[0], &[1]]);
        let p = classical_sym_product(&x1, &x1, Family::A).unwrap();
        let half = HPoly::constant(GaussRat::ratio(1, 2));
        let mut e = Lin::zero();
        e.add_term(m(&[&[0], &[2]]), &half);
        e.add_term(m(&[&[1], &[1]]), &half);
        assert_eq!(p, e);
    }

    #[test]
    fn family_preconditions() {
        let odd = m(&[&[1], &[0]]);
        assert!(matches!(classical_sym_product(&odd, &odd, Family::B), Err(Error::Parity(_))));
        assert!(matches!(classical_sym_product(&odd, &odd, Family::D), Err(Error::Parity(_))));
        let even = m(&[&[2], &[0]]);
        assert_eq!(
            classical_sym_product(&even, &even, Family::B).unwrap(),
            classical_sym_product(&even, &even, Family::A).unwrap()
        );
        let all_odd = m(&[&[1], &[3]]);
        let other = m(&[&[1], &[1]]);
        assert_eq!(
            classical_sym_product(&all_odd, &other, Family::D).unwrap(),
            classical_sym_product(&all_odd, &other, Family::A).unwrap()
        );
    }
}
