//! The symmetric Boolean algebra: classes `[a]` of subsets of `[n]` of size `a`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::comb::{binomial, permutations};
use crate::error::{Error, Result};

fn check(a: u32, b: u32, n: u32) -> Result<()> {
    if a > n || b > n {
        return Err(Error::OutOfRange(format!("need 0 ≤ a,b ≤ n, got a={a}, b={b}, n={n}")));
    }
    Ok(())
}

/// `[a][b] = (1/C(n,b)) Σ_{k=0}^{min(b,n−a)} C(a,b−k) C(n−a,k) [a+k]`.
pub fn boolean_product(a: u32, b: u32, n: u32) -> Result<BTreeMap<u32, BigRational>> {
    check(a, b, n)?;
    let denom = binomial(n as u64, b as u64);
    let mut out = BTreeMap::new();
    for k in 0..=b.min(n - a) {
        let num = binomial(a as u64, (b - k) as u64) * binomial((n - a) as u64, k as u64);
        if !num.is_zero() {
            out.insert(a + k, BigRational::new(num, denom.clone()));
        }
    }
    Ok(out)
}

/// `(1/n!) Σ_σ [A ∪ σ(B)]` with `A = {1..a}`, `B = {1..b}`, by enumeration.
pub fn boolean_direct(a: u32, b: u32, n: u32) -> Result<BTreeMap<u32, BigRational>> {
    check(a, b, n)?;
    let perms = permutations(n as usize);
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for p in &perms {
        let mut set = vec![false; n as usize];
        for x in set.iter_mut().take(a as usize) {
            *x = true;
        }
        for i in 0..b as usize {
            set[p[i]] = true;
        }
        *counts.entry(set.iter().filter(|&&x| x).count() as u32).or_default() += 1;
    }
    let total = BigInt::from(perms.len());
    Ok(counts.into_iter().map(|(k, c)| (k, BigRational::new(BigInt::from(c), total.clone()))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn examples() {
        assert_eq!(boolean_product(0, 2, 4).unwrap(), BTreeMap::from([(2, BigRational::one())]));
        assert_eq!(boolean_product(4, 1, 4).unwrap(), BTreeMap::from([(4, BigRational::one())]));
        assert_eq!(boolean_product(1, 1, 2).unwrap(), BTreeMap::from([(1, r(1, 2)), (2, r(1, 2))]));
        assert!(boolean_product(3, 1, 2).is_err());
    }

    #[test]
    fn closed_form_matches_enumeration() {
        for n in 0..=5 {
            for a in 0..=n {
                for b in 0..=n {
                    assert_eq!(boolean_product(a, b, n).unwrap(), boolean_direct(a, b, n).unwrap());
                }
            }
        }
    }
}
