//! Integer combinatorics on arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut out = BigInt::one();
    for j in 0..k {
        out = out * (n - j) / (j + 1);
    }
    out
}

/// Falling factorial `(x)_k = x(x-1)…(x-k+1)`, valid for negative `x`.
pub fn falling(x: &BigInt, k: u64) -> BigInt {
    let mut out = BigInt::one();
    for j in 0..k {
        out *= x - j;
    }
    out
}

/// Rising factorial `x^(k) = x(x+1)…(x+k-1)`.
pub fn rising(x: &BigInt, k: u64) -> BigInt {
    let mut out = BigInt::one();
    for j in 0..k {
        out *= x + j;
    }
    out
}

pub fn multinomial(parts: &[u64]) -> BigInt {
    let total: u64 = parts.iter().sum();
    parts.iter().fold(factorial(total), |acc, &p| acc / factorial(p))
}

/// Calls `f` on every composition of `total` into `parts` nonnegative parts,
/// with part `i` at most `caps[i]`.
pub fn for_each_composition(total: u64, caps: &[u64], f: &mut dyn FnMut(&[u64])) {
    fn rec(rest: u64, caps: &[u64], cur: &mut Vec<u64>, f: &mut dyn FnMut(&[u64])) {
        let i = cur.len();
        if i == caps.len() {
            if rest == 0 {
                f(cur);
            }
            return;
        }
        let remaining_cap: u64 = caps[i + 1..].iter().sum();
        let lo = rest.saturating_sub(remaining_cap);
        for p in lo..=rest.min(caps[i]) {
            cur.push(p);
            rec(rest - p, caps, cur, f);
            cur.pop();
        }
    }
    rec(total, caps, &mut Vec::with_capacity(caps.len()), f);
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(falling(&BigInt::from(-2), 3), BigInt::from(-24));
        assert_eq!(rising(&BigInt::from(1), 2), BigInt::from(2));
        assert_eq!(multinomial(&[2, 1, 1]), BigInt::from(12));
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn compositions_respect_caps() {
        let mut seen = Vec::new();
        for_each_composition(2, &[1, 2], &mut |p| seen.push(p.to_vec()));
        assert_eq!(seen, vec![vec![0, 2], vec![1, 1]]);
    }
}
