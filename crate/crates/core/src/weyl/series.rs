use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{coord_from_normal_form, normal_order, WeylWord};
use crate::comb::factorial;

type Mono = Vec<u8>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSeriesMismatch {
    pub word: WeylWord,
    pub c: u32,
    pub expected: BigInt,
    pub series: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSeriesReport {
    pub instances: usize,
    pub mismatches: Vec<GenSeriesMismatch>,
}

struct Bounds {
    n: usize,
    amax: u32,
    bmax: u32,
    cmax: u32,
}

impl Bounds {
    fn admits(&self, m: &Mono) -> bool {
        let n = self.n;
        let sa: u32 = m[..n].iter().map(|&e| e as u32).sum();
        let sb: u32 = m[n..2 * n].iter().map(|&e| e as u32).sum();
        sa <= self.amax && sb <= self.bmax && (m[2 * n] as u32) <= self.cmax
    }
}

/// Truncated `exp(Σ_{i>j} u s_i t_j + Σ_i s_i + Σ_j t_j)`; variables are
/// `s_1..s_n` (x-exponents), `t_1..t_n` (y-exponents) and `u`.
fn truncated_exp(bounds: &Bounds) -> HashMap<Mono, BigRational> {
    let n = bounds.n;
    let nv = 2 * n + 1;
    let mut gens: Vec<Mono> = Vec::new();
    for i in 0..n {
        let mut m = vec![0u8; nv];
        m[i] = 1;
        gens.push(m);
        let mut m = vec![0u8; nv];
        m[n + i] = 1;
        gens.push(m);
        for j in 0..i {
            let mut m = vec![0u8; nv];
            m[i] = 1;
            m[n + j] = 1;
            m[2 * n] = 1;
            gens.push(m);
        }
    }
    let mut total: HashMap<Mono, BigRational> = HashMap::new();
    let mut term: HashMap<Mono, BigRational> = HashMap::from([(vec![0u8; nv], BigRational::one())]);
    let mut k: u64 = 0;
    while !term.is_empty() {
        for (m, c) in &term {
            *total.entry(m.clone()).or_insert_with(BigRational::zero) += c;
        }
        k += 1;
        let inv_k = BigRational::new(BigInt::one(), BigInt::from(k));
        let mut next: HashMap<Mono, BigRational> = HashMap::new();
        for (m, c) in &term {
            for g in &gens {
                let prod: Mono = m.iter().zip(g).map(|(x, y)| x + y).collect();
                if bounds.admits(&prod) {
                    *next.entry(prod).or_insert_with(BigRational::zero) += c * &inv_k;
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        term = next;
    }
    total
}

fn vectors_up_to(n: usize, max_sum: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let used: u32 = v.iter().sum();
                (0..=max_sum - used).map(move |e| {
                    let mut v = v.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out
}

/// Compares `a!·b!·[s^a t^b u^c] exp(…)` with `N(A,c)` for every
/// `A = ((a_1,b_1),…,(a_n,b_n))` with `|a| ≤ amax`, `|b| ≤ bmax`, `c ≤ cmax`.
pub fn genseries_check(n: usize, amax: u32, bmax: u32, cmax: u32) -> GenSeriesReport {
    let bounds = Bounds { n, amax, bmax, cmax };
    let series = truncated_exp(&bounds);
    let mut report = GenSeriesReport { instances: 0, mismatches: Vec::new() };
    for a in vectors_up_to(n, amax) {
        for b in vectors_up_to(n, bmax) {
            let word = WeylWord::new(a.iter().copied().zip(b.iter().copied()).collect());
            let nf = normal_order(&word);
            let fact: BigInt = a.iter().chain(&b).map(|&e| factorial(e as u64)).product();
            for c in 0..=cmax {
                let mut key: Mono = a.iter().chain(&b).map(|&e| e as u8).collect();
                key.push(c as u8);
                let coef = series.get(&key).cloned().unwrap_or_else(BigRational::zero);
                let scaled = &coef * BigRational::from_integer(fact.clone());
                let expected = coord_from_normal_form(&nf, &word, c);
                report.instances += 1;
                if scaled != BigRational::from_integer(expected.clone()) {
                    report.mismatches.push(GenSeriesMismatch {
                        word: word.clone(),
                        c,
                        expected,
                        series: scaled,
                    });
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_factor_has_no_contractions() {
        let r = genseries_check(1, 3, 3, 2);
        assert!(r.mismatches.is_empty());
        assert_eq!(r.instances, 4 * 4 * 3);
    }

    #[test]
    fn two_and_three_factors() {
        assert!(genseries_check(2, 2, 2, 2).mismatches.is_empty());
        assert!(genseries_check(3, 2, 2, 2).mismatches.is_empty());
    }
}
