//! Normal coordinates by closed formula, pairings, flows and function counts.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::WeylWord;
use crate::comb::{binomial, factorial, falling, for_each_composition, multinomial, rising};
use crate::error::{Error, Result};

/// Default node budget for the enumerators.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

fn closed_sum(w: &WeylWord, k: u32, rising_form: bool) -> BigInt {
    let n = w.len();
    if k == 0 {
        return BigInt::one();
    }
    if n < 2 {
        return BigInt::zero();
    }
    let a: Vec<u64> = w.factors.iter().map(|f| f.0 as u64).collect();
    let b: Vec<u64> = w.factors.iter().map(|f| f.1 as u64).collect();
    // |a_{>i}| for i = 0..n-1 (0-based)
    let a_after: Vec<u64> = (0..n).map(|i| a[i + 1..].iter().sum()).collect();
    let caps = &b[..n - 1];
    let mut total = BigInt::zero();
    for_each_composition(k as u64, caps, &mut |p| {
        let mut term = BigInt::one();
        let mut p_after = 0u64;
        for i in (0..n - 1).rev() {
            let base = if rising_form {
                rising(&BigInt::from(a_after[i] + p_after), p[i])
            } else {
                falling(&(BigInt::from(a_after[i]) - BigInt::from(p_after)), p[i])
            };
            term *= binomial(b[i], p[i]) * base;
            if term.is_zero() {
                return;
            }
            p_after += p[i];
        }
        total += term;
    });
    total
}

/// `N(A,k) = Σ_{|p|=k} Π_{i<n} C(b_i,p_i) (|a_{>i}| − |p_{>i}|)_{p_i}`.
pub fn normal_coords_closed(w: &WeylWord, k: u32) -> BigInt {
    if k > w.total_x().min(w.total_y()) {
        return BigInt::zero();
    }
    closed_sum(w, k, false)
}

/// `N_M(A,k) = Σ_{|p|=k} Π_{i<n} C(b_i,p_i) (|a_{>i}| + |p_{>i}|)^{(p_i)}`.
pub fn mweyl_coords_closed(w: &WeylWord, k: u32) -> BigInt {
    if k > w.total_y() {
        return BigInt::zero();
    }
    closed_sum(w, k, true)
}

struct Budget {
    left: u64,
    limit: u64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget { left: limit, limit }
    }

    fn tick(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::BudgetExceeded(self.limit));
        }
        self.left -= 1;
        Ok(())
    }
}

/// Block index of every x (`E`) and every y (`F`) of the word.
fn blocks(w: &WeylWord) -> (Vec<usize>, Vec<usize>) {
    let mut e = Vec::new();
    let mut f = Vec::new();
    for (i, &(a, b)) in w.factors.iter().enumerate() {
        e.extend(std::iter::repeat(i).take(a as usize));
        f.extend(std::iter::repeat(i).take(b as usize));
    }
    (e, f)
}

/// Number of k-pairings for every k, by explicit enumeration of partial
/// injections `E → F` with `e ∈ E_i`, `f ∈ F_j` and `i > j`.
pub fn pairing_counts(w: &WeylWord, budget: u64) -> Result<Vec<u64>> {
    let (e, f) = blocks(w);
    if f.len() > 64 {
        return Err(Error::OutOfRange("more than 64 y-letters".into()));
    }
    let mut counts = vec![0u64; e.len().min(f.len()) + 1];
    let mut budget = Budget::new(budget);

    fn rec(
        idx: usize,
        used: u64,
        size: usize,
        e: &[usize],
        f: &[usize],
        counts: &mut [u64],
        budget: &mut Budget,
    ) -> Result<()> {
        budget.tick()?;
        if idx == e.len() {
            counts[size] += 1;
            return Ok(());
        }
        rec(idx + 1, used, size, e, f, counts, budget)?;
        for (j, &fb) in f.iter().enumerate() {
            if fb < e[idx] && used & (1 << j) == 0 {
                rec(idx + 1, used | (1 << j), size + 1, e, f, counts, budget)?;
            }
        }
        Ok(())
    }

    rec(0, 0, 0, &e, &f, &mut counts, &mut budget)?;
    Ok(counts)
}

pub fn normal_coords_pairings(w: &WeylWord, k: u32, budget: u64) -> Result<BigInt> {
    let counts = pairing_counts(w, budget)?;
    Ok(BigInt::from(counts.get(k as usize).copied().unwrap_or(0)))
}

/// `N(A,c) = Σ_{(c_ij)} Π_i C(a_i,r_i)·multinomial(r_i; c_i·) · Π_j C(b_j,q_j)·multinomial(q_j; c_·j) · Π c_ij!`
/// over matrices indexed by x-block `i` and y-block `j` with `i > j`,
/// where `r_i`, `q_j` are the row and column sums and `Σ c_ij = c`.
pub fn normal_coords_flows(w: &WeylWord, c: u32, budget: u64) -> Result<BigInt> {
    let n = w.len();
    let a: Vec<u64> = w.factors.iter().map(|f| f.0 as u64).collect();
    let b: Vec<u64> = w.factors.iter().map(|f| f.1 as u64).collect();
    let cells: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
    let mut budget = Budget::new(budget);
    let mut total = BigInt::zero();
    let mut vals = vec![0u64; cells.len()];
    let mut row = vec![0u64; n];
    let mut col = vec![0u64; n];

    #[allow(clippy::too_many_arguments)]
    fn rec(
        idx: usize,
        rest: u64,
        cells: &[(usize, usize)],
        a: &[u64],
        b: &[u64],
        vals: &mut [u64],
        row: &mut [u64],
        col: &mut [u64],
        total: &mut BigInt,
        budget: &mut Budget,
    ) -> Result<()> {
        budget.tick()?;
        if idx == cells.len() {
            if rest == 0 {
                *total += flow_term(cells, a, b, vals, row, col);
            }
            return Ok(());
        }
        let (i, j) = cells[idx];
        let cap = rest.min(a[i] - row[i]).min(b[j] - col[j]);
        for v in 0..=cap {
            vals[idx] = v;
            row[i] += v;
            col[j] += v;
            rec(idx + 1, rest - v, cells, a, b, vals, row, col, total, budget)?;
            row[i] -= v;
            col[j] -= v;
        }
        vals[idx] = 0;
        Ok(())
    }

    rec(0, c as u64, &cells, &a, &b, &mut vals, &mut row, &mut col, &mut total, &mut budget)?;
    Ok(total)
}

fn flow_term(
    cells: &[(usize, usize)],
    a: &[u64],
    b: &[u64],
    vals: &[u64],
    row: &[u64],
    col: &[u64],
) -> BigInt {
    let n = a.len();
    let mut term = BigInt::one();
    for i in 0..n {
        let parts: Vec<u64> =
            cells.iter().zip(vals).filter(|((ci, _), _)| *ci == i).map(|(_, &v)| v).collect();
        term *= binomial(a[i], row[i]) * multinomial(&parts);
    }
    for j in 0..n {
        let parts: Vec<u64> =
            cells.iter().zip(vals).filter(|((_, cj), _)| *cj == j).map(|(_, &v)| v).collect();
        term *= binomial(b[j], col[j]) * multinomial(&parts);
    }
    for &v in vals {
        term *= factorial(v);
    }
    term
}

/// Number of assignments, for every total size k, of disjoint linearly
/// ordered lists of y-letters to the x-letters, where a y in block `j` may
/// only be listed under an x in block `i > j`.
pub fn mweyl_function_counts(w: &WeylWord, budget: u64) -> Result<Vec<u64>> {
    let (e, f) = blocks(w);
    let mut counts = vec![0u64; f.len() + 1];
    let mut lens = vec![0usize; e.len()];
    let mut budget = Budget::new(budget);

    fn rec(
        idx: usize,
        size: usize,
        e: &[usize],
        f: &[usize],
        lens: &mut [usize],
        counts: &mut [u64],
        budget: &mut Budget,
    ) -> Result<()> {
        budget.tick()?;
        if idx == f.len() {
            counts[size] += 1;
            return Ok(());
        }
        rec(idx + 1, size, e, f, lens, counts, budget)?;
        for x in 0..e.len() {
            if e[x] > f[idx] {
                // one branch per insertion position in the list of x
                for _pos in 0..=lens[x] {
                    lens[x] += 1;
                    rec(idx + 1, size + 1, e, f, lens, counts, budget)?;
                    lens[x] -= 1;
                }
            }
        }
        Ok(())
    }

    rec(0, 0, &e, &f, &mut lens, &mut counts, &mut budget)?;
    Ok(counts)
}

pub fn mweyl_coords_functions(w: &WeylWord, k: u32, budget: u64) -> Result<BigInt> {
    let counts = mweyl_function_counts(w, budget)?;
    Ok(BigInt::from(counts.get(k as usize).copied().unwrap_or(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{coord_from_normal_form, mcoord_from_normal_form, mweyl_normal_order, normal_order};

    fn w(f: &[(u32, u32)]) -> WeylWord {
        WeylWord::new(f.to_vec())
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn closed_examples() {
        assert_eq!(normal_coords_closed(&w(&[(0, 1), (1, 0)]), 1), big(1));
        assert_eq!(normal_coords_closed(&w(&[(2, 3), (1, 1), (0, 2)]), 0), big(1));
        assert_eq!(normal_coords_closed(&w(&[(0, 2), (2, 0)]), 1), big(4));
        assert_eq!(normal_coords_closed(&w(&[(0, 2), (2, 0)]), 3), big(0));
    }

    #[test]
    fn pairing_examples() {
        let b = DEFAULT_BUDGET;
        assert_eq!(normal_coords_pairings(&w(&[(0, 1), (1, 0)]), 1, b).unwrap(), big(1));
        assert_eq!(normal_coords_pairings(&w(&[(1, 0), (0, 1)]), 1, b).unwrap(), big(0));
        assert_eq!(normal_coords_pairings(&w(&[(1, 1), (1, 1)]), 1, b).unwrap(), big(1));
        assert_eq!(
            normal_coords_pairings(&w(&[(3, 3), (3, 3), (3, 3)]), 2, 10),
            Err(Error::BudgetExceeded(10))
        );
    }

    #[test]
    fn flow_examples() {
        let b = DEFAULT_BUDGET;
        assert_eq!(normal_coords_flows(&w(&[(0, 1), (1, 0)]), 1, b).unwrap(), big(1));
        assert_eq!(normal_coords_flows(&w(&[(2, 1), (0, 3)]), 0, b).unwrap(), big(1));
        let a = w(&[(1, 1), (1, 1), (1, 1)]);
        let flows = normal_coords_flows(&a, 2, b).unwrap();
        assert_eq!(flows, normal_coords_pairings(&a, 2, b).unwrap());
        assert_eq!(flows, big(1));
    }

    #[test]
    fn mweyl_examples() {
        let b = DEFAULT_BUDGET;
        assert_eq!(mweyl_coords_closed(&w(&[(0, 1), (1, 0)]), 1), big(1));
        assert_eq!(mweyl_coords_closed(&w(&[(1, 2), (3, 1)]), 0), big(1));
        assert_eq!(mweyl_coords_closed(&w(&[(0, 2), (1, 0)]), 2), big(2));
        assert_eq!(mweyl_coords_functions(&w(&[(0, 1), (1, 0)]), 1, b).unwrap(), big(1));
        assert_eq!(mweyl_coords_functions(&w(&[(1, 0), (0, 1)]), 1, b).unwrap(), big(0));
        assert_eq!(mweyl_coords_functions(&w(&[(0, 1), (2, 0)]), 1, b).unwrap(), big(2));
    }

    #[test]
    fn agreement_on_a_mixed_word() {
        let a = w(&[(1, 2), (2, 1), (1, 3)]);
        let nf = normal_order(&a);
        let mnf = mweyl_normal_order(&a);
        for k in 0..=6 {
            let r = coord_from_normal_form(&nf, &a, k);
            assert_eq!(normal_coords_closed(&a, k), r);
            assert_eq!(normal_coords_pairings(&a, k, DEFAULT_BUDGET).unwrap(), r);
            assert_eq!(normal_coords_flows(&a, k, DEFAULT_BUDGET).unwrap(), r);
            let m = mcoord_from_normal_form(&mnf, &a, k);
            assert_eq!(mweyl_coords_closed(&a, k), m);
            assert_eq!(mweyl_coords_functions(&a, k, DEFAULT_BUDGET).unwrap(), m);
        }
    }
}
