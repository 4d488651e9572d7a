//! `N × N` truncations of `gl(∞)`, the algebra of ℕ×ℕ matrices whose
//! entry `(i, j)`, `j > i`, lies in `ħ^{j−i}ℂ[[ħ]]`.

use std::fmt;

use crate::coeff::{GaussRat, HPoly};
use crate::comb::factorial;
use crate::error::{Error, Result};
use crate::weyl::{WeylNormalForm, WeylWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlInfTrunc {
    pub entries: Vec<Vec<HPoly>>,
}

impl GlInfTrunc {
    pub fn zeros(n: usize) -> Self {
        GlInfTrunc { entries: vec![vec![HPoly::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i][i] = HPoly::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &HPoly {
        &self.entries[i][j]
    }

    /// Truncated product `Σ_{k<N} A_{ik} B_{kj}`.
    pub fn mul(&self, other: &GlInfTrunc) -> Result<GlInfTrunc> {
        let n = self.size();
        if other.size() != n {
            return Err(Error::DimensionMismatch(format!("{n}x{n} against {0}x{0}", other.size())));
        }
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !other.entries[k][j].is_zero() {
                        let p = &self.entries[i][k] * &other.entries[k][j];
                        out.entries[i][j].add_assign(&p);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &GlInfTrunc) {
        for (row, orow) in self.entries.iter_mut().zip(&other.entries) {
            for (e, o) in row.iter_mut().zip(orow) {
                e.add_assign(o);
            }
        }
    }

    pub fn mul_hpoly(&self, c: &HPoly) -> GlInfTrunc {
        GlInfTrunc { entries: self.entries.iter().map(|r| r.iter().map(|e| e * c).collect()).collect() }
    }

    /// Whether every entry `(i, j)`, `j > i`, has ħ-order at least `j − i`.
    pub fn respects_filtration(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().skip(i + 1).all(|(j, e)| e.terms().all(|(k, _)| k as usize >= j - i))
        })
    }

    /// Equality on the leading `size × size` submatrix.
    pub fn agrees_on(&self, other: &GlInfTrunc, size: usize) -> bool {
        (0..size).all(|i| (0..size).all(|j| self.entries[i][j] == other.entries[i][j]))
    }
}

impl fmt::Display for GlInfTrunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `E_{a,b}`: entry `(a+k, b+k) = ((b+k)!/k!) ħ^b`.
pub fn elem_matrix(a: usize, b: usize, n: usize) -> Result<GlInfTrunc> {
    if a >= n || b >= n {
        return Err(Error::OutOfRange(format!("E_{{{a},{b}}} does not fit in a {n}x{n} truncation")));
    }
    let mut m = GlInfTrunc::zeros(n);
    for k in 0..n - a.max(b) {
        let w = factorial((b + k) as u64) / factorial(k as u64);
        m.entries[a + k][b + k] = HPoly::monomial(GaussRat::from_bigint(w), b as u32);
    }
    Ok(m)
}

/// `ρ(w)` for `ρ(x) = E_{1,0}`, `ρ(y) = E_{0,1}`. Entries with both indices
/// below `N − deg_y(w)` are exact.
pub fn weyl_to_glinf(w: &WeylWord, n: usize) -> Result<GlInfTrunc> {
    let margin = w.total_y() as usize;
    if margin >= n {
        return Err(Error::Truncation(format!(
            "a word of y-degree {margin} leaves no exact entries in a {n}x{n} truncation"
        )));
    }
    let x = elem_matrix(1, 0, n)?;
    let y = elem_matrix(0, 1, n)?;
    let mut acc = GlInfTrunc::identity(n);
    for &(a, b) in &w.factors {
        for _ in 0..a {
            acc = acc.mul(&x)?;
        }
        for _ in 0..b {
            acc = acc.mul(&y)?;
        }
    }
    Ok(acc)
}

/// `Σ c ħ^h E_{p,q}` over the terms of a normal form.
pub fn normal_form_to_glinf(nf: &WeylNormalForm, n: usize) -> Result<GlInfTrunc> {
    let mut out = GlInfTrunc::zeros(n);
    for (&(p, q, h), c) in &nf.terms {
        if p as usize >= n || q as usize >= n {
            // no entry of E_{p,q} falls inside the window
            continue;
        }
        out.add_assign(&elem_matrix(p as usize, q as usize, n)?.mul_hpoly(&HPoly::monomial(c.clone(), h)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::normal_order;

    #[test]
    fn generator_matrices() {
        let x = elem_matrix(1, 0, 4).unwrap();
        assert_eq!(*x.get(1, 0), HPoly::one());
        assert_eq!(*x.get(3, 2), HPoly::one());
        let y = elem_matrix(0, 1, 4).unwrap();
        assert_eq!(*y.get(2, 3), HPoly::monomial(GaussRat::from_int(3), 1));
        assert_eq!(elem_matrix(0, 0, 5).unwrap(), GlInfTrunc::identity(5));
        assert!(elem_matrix(4, 0, 4).is_err());
    }

    #[test]
    fn yx_relation() {
        let n = 8;
        let yx = weyl_to_glinf(&WeylWord::new(vec![(0, 1), (1, 0)]), n).unwrap();
        let mut e = elem_matrix(1, 1, n).unwrap();
        e.add_assign(&GlInfTrunc::identity(n).mul_hpoly(&HPoly::hbar(1)));
        assert!(yx.agrees_on(&e, n - 1));
        let w = WeylWord::new(vec![(1, 2), (2, 1)]);
        let nf = normal_form_to_glinf(&normal_order(&w), n).unwrap();
        assert!(weyl_to_glinf(&w, n).unwrap().agrees_on(&nf, n - 3));
        assert!(weyl_to_glinf(&WeylWord::new(vec![(0, 4)]), 4).is_err());
    }
}
