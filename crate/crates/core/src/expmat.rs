//! Exponent matrices: one row of natural-number exponents per tensor slot.

use std::fmt;

use crate::error::{Error, Result};

/// `n` rows of equal width. For the quantum products a row of width `2m`
/// is read as `(a_1..a_m, b_1..b_m)`: exponents of `x_1..x_m` then `y_1..y_m`
/// (or `z` then `z̄`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpMatrix {
    pub rows: Vec<Vec<u32>>,
}

impl ExpMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        if let Some(w) = rows.first().map(Vec::len) {
            if rows.iter().any(|r| r.len() != w) {
                return Err(Error::DimensionMismatch("rows of unequal width".into()));
            }
        }
        Ok(ExpMatrix { rows })
    }

    /// Rows given as `(a, b)` pairs of exponent vectors.
    pub fn from_pairs(pairs: &[(Vec<u32>, Vec<u32>)]) -> Result<Self> {
        let rows = pairs
            .iter()
            .map(|(a, b)| {
                if a.len() != b.len() {
                    return Err(Error::DimensionMismatch("x and y parts differ in length".into()));
                }
                Ok(a.iter().chain(b).copied().collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    /// Single-variable rows `(a_j, b_j)`.
    pub fn from_weyl_rows(rows: &[(u32, u32)]) -> Self {
        ExpMatrix { rows: rows.iter().map(|&(a, b)| vec![a, b]).collect() }
    }

    pub fn zeros(n: usize, width: usize) -> Self {
        ExpMatrix { rows: vec![vec![0; width]; n] }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Rows sorted lexicographically: the representative of the S_n-class.
    pub fn canonical(&self) -> ExpMatrix {
        let mut rows = self.rows.clone();
        rows.sort();
        ExpMatrix { rows }
    }

    pub fn is_canonical(&self) -> bool {
        self.rows.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn row_degree(&self, j: usize) -> u32 {
        self.rows[j].iter().sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }

    pub(crate) fn check_same_shape(&self, other: &ExpMatrix) -> Result<()> {
        if self.n() != other.n() || self.width() != other.width() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} against {}x{}",
                self.n(),
                self.width(),
                other.n(),
                other.width()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ExpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join(" | "))
    }
}
