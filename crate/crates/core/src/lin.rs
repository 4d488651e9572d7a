//! Finite linear combinations with ħ-polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{GaussRat, HPoly};
use crate::error::Result;

/// `Σ c_k·k` over an ordered key type; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lin<K: Ord> {
    pub terms: BTreeMap<K, HPoly>,
}

impl<K: Ord> Default for Lin<K> {
    fn default() -> Self {
        Lin { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: HPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(k, &c);
        out
    }

    pub fn basis(k: K) -> Self {
        Self::single(k, HPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> HPoly {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, k: K, c: &HPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(e) => {
                e.add_assign(c);
                if e.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, o: &Lin<K>) {
        for (k, c) in &o.terms {
            self.add_term(k.clone(), c);
        }
    }

    pub fn sub(&self, o: &Lin<K>) -> Lin<K> {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), &-c.clone());
        }
        out
    }

    pub fn scale(&self, c: &GaussRat) -> Lin<K> {
        let mut out = Lin::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &v.scale(c));
        }
        out
    }

    pub fn mul_hpoly(&self, c: &HPoly) -> Lin<K> {
        let mut out = Lin::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    pub fn div_nat(&self, d: u64) -> Result<Lin<K>> {
        let mut out = Lin::zero();
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v.div_nat(d)?);
        }
        Ok(out)
    }

    /// The coefficient of `ħ^d` in every term.
    pub fn hbar_part(&self, d: u32) -> Lin<K> {
        let mut out = Lin::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &HPoly::constant(v.coeff(d)));
        }
        out
    }

    pub fn map_keys<K2: Ord + Clone>(&self, f: impl Fn(&K) -> K2) -> Lin<K2> {
        let mut out = Lin::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v);
        }
        out
    }
}

impl<K: Ord + fmt::Debug> fmt::Display for Lin<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("({c})·{k:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
