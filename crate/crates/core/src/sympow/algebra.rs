use serde_json::{json, Value};

use crate::coeff::{GaussRat, HPoly};
use crate::error::{Error, Result};
use crate::weyl::{reorder_terms, WeylKind};

/// A finite-dimensional (super)algebra given by structure constants
/// `e_s·e_t = Σ_k c(k,s,t) e_k` with ħ-polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedAlgebra {
    names: Vec<String>,
    parity: Vec<u8>,
    table: Vec<Vec<(usize, HPoly)>>,
    unit: Option<usize>,
}

/// Dimension up to which associativity is checked on construction.
const CHECK_DIM: usize = 12;

impl BasedAlgebra {
    /// Builds the algebra from `product(s, t)`, then checks the unit law and,
    /// for `dim ≤ 12`, associativity on every triple.
    pub fn new(
        names: Vec<String>,
        parity: Vec<u8>,
        unit: Option<usize>,
        product: impl FnMut(usize, usize) -> Vec<(usize, HPoly)>,
    ) -> Result<Self> {
        let alg = Self::build(names, parity, unit, product)?;
        alg.check(true)?;
        Ok(alg)
    }

    /// As [`BasedAlgebra::new`] but without the associativity check, for
    /// degree truncations that are exact only below a known bound.
    pub fn new_truncated(
        names: Vec<String>,
        parity: Vec<u8>,
        unit: Option<usize>,
        product: impl FnMut(usize, usize) -> Vec<(usize, HPoly)>,
    ) -> Result<Self> {
        let alg = Self::build(names, parity, unit, product)?;
        alg.check(false)?;
        Ok(alg)
    }

    fn build(
        names: Vec<String>,
        parity: Vec<u8>,
        unit: Option<usize>,
        mut product: impl FnMut(usize, usize) -> Vec<(usize, HPoly)>,
    ) -> Result<Self> {
        let dim = names.len();
        if parity.len() != dim {
            return Err(Error::InvalidAlgebra("parity list has the wrong length".into()));
        }
        if parity.iter().any(|&p| p > 1) {
            return Err(Error::InvalidAlgebra("parities must be 0 or 1".into()));
        }
        let mut table = Vec::with_capacity(dim * dim);
        for s in 0..dim {
            for t in 0..dim {
                let mut merged: Vec<(usize, HPoly)> = Vec::new();
                for (k, c) in product(s, t) {
                    if k >= dim {
                        return Err(Error::InvalidAlgebra(format!("label {k} out of range")));
                    }
                    if parity[k] != (parity[s] + parity[t]) % 2 {
                        return Err(Error::InvalidAlgebra(format!(
                            "e_{s}·e_{t} has a term of the wrong parity"
                        )));
                    }
                    match merged.iter_mut().find(|(l, _)| *l == k) {
                        Some((_, e)) => e.add_assign(&c),
                        None => merged.push((k, c)),
                    }
                }
                merged.retain(|(_, c)| !c.is_zero());
                merged.sort_by_key(|(k, _)| *k);
                table.push(merged);
            }
        }
        Ok(BasedAlgebra { names, parity, table, unit })
    }

    fn check(&self, associativity: bool) -> Result<()> {
        let dim = self.dim();
        if let Some(u) = self.unit {
            if u >= dim {
                return Err(Error::InvalidAlgebra("unit label out of range".into()));
            }
            let basis = |s: usize| vec![(s, HPoly::one())];
            for s in 0..dim {
                if self.mul_vec(&basis(u), &basis(s)) != basis(s)
                    || self.mul_vec(&basis(s), &basis(u)) != basis(s)
                {
                    return Err(Error::InvalidAlgebra(format!("unit law fails at e_{s}")));
                }
            }
        }
        if associativity && dim <= CHECK_DIM {
            for s in 0..dim {
                for t in 0..dim {
                    let st = self.product(s, t).to_vec();
                    for u in 0..dim {
                        let left = self.mul_vec(&st, &[(u, HPoly::one())]);
                        let tu = self.product(t, u).to_vec();
                        let right = self.mul_vec(&[(s, HPoly::one())], &tu);
                        if left != right {
                            return Err(Error::InvalidAlgebra(format!(
                                "associativity fails at ({s},{t},{u})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn mul_vec(&self, x: &[(usize, HPoly)], y: &[(usize, HPoly)]) -> Vec<(usize, HPoly)> {
        let mut acc: Vec<HPoly> = vec![HPoly::zero(); self.dim()];
        for (s, c) in x {
            for (t, d) in y {
                let cd = c * d;
                for (k, e) in self.product(*s, *t) {
                    acc[*k].add_assign(&(&cd * e));
                }
            }
        }
        acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn parity(&self, l: usize) -> u8 {
        self.parity[l]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parity
    }

    pub fn is_graded(&self) -> bool {
        self.parity.iter().any(|&p| p == 1)
    }

    pub fn name(&self, l: usize) -> &str {
        &self.names[l]
    }

    pub fn label(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn product(&self, s: usize, t: usize) -> &[(usize, HPoly)] {
        &self.table[s * self.dim() + t]
    }

    /// Schema `{dim, unit, parity, names?, table: [{s, t, terms: [{k, coeff, h?}]}]}`;
    /// `coeff` is a Gaussian rational string and `h` an optional ħ-degree.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidAlgebra(m.to_string());
        let dim = v.get("dim").and_then(Value::as_u64).ok_or_else(|| bad("missing dim"))? as usize;
        let unit = match v.get("unit") {
            None | Some(Value::Null) => None,
            Some(u) => Some(u.as_u64().ok_or_else(|| bad("unit must be a label"))? as usize),
        };
        let parity: Vec<u8> = match v.get("parity") {
            None => vec![0; dim],
            Some(p) => p
                .as_array()
                .ok_or_else(|| bad("parity must be a list"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as u8).ok_or_else(|| bad("parity entries must be 0/1")))
                .collect::<Result<_>>()?,
        };
        let names: Vec<String> = match v.get("names").and_then(Value::as_array) {
            Some(ns) => ns
                .iter()
                .map(|x| x.as_str().map(String::from).ok_or_else(|| bad("names must be strings")))
                .collect::<Result<_>>()?,
            None => (0..dim).map(|l| format!("e{l}")).collect(),
        };
        if names.len() != dim {
            return Err(bad("names list has the wrong length"));
        }
        let mut entries: Vec<Vec<(usize, HPoly)>> = vec![Vec::new(); dim * dim];
        for e in v.get("table").and_then(Value::as_array).ok_or_else(|| bad("missing table"))? {
            let s = e.get("s").and_then(Value::as_u64).ok_or_else(|| bad("entry without s"))? as usize;
            let t = e.get("t").and_then(Value::as_u64).ok_or_else(|| bad("entry without t"))? as usize;
            if s >= dim || t >= dim {
                return Err(bad("table label out of range"));
            }
            for term in e.get("terms").and_then(Value::as_array).ok_or_else(|| bad("entry without terms"))? {
                let k = term.get("k").and_then(Value::as_u64).ok_or_else(|| bad("term without k"))? as usize;
                let c: GaussRat = match term.get("coeff") {
                    Some(Value::String(s)) => s.parse().map_err(|e: String| bad(&e))?,
                    Some(Value::Number(n)) => {
                        GaussRat::from_int(n.as_i64().ok_or_else(|| bad("integer coefficient expected"))?)
                    }
                    _ => return Err(bad("term without coeff")),
                };
                let h = term.get("h").and_then(Value::as_u64).unwrap_or(0) as u32;
                entries[s * dim + t].push((k, HPoly::monomial(c, h)));
            }
        }
        BasedAlgebra::new(names, parity, unit, |s, t| entries[s * dim + t].clone())
    }

    pub fn to_json(&self) -> Value {
        let mut table = Vec::new();
        for s in 0..self.dim() {
            for t in 0..self.dim() {
                let terms: Vec<Value> = self
                    .product(s, t)
                    .iter()
                    .flat_map(|(k, c)| {
                        c.terms().map(move |(h, g)| json!({"k": k, "coeff": g.to_string(), "h": h}))
                    })
                    .collect();
                if !terms.is_empty() {
                    table.push(json!({"s": s, "t": t, "terms": terms}));
                }
            }
        }
        json!({
            "dim": self.dim(),
            "unit": self.unit,
            "parity": self.parity,
            "names": self.names,
            "table": table,
        })
    }
}

/// `ℚ[x]/(x^{D+1})`, labels `x^0..x^D`.
pub fn truncated_polynomial(d: u32) -> BasedAlgebra {
    let names = (0..=d).map(|k| format!("x^{k}")).collect();
    BasedAlgebra::new(names, vec![0; d as usize + 1], Some(0), |s, t| {
        if s + t <= d as usize {
            vec![(s + t, HPoly::one())]
        } else {
            vec![]
        }
    })
    .expect("truncated polynomial algebra is valid")
}

/// The Boolean algebra of subsets of a point: `e_∅` is the unit and
/// `e_{1}·e_{1} = e_{1}`.
pub fn boolean_point() -> BasedAlgebra {
    BasedAlgebra::new(vec!["{}".into(), "{1}".into()], vec![0, 0], Some(0), |s, t| {
        vec![(s.max(t), HPoly::one())]
    })
    .expect("Boolean algebra is valid")
}

/// Labels `(a, b)` of the single-variable Weyl-type algebras, in index order.
pub fn weyl_labels(d: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for total in 0..=d {
        for a in (0..=total).rev() {
            out.push((a, total - a));
        }
    }
    out
}

/// Index of `(a, b)` among [`weyl_labels`].
pub fn weyl_label_index(a: u32, b: u32) -> usize {
    let t = (a + b) as usize;
    t * (t + 1) / 2 + (b as usize)
}

/// The Weyl algebra (or M-Weyl algebra) with basis `x^a y^b`, `a + b ≤ d`,
/// in which every reordering contraction carries `scale·ħ`; terms of degree
/// `p + q > d` are dropped. With `scale = −2i` the Weyl case is the complex
/// form `z̄ z = z z̄ − 2iħ`.
///
/// For M-Weyl the dropped span is an ideal. For Weyl it is not, and the
/// table is exact only for products whose factors have total degree at most
/// `d`; the associativity check is skipped there.
pub fn truncated_weyl(d: u32, kind: WeylKind, scale: &GaussRat) -> BasedAlgebra {
    let labels = weyl_labels(d);
    let names = labels
        .iter()
        .map(|&(a, b)| match (a, b) {
            (0, 0) => "1".to_string(),
            _ => format!("x^{a} y^{b}"),
        })
        .collect();
    let build = match kind {
        WeylKind::Weyl => BasedAlgebra::new_truncated,
        WeylKind::MWeyl => BasedAlgebra::new,
    };
    build(names, vec![0; labels.len()], Some(0), &mut |s: usize, t: usize| {
        let (a, b) = labels[s];
        let (c, e) = labels[t];
        let mut out = Vec::new();
        for (x, y, k, w) in reorder_terms(kind, b, c) {
            let (p, q) = (a + x, y + e);
            if p + q > d {
                continue;
            }
            let coef = &GaussRat::from_bigint(w) * &scale.pow(k);
            out.push((weyl_label_index(p, q), HPoly::monomial(coef, k)));
        }
        out
    })
    .expect("truncated Weyl algebra is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encodings_are_valid() {
        assert_eq!(truncated_polynomial(3).dim(), 4);
        assert_eq!(boolean_point().dim(), 2);
        let w = truncated_weyl(3, WeylKind::Weyl, &GaussRat::one());
        assert_eq!(w.dim(), 10);
        for (i, &(a, b)) in weyl_labels(4).iter().enumerate() {
            assert_eq!(weyl_label_index(a, b), i);
        }
        let y = weyl_label_index(0, 1);
        let x = weyl_label_index(1, 0);
        let xy = weyl_label_index(1, 1);
        assert_eq!(w.product(y, x), &[(0, HPoly::hbar(1)), (xy, HPoly::one())]);
        assert_eq!(truncated_weyl(3, WeylKind::MWeyl, &GaussRat::one()).dim(), 10);
    }

    #[test]
    fn rejects_non_associative_tables() {
        // e1·e1 = e0 but e0 is not a unit-compatible idempotent
        let bad = BasedAlgebra::new(vec!["a".into(), "b".into()], vec![0, 0], None, |s, t| match (s, t) {
            (1, 1) => vec![(0, HPoly::one())],
            (0, 0) => vec![(1, HPoly::one())],
            _ => vec![],
        });
        assert!(matches!(bad, Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn json_round_trip() {
        let w = truncated_weyl(2, WeylKind::MWeyl, &GaussRat::from_int(-2));
        assert_eq!(BasedAlgebra::from_json(&w.to_json()).unwrap(), w);
    }
}
