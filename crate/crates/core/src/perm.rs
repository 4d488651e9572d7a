//! Permutations, explicitly enumerated permutation groups and cycle indices.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::comb::{factorial, permutations};
use crate::error::{Error, Result};

/// A bijection of `{0,…,n-1}`; printed 1-based in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// Builds a permutation from 0-based images, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation such as `(1 2)(3 4)`; `()` and `id` denote the identity.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidPermutation(format!("'{s}': {msg}"));
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        let t = s.trim();
        if t == "id" {
            return Ok(Perm { images });
        }
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = open.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let cycle: Vec<usize> = open[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|w| !w.is_empty())
                .map(|w| w.parse::<usize>().map_err(|_| bad("non-numeric point")))
                .collect::<Result<_>>()?;
            for &p in &cycle {
                if p == 0 || p > n {
                    return Err(bad("point out of range"));
                }
                if moved[p - 1] {
                    return Err(bad("cycles are not disjoint"));
                }
                moved[p - 1] = true;
            }
            for k in 0..cycle.len() {
                images[cycle[k] - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
            rest = open[close + 1..].trim_start();
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Moves the entry in position `i` to position `σ(i)`, so the result is
    /// `(t_{σ⁻¹(1)}, …, t_{σ⁻¹(n)})`.
    pub fn act<T: Clone>(&self, t: &[T]) -> Vec<T> {
        let mut out = t.to_vec();
        for (i, x) in t.iter().enumerate() {
            out[self.images[i]] = x.clone();
        }
        out
    }

    /// Sign of the induced reordering restricted to the positions flagged odd.
    pub fn koszul_sign(&self, odd: &[bool]) -> i32 {
        let n = self.images.len();
        let mut inv = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if odd[i] && odd[j] && self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle lengths, including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            out.push(len);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for s in 0..n {
            if seen[s] || self.images[s] == s {
                continue;
            }
            any = true;
            let mut cyc = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                cyc.push((i + 1).to_string());
                i = self.images[i];
            }
            write!(f, "({})", cyc.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A finite subgroup of `S_n` stored as its full, sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    n: usize,
    elements: Vec<Perm>,
}

/// Breadth-first closure of the generators.
pub fn enumerate_group(n: usize, gens: &[Perm]) -> Result<PermGroup> {
    for g in gens {
        if g.degree() != n {
            return Err(Error::DegreeMismatch { expected: n, found: g.degree() });
        }
    }
    let id = Perm::identity(n);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    let mut elements: Vec<Perm> = seen.into_iter().collect();
    elements.sort();
    Ok(PermGroup { n, elements })
}

impl PermGroup {
    pub fn symmetric(n: usize) -> Self {
        let elements = permutations(n).into_iter().map(|images| Perm { images }).collect();
        PermGroup { n, elements }
    }

    pub fn trivial(n: usize) -> Self {
        PermGroup { n, elements: vec![Perm::identity(n)] }
    }

    /// Parses `Sn`, `S<k>`, `trivial`, or `gens:(1 2),(1 2 3)`.
    pub fn from_spec(spec: &str, n: usize) -> Result<Self> {
        let s = spec.trim().trim_matches('"');
        if s == "Sn" || s == format!("S{n}") {
            return Ok(Self::symmetric(n));
        }
        if s == "trivial" {
            return Ok(Self::trivial(n));
        }
        if let Some(g) = s.strip_prefix("gens:") {
            let g = g.trim().trim_matches('"');
            let gens = g
                .split("),")
                .map(str::trim)
                .filter(|w| !w.is_empty())
                .map(|w| {
                    let w = if w.ends_with(')') { w.to_string() } else { format!("{w})") };
                    Perm::parse_cycles(&w, n)
                })
                .collect::<Result<Vec<_>>>()?;
            return enumerate_group(n, &gens);
        }
        Err(Error::InvalidPermutation(format!("unknown group spec '{spec}' for degree {n}")))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Exhaustive check of identity, closure and inverses.
    pub fn is_closed(&self) -> bool {
        self.contains(&Perm::identity(self.n))
            && self.elements.iter().all(|g| {
                self.contains(&g.inverse())
                    && self.elements.iter().all(|h| self.contains(&g.compose(h)))
            })
    }
}

/// `(1/♯K) Σ_k Π_s x_s^{b_s(k)}` keyed by the exponent vector `(b_1,…,b_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleIndex {
    pub n: usize,
    pub terms: BTreeMap<Vec<u32>, BigRational>,
}

impl CycleIndex {
    /// Evaluates at `x_1 = … = x_n = value`.
    pub fn evaluate_diagonal(&self, value: &BigInt) -> BigRational {
        let mut total = BigRational::zero();
        for (exps, c) in &self.terms {
            let k: u32 = exps.iter().sum();
            total += c * BigRational::from_integer(num_traits::pow(value.clone(), k as usize));
        }
        total
    }
}

impl fmt::Display for CycleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (exps, c) in self.terms.iter().rev() {
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(s, &e)| if e == 1 { format!("x{}", s + 1) } else { format!("x{}^{}", s + 1, e) })
                .collect();
            let mono = if mono.is_empty() { "1".to_string() } else { mono.join(" ") };
            if c.is_one() {
                parts.push(mono);
            } else {
                parts.push(format!("{c} {mono}"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn cycle_index(k: &PermGroup) -> CycleIndex {
    let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for g in k.elements() {
        let mut exps = vec![0u32; k.degree()];
        for len in g.cycle_type() {
            exps[len - 1] += 1;
        }
        *counts.entry(exps).or_default() += 1;
    }
    let ord = BigInt::from(k.order());
    let terms = counts
        .into_iter()
        .map(|(e, c)| (e, BigRational::new(BigInt::from(c), ord.clone())))
        .collect();
    CycleIndex { n: k.degree(), terms }
}

/// `dim (A^{⊗n})_K`, the cycle index evaluated at `dim A`.
pub fn sym_dimension(dim_a: u64, k: &PermGroup) -> BigInt {
    let v = cycle_index(k).evaluate_diagonal(&BigInt::from(dim_a));
    assert!(v.is_integer(), "cycle index evaluated to a non-integer");
    v.to_integer()
}

/// Number of K-orbits on `[d]^n`, counted by listing canonical representatives.
pub fn orbit_count(d: usize, k: &PermGroup) -> usize {
    let n = k.degree();
    let mut reps: BTreeSet<Vec<usize>> = BTreeSet::new();
    let total = d.checked_pow(n as u32).unwrap_or(0);
    for code in 0..total {
        let mut t = vec![0; n];
        let mut c = code;
        for x in t.iter_mut() {
            *x = c % d;
            c /= d;
        }
        let rep = k.elements().iter().map(|g| g.act(&t)).min().unwrap();
        reps.insert(rep);
    }
    if n == 0 {
        1
    } else {
        reps.len()
    }
}

/// The base groups `G` of the wreath products `Gⁿ ⋊ S_n` used in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WreathFamily {
    A,
    B,
    D,
    ZmWreath(u32),
    Dihedral(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedWreathGroup {
    pub family: WreathFamily,
    pub n: usize,
}

impl SignedWreathGroup {
    pub fn new(family: WreathFamily, n: usize) -> Self {
        SignedWreathGroup { family, n }
    }

    /// Size of the base group in each slot.
    fn base_order(&self) -> u64 {
        match self.family {
            WreathFamily::A => 1,
            WreathFamily::B | WreathFamily::D => 2,
            WreathFamily::ZmWreath(m) => m as u64,
            WreathFamily::Dihedral(m) => 2 * m as u64,
        }
    }

    pub fn order(&self) -> BigInt {
        let base = BigInt::from(self.base_order()).pow(self.n as u32);
        let o = base * factorial(self.n as u64);
        match self.family {
            WreathFamily::D if self.n > 0 => o / 2,
            _ => o,
        }
    }

    /// Every element as `(σ, per-slot base element)`; base elements are
    /// indices into the base group (for the dihedral family `r + m·f`
    /// encodes rotation `r` and reflection flag `f`).
    pub fn elements(&self) -> Vec<(Perm, Vec<u32>)> {
        let base = self.base_order() as u32;
        let mut tuples: Vec<Vec<u32>> = vec![vec![]];
        for _ in 0..self.n {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    (0..base).map(move |g| {
                        let mut t = t.clone();
                        t.push(g);
                        t
                    })
                })
                .collect();
        }
        if self.family == WreathFamily::D {
            tuples.retain(|t| t.iter().sum::<u32>() % 2 == 0);
        }
        let sym = PermGroup::symmetric(self.n);
        let mut out = Vec::new();
        for p in sym.elements() {
            for t in &tuples {
                out.push((p.clone(), t.clone()));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let s3 = enumerate_group(3, &[p("(1 2)", 3), p("(1 2 3)", 3)]).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(enumerate_group(4, &[]).unwrap().order(), 1);
        let klein = enumerate_group(4, &[p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)]).unwrap();
        assert_eq!(klein.order(), 4);
        assert!(klein.is_closed());
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn cycle_index_examples() {
        assert_eq!(cycle_index(&PermGroup::symmetric(2)).to_string(), "1/2 x1^2 + 1/2 x2");
        assert_eq!(cycle_index(&PermGroup::trivial(3)).to_string(), "x1^3");
        assert_eq!(
            cycle_index(&PermGroup::symmetric(3)).to_string(),
            "1/6 x1^3 + 1/2 x1 x2 + 1/3 x3"
        );
    }

    #[test]
    fn sym_dimension_examples() {
        assert_eq!(sym_dimension(2, &PermGroup::symmetric(2)), BigInt::from(3));
        assert_eq!(sym_dimension(3, &PermGroup::trivial(4)), BigInt::from(81));
        assert_eq!(sym_dimension(4, &PermGroup::symmetric(2)), BigInt::from(10));
    }

    #[test]
    fn cycle_notation_round_trip() {
        for s in ["()", "(1 2)", "(1 3 2)(4 5)"] {
            assert_eq!(p(s, 5).to_string(), s);
        }
        assert!(Perm::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Perm::parse_cycles("(1 4)", 3).is_err());
    }

    #[test]
    fn act_moves_entries_forward() {
        let s = p("(1 2 3)", 3);
        assert_eq!(s.act(&['a', 'b', 'c']), vec!['c', 'a', 'b']);
        let st = s.compose(&s);
        assert_eq!(st.act(&[1, 2, 3]), s.act(&s.act(&[1, 2, 3])));
    }

    #[test]
    fn wreath_orders() {
        for n in 1..=3 {
            for fam in [
                WreathFamily::A,
                WreathFamily::B,
                WreathFamily::D,
                WreathFamily::ZmWreath(3),
                WreathFamily::Dihedral(2),
            ] {
                let g = SignedWreathGroup::new(fam, n);
                assert_eq!(BigInt::from(g.elements().len()), g.order(), "{fam:?} n={n}");
            }
        }
    }

    #[test]
    fn group_spec_parsing() {
        assert_eq!(PermGroup::from_spec("S3", 3).unwrap().order(), 6);
        assert_eq!(PermGroup::from_spec("trivial", 3).unwrap().order(), 1);
        assert_eq!(PermGroup::from_spec("gens:(1 2),(1 2 3)", 3).unwrap().order(), 6);
        assert_eq!(PermGroup::from_spec("gens:\"(1 2 3)\"", 3).unwrap().order(), 3);
        assert!(PermGroup::from_spec("Q8", 3).is_err());
    }
}
