//! Formula-vs-oracle sweeps. Each suite enumerates a parameter range,
//! compares a closed formula with an independent evaluation and collects
//! every disagreement.

use std::collections::BTreeSet;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coeff::{GaussRat, HPoly};
use crate::comb::binomial;
use crate::error::{Error, Result};
use crate::expmat::ExpMatrix;
use crate::perm::{enumerate_group, orbit_count, sym_dimension, Perm, PermGroup};
use crate::qsym::{
    action_dihedral, action_signed, action_symmetric, action_zm, dihedral_star, dihedral_star_elem,
    msymweyl_multiproduct, msymweyl_multiproduct_iterated, oracle_degree, qsym_oracle, qsym_star, qsym_star_a,
    qsym_star_bd, symweyl_multiproduct, symweyl_multiproduct_iterated, to_sym, weyl_encoding, wreath_zm_star,
    wreath_zm_star_elem, QSymElement,
};
use crate::schur::{
    elem_matrix, normal_form_to_glinf, schur_classes, schur_compose, schur_identity, schur_oracle_compose,
    weyl_to_glinf, ElemTrans, SchurElement, SchurType, SuperSpace,
};
use crate::superalg::{clifford_algebra, exterior_algebra, odd_sym_product, ExtMono};
use crate::sympow::{
    boolean_direct, boolean_point, boolean_product, canonicalize, classical_sym_product, monomial_canonical,
    oracle_product, polya_product, symmetrize, tensor_mul, truncated_polynomial, weyl_labels, BasedAlgebra, Family,
    GroupAction, SymElement, Tuple,
};
use crate::weyl::{
    coord_from_normal_form, genseries_check, mcoord_from_normal_form, mweyl_coords_closed, mweyl_coords_functions,
    mweyl_factorial_identity, mweyl_normal_order, normal_coords_closed, normal_coords_flows, normal_coords_pairings,
    normal_order, weyl_factorial_identity, WeylKind, WeylWord, DEFAULT_BUDGET,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub instances: u64,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Range overrides; `None` selects the suite's default range.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub nmax: Option<usize>,
    pub emax: Option<u32>,
    pub seed: u64,
    pub random: Option<usize>,
}

pub const SUITES: [&str; 13] = [
    "weyl-coords",
    "genseries",
    "mweyl-coords",
    "factorial-identities",
    "polya-oracle",
    "qsym-tt",
    "star-assoc",
    "wreath-oracle",
    "symweyl-sp",
    "odd-boolean",
    "glinf",
    "schur",
    "dimensions",
];

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<VerifyReport> {
    let mut r = Recorder::default();
    match name {
        "weyl-coords" => weyl_coords(&mut r, opts)?,
        "genseries" => genseries(&mut r, opts),
        "mweyl-coords" => mweyl_coords(&mut r, opts)?,
        "factorial-identities" => factorial_identities(&mut r, opts),
        "polya-oracle" => polya_oracle(&mut r, opts)?,
        "qsym-tt" => qsym_tt(&mut r, opts)?,
        "star-assoc" => star_assoc(&mut r, opts)?,
        "wreath-oracle" => wreath_oracle(&mut r, opts)?,
        "symweyl-sp" => symweyl_sp(&mut r, opts)?,
        "odd-boolean" => odd_boolean(&mut r, opts)?,
        "glinf" => glinf(&mut r, opts)?,
        "schur" => schur(&mut r, opts)?,
        "dimensions" => dimensions(&mut r, opts)?,
        _ => return Err(Error::OutOfRange(format!("unknown suite `{name}`; known suites: {}", SUITES.join(", ")))),
    }
    Ok(VerifyReport { suite: name.to_string(), instances: r.instances, mismatches: r.mismatches })
}

#[derive(Default)]
struct Recorder {
    instances: u64,
    mismatches: Vec<Mismatch>,
}

impl Recorder {
    fn eq<T: PartialEq + Debug>(&mut self, input: impl FnOnce() -> String, expected: &T, actual: &T) {
        self.instances += 1;
        if expected != actual {
            self.mismatches.push(Mismatch {
                input: input(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }

    fn eq_r<T: PartialEq + Debug>(&mut self, input: impl FnOnce() -> String, expected: Result<T>, actual: Result<T>) {
        match (expected, actual) {
            (Ok(e), Ok(a)) => self.eq(input, &e, &a),
            (e, a) => {
                self.instances += 1;
                self.mismatches.push(Mismatch {
                    input: input(),
                    expected: format!("{e:?}"),
                    actual: format!("{a:?}"),
                });
            }
        }
    }
}

/// Every word of exactly `n` factors with entries at most `emax`.
fn words(n: usize, emax: u32) -> Vec<WeylWord> {
    let mut out = vec![WeylWord::new(Vec::new())];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..=emax).flat_map(move |a| {
                    let w = w.clone();
                    (0..=emax).map(move |b| {
                        let mut f = w.factors.clone();
                        f.push((a, b));
                        WeylWord::new(f)
                    })
                })
            })
            .collect();
    }
    out
}

fn words_up_to(nmax: usize, emax: u32) -> impl Iterator<Item = WeylWord> {
    (1..=nmax).flat_map(move |n| words(n, emax))
}

fn weyl_coords(r: &mut Recorder, opts: &SuiteOptions) -> Result<()> {
    for w in words_up_to(opts.nmax.unwrap_or(3), opts.emax.unwrap_or(3)) {
        let nf = normal_order(&w);
        for k in 0..=w.total_x().min(w.total_y()) {
            let closed = normal_coords_closed(&w, k);
            let input = || format!("{:?} k={k}", w.factors);
            r.eq(input, &coord_from_normal_form(&nf, &w, k), &closed);
            r.eq_r(input, Ok(closed.clone()), normal_coords_pairings(&w, k, DEFAULT_BUDGET));
            r.eq_r(input, Ok(closed), normal_coords_flows(&w, k, DEFAULT_BUDGET));
        }
    }
    Ok(())
}

fn genseries(r: &mut Recorder, opts: &SuiteOptions) {
    let e = opts.emax.unwrap_or(4);
    let report = genseries_check(opts.nmax.unwrap_or(3), e, e, 3);
    r.instances += report.instances as u64;
    for m in report.mismatches {
        r.mismatches.push(Mismatch {
            input: format!("{:?} c={}", m.word.factors, m.c),
            expected: m.expected.to_string(),
            actual: m.series.to_string(),
        });
    }
}

fn mweyl_coords(r: &mut Recorder, opts: &SuiteOptions) -> Result<()> {
    for w in words_up_to(opts.nmax.unwrap_or(3), opts.emax.unwrap_or(3)) {
        let nf = mweyl_normal_order(&w);
        for k in 0..=w.total_y() {
            let closed = mweyl_coords_closed(&w, k);
            let input = || format!("{:?} k={k}", w.factors);
            r.eq(input, &mcoord_from_normal_form(&nf, &w, k), &closed);
            r.eq_r(input, Ok(closed), mweyl_coords_functions(&w, k, DEFAULT_BUDGET));
        }
    }
    Ok(())
}

fn factorial_identities(r: &mut Recorder, opts: &SuiteOptions) {
    for w in words_up_to(opts.nmax.unwrap_or(3), opts.emax.unwrap_or(2)) {
        for t in 0..=10 {
            let c = weyl_factorial_identity(&w, t);
            r.eq(|| format!("weyl {:?} t={t}", w.factors), &c.lhs, &c.rhs);
            let c = mweyl_factorial_identity(&w, t);
            r.eq(|| format!("mweyl {:?} t={t}", w.factors), &c.lhs, &c.rhs);
        }
    }
}

/// Every subgroup of `S_n` generated by at most two elements; for `n ≤ 3`
/// that is every subgroup.
fn subgroups(n: usize) -> Result<Vec<PermGroup>> {
    let sym = PermGroup::symmetric(n);
    let elems = sym.elements();
    let mut seen: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut consider = |gens: Vec<Perm>| -> Result<()> {
        let g = enumerate_group(n, &gens)?;
        let mut key: Vec<Vec<usize>> = g.elements().iter().map(|p| p.images().to_vec()).collect();
        key.sort();
        if seen.insert(key) {
            out.push(g);
        }
        Ok(())
    };
    consider(Vec::new())?;
    for (i, a) in elems.iter().enumerate() {
        for b in &elems[i..] {
            consider(vec![a.clone(), b.clone()])?;
        }
    }
    Ok(out)
}

/// Canonical class tuples of `[labels]^n` under `k`, dropping vanishing ones.
fn class_tuples(labels: &[usize], k: &PermGroup, parity: &[u8]) -> Result<Vec<Tuple>> {
    let n = k.degree();
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; n];
    'outer: loop {
        let t: Tuple = idx.iter().map(|&i| labels[i]).collect();
        let (rep, s) = canonicalize(&t, k, parity)?;
        if s != 0 {
            out.insert(rep);
        }
        for p in idx.iter_mut() {
            *p += 1;
            if *p < labels.len() {
                continue 'outer;
            }
            *p = 0;
        }
        break;
    }
    Ok(out.into_iter().collect())
}

fn polya_vs_oracle(r: &mut Recorder, name: &str, alg: &BasedAlgebra, k: &PermGroup, factors: &[Tuple]) -> Result<()> {
    let facs: Vec<SymElement> = factors.iter().map(|t| SymElement::basis(t.clone())).collect();
    let action = GroupAction::from_perm_group(k);
    let canon = |t: &Tuple| monomial_canonical(&action, alg, t);
    r.eq_r(
        || format!("{name} |K|={} {factors:?}", k.order()),
        oracle_product(&facs, &action, alg, &canon),
        polya_product(&facs, k, alg),
    );
    Ok(())
}

fn polya_oracle(r: &mut Recorder, opts: &SuiteOptions) -> Result<()> {
    let n = opts.nmax.unwrap_or(3);
    let groups = subgroups(n)?;
    let low_weyl: Vec<usize> = (0..weyl_labels(1).len()).collect();
    let algebras: Vec<(&str, BasedAlgebra, Vec<usize>)> = vec![
        ("poly2", truncated_polynomial(2), (0..3).collect()),
        ("boolean", boolean_point(), vec![0, 1]),
        ("weyl2", weyl_encoding(2, WeylKind::Weyl, false), low_weyl.clone()),
    ];
    for (name, alg, labels) in &algebras {
        for k in &groups {
            let cls = class_tuples(labels, k, alg.parities())?;
            for a in &cls {
                for b in &cls {
                    polya_vs_oracle(r, name, alg, k, &[a.clone(), b.clone()])?;
                }
            }
        }
    }
    // random triples; the Weyl labels stay in degree one so no product leaves the truncation
    let weyl3 = weyl_encoding(3, WeylKind::Weyl, false);
    let triple_algs: Vec<(&str, &BasedAlgebra, Vec<usize>)> = vec![
        ("poly2", &algebras[0].1, algebras[0].2.clone()),
        ("boolean", &algebras[1].1, algebras[1].2.clone()),
        ("weyl3", &weyl3, low_weyl),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.random.unwrap_or(100) {
        let (name, alg, labels) = triple_algs.choose(&mut rng).expect("nonempty");
        let k = groups.choose(&mut rng).expect("nonempty");
        let f: Vec<Tuple> = (0..3).map(|_| (0..n).map(|_| *labels.choose(&mut rng).unwrap()).collect()).collect();
        polya_vs_oracle(r, name, alg, k, &f)?;
    }
    Ok(())
}

/// Every `S_n`-class of `n` single-pair rows of degree at most `d`.
fn classes(n: usize, d: u32) -> Vec<ExpMatrix> {
    let labels = weyl_labels(d);
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; n];
    'outer: loop {
        let rows: Vec<(u32, u32)> = idx.iter().map(|&l| labels[l]).collect();
        out.insert(ExpMatrix::from_weyl_rows(&rows).canonical());
        for p in idx.iter_mut() {
            *p += 1;
            if *p < labels.len() {
                continue 'outer;
            }
            *p = 0;
        }
        break;
    }
    out.into_iter().collect()
}

fn qsym_tt(r: &mut Recorder, opts: &SuiteOptions) -> Result<()> {
    let d = opts.emax.unwrap_or(2);
    for n in 1..=opts.nmax.unwrap_or(2) {
        for a in classes(n, d) {
            for c in classes(n, d) {
                let input = || format!("{a} * {c}");
                let star = qsym_star_a(&a, &c)?;
                let deg = oracle_degree(&[a.clone(), c.clone()]);
                r.eq_r(input, qsym_oracle(&[a.clone(), c.clone()], &action_symmetric(n), WeylKind::Weyl, false), Ok(star.clone()));
                r.eq_r(input, classical_sym_product(&a, &c, Family::A), Ok(star.hbar_part(0)));
                for family in [Family::B, Family::D] {
                    let Ok(s) = qsym_star_bd(&a, &c, family) else { continue };
                    let input = || format!("{family:?} {a} * {c}");
                    r.eq(input, &star, &s);
                    let action = action_signed(n, family, deg);
                    r.eq_r(input, qsym_oracle(&[a.clone(), c.clone()], &action, WeylKind::Weyl, false), Ok(s));
                }
            }
        }
    }
    Ok(())
}

fn assoc_check(
    r: &mut Recorder,
    label: &str,
    x: &ExpMatrix,
    y: &ExpMatrix,
    z: &ExpMatrix,
    mul: &dyn Fn(&QSymElement, &QSymElement) -> Result<QSymElement>,
) {
    let (x, y, z) = (QSymElement::basis(x.clone()), QSymElement::basis(y.clone()), QSymElement::basis(z.clone()));
    let l = mul(&x, &y).and_then(|xy| mul(&xy, &z));
    let rr = mul(&y, &z).and_then(|yz| mul(&x, &yz));
    r.eq_r(|| format!("{label} ({x})({y})({z})"), l, rr);
}

/// Classes of `n` rows whose entries obey `b − a ≡ 0 mod m` with degree at most `d`.
fn congruent_classes(n: usize, d: u32, m_cyc: u32) -> Vec<ExpMatrix> {
    classes(n, d)
        .into_iter()
        .filter(|x| x.rows.iter().all(|r| (r[1] as i64 - r[0] as i64).rem_euclid(m_cyc as i64) == 0))
        .collect()
}

fn random_class(rng: &mut ChaCha8Rng, n: usize, d: u32, m_cyc: u32) -> ExpMatrix {
    loop {
        let rows: Vec<(u32, u32)> = (0..n).map(|_| (rng.gen_range(0..=d), rng.gen_range(0..=d))).collect();
        if rows.iter().all(|&(a, b)| a + b <= d && (b as i64 - a as i64).rem_euclid(m_cyc as i64) == 0) {
            return ExpMatrix::from_weyl_rows(&rows).canonical();
        }
    }
}

fn star_assoc(r: &mut Recorder, opts: &SuiteOptions) -> Result<()> {
    let n = opts.nmax.unwrap_or(2);
    let random = opts.random.unwrap_or(20);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    type Mul = Box<dyn Fn(&QSymElement, &QSymElement) -> Result<QSymElement>>;
    let mut stars: Vec<(String, u32, Mul)> = vec![("A".into(), 1, Box::new(|x: &QSymElement, y: &QSymElement| qsym_star(x, y)))];
    for m in 1..=3 {
        stars.push((format!("Z{m}"), m, Box::new(move |x: &QSymElement, y: &QSymElement| wreath_zm_star_elem(x, y, m))));
    }
    for m in 1..=2 {
        stars.push((format!("D{m}"), m, Box::new(move |x: &QSymElement, y: &QSymElement| dihedral_star_elem(x, y, m))));
    }
    for (label, m_cyc, mul) in &stars {
        // exhaustive: degree one for n slots, plus degree up to m for a single slot
        let mut sets = vec![congruent_classes(n, 1, *m_cyc)];
        if *m_cyc > 1 {
            sets.push(congruent_classes(1, *m_cyc, *m_cyc));
        }
        for cls in &sets {
            for x in cls {
                for y in cls {
                    for z in cls {
                        assoc_check(r, label, x, y, z, mul.as_ref());
                    }
                }
            }
        }
        for _ in 0..random {
            let d = 2 * *m_cyc.max(&1);
            let mut pick = || random_class(&mut rng, n, d.min(3), *m_cyc);
            let (x, y, z) = (pick(), pick(), pick());
            assoc_check(r, label, &x, &y, &z, mul.as_ref());
        }
    }
    Ok(())
}

fn wreath_oracle(r: &mut Recorder, opts: &SuiteOptions) -> Result<()> {
    let d = opts.emax.unwrap_or(2);
    for n in 1..=opts.nmax.unwrap_or(2) {
        for a in classes(n, d) {
            for c in classes(n, d) {
                let pair = [a.clone(), c.clone()];
                let deg = oracle_degree(&pair);
                for m_cyc in 1..=3 {
                    let Ok(star) = wreath_zm_star(&a, &c, m_cyc) else { continue };
                    r.eq_r(
                        || format!("Z{m_cyc} {a} * {c}"),
                        qsym_oracle(&pair, &action_zm(n, m_cyc, deg), WeylKind::Weyl, true),
                        Ok(star),
                    );
                }
                for m_cyc in 1..=2 {
                    let Ok(star) = dihedral_star(&a, &c, m_cyc) else { continue };
                    let alg = weyl_encoding(deg, WeylKind::Weyl, true);
                    let action = action_dihedral(n, m_cyc, deg);
                    let s = |x: &QSymElement| to_sym(x).and_then(|t| symmetrize(&t, &action, &alg));
                    let rhs = s(&QSymElement::basis(a.clone()))
                        .and_then(|sa| s(&QSymElement::basis(c.clone())).map(|sc| tensor_mul(&alg, &sa, &sc)));
                    r.eq_r(|| format!("D{m_cyc} {a} * {c}"), rhs, s(&star));
                }
            }
        }
    }
    Ok(())
}

fn symweyl_sp(r: &mut Recorder, opts: &SuiteOptions) -> Result<()> {
    let n = opts.nmax.unwrap_or(2);
    let e = opts.emax.unwrap_or(2);
    let mut runs: Vec<Vec<ExpMatrix>> = Vec::new();
    for nn in 1..=n {
        let cls = classes(nn, e);
        for a in &cls {
            for b in &cls {
                runs.push(vec![a.clone(), b.clone()]);
            }
        }
        let small = classes(nn, 1);
        for a in &small {
            for b in &small {
                for c in &small {
                    runs.push(vec![a.clone(), b.clone(), c.clone()]);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let cls = classes(n, e);
    for _ in 0..opts.random.unwrap_or(20) {
        runs.push((0..3).map(|_| cls.choose(&mut rng).unwrap().clone()).collect());
    }
    let action = action_symmetric(n);
    for f in &runs {
        let action = if f[0].n() == n { action.clone() } else { action_symmetric(f[0].n()) };
        let input = || f.iter().map(ToString::to_string).collect::<Vec<_>>().join(" * ");
        for (kind, direct, iterated) in [
            (WeylKind::Weyl, symweyl_multiproduct(f), symweyl_multiproduct_iterated(f)),
            (WeylKind::MWeyl, msymweyl_multiproduct(f), msymweyl_multiproduct_iterated(f)),
        ] {
            let direct = direct?;
            r.eq_r(|| format!("{kind:?} iterated {}", input()), iterated, Ok(direct.clone()));
            r.eq_r(|| format!("{kind:?} oracle {}", input()), qsym_oracle(f, &action, kind, false), Ok(direct));
        }
    }
    Ok(())
}

fn odd_boolean(r: &mut Recorder, opts: &SuiteOptions) -> Result<()> {
    let nmax = opts.nmax.unwrap_or(3);
    for m in 1..=3u32 {
        let alg = exterior_algebra(m);
        let labels: Vec<usize> = (0..alg.dim()).collect();
        for n in 1..=nmax {
            let k = PermGroup::symmetric(n);
            let action = action_symmetric(n);
            let canon = |t: &Tuple| monomial_canonical(&action, &alg, t);
            let cls = class_tuples(&labels, &k, alg.parities())?;
            for a in &cls {
                for b in &cls {
                    let ia: Vec<ExtMono> = a.iter().map(|&l| ExtMono(l as u32)).collect();
                    let ib: Vec<ExtMono> = b.iter().map(|&l| ExtMono(l as u32)).collect();
                    let closed = odd_sym_product(&ia, &ib)?.map_keys(|t| t.iter().map(|x| x.0 as usize).collect::<Tuple>());
                    let fa = SymElement::basis(a.clone());
                    let fb = SymElement::basis(b.clone());
                    r.eq_r(|| format!("m={m} {a:?} * {b:?}"), oracle_product(&[fa.clone(), fb.clone()], &action, &alg, &canon), Ok(closed.clone()));
                    // graded commutativity of the classes
                    let swapped = odd_sym_product(&ib, &ia)?.map_keys(|t| t.iter().map(|x| x.0 as usize).collect::<Tuple>());
                    let pa: u32 = ia.iter().map(|x| x.len()).sum();
                    let pb: u32 = ib.iter().map(|x| x.len()).sum();
                    let sign = if pa % 2 == 1 && pb % 2 == 1 { -1 } else { 1 };
                    r.eq(|| format!("m={m} swap {a:?} {b:?}"), &closed, &swapped.scale(&GaussRat::from_int(sign)));
                }
            }
        }
    }
    for n in 0..=6u32 {
        for a in 0..=n {
            for b in 0..=n {
                r.eq_r(|| format!("boolean n={n} [{a}][{b}]"), boolean_direct(a, b, n), boolean_product(a, b, n));
            }
        }
    }
    for n in 0..=8u32 {
        for a in 0..=n {
            for b in 0..=n {
                let total = boolean_product(a, b, n).map(|p| p.values().fold(BigRational::zero(), |s, c| s + c));
                r.eq_r(|| format!("boolean sum n={n} [{a}][{b}]"), Ok(BigRational::one()), total);
            }
        }
    }
    Ok(())
}

fn glinf(r: &mut Recorder, opts: &SuiteOptions) -> Result<()> {
    let size = 12;
    let dmax = opts.emax.unwrap_or(5);
    let monos: Vec<(u32, u32)> = (0..=dmax).flat_map(|t| (0..=t).map(move |b| (t - b, b))).collect();
    for &(a, b) in &monos {
        let w = WeylWord::new(vec![(a, b)]);
        let rho = weyl_to_glinf(&w, size)?;
        let valid = size - b as usize;
        let e = elem_matrix(a as usize, b as usize, size)?;
        r.eq(|| format!("rho(x^{a} y^{b}) = E_{a},{b}"), &true, &rho.agrees_on(&e, valid));
        r.eq(|| format!("filtration E_{a},{b}"), &true, &e.respects_filtration());
    }
    for &(a, b) in &monos {
        for &(c, d) in &monos {
            if a + b + c + d > dmax {
                continue;
            }
            let w = WeylWord::new(vec![(a, b), (c, d)]);
            let valid = size - (b + d) as usize;
            let prod = weyl_to_glinf(&WeylWord::new(vec![(a, b)]), size)?.mul(&weyl_to_glinf(&WeylWord::new(vec![(c, d)]), size)?)?;
            let word = weyl_to_glinf(&w, size)?;
            let nf = normal_form_to_glinf(&normal_order(&w), size)?;
            let input = || format!("x^{a} y^{b} . x^{c} y^{d}");
            r.eq(input, &true, &prod.agrees_on(&word, valid));
            r.eq(input, &true, &word.agrees_on(&nf, valid));
            r.eq(input, &true, &prod.respects_filtration());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.random.unwrap_or(50) {
        let mut m = elem_matrix(0, 0, size)?;
        let mut label = String::new();
        for _ in 0..rng.gen_range(1..=4) {
            let (a, b) = (rng.gen_range(0..=4usize), rng.gen_range(0..=4usize));
            let e = elem_matrix(a, b, size)?.mul_hpoly(&HPoly::from_int(rng.gen_range(1..=3)));
            m = m.mul(&e)?;
            label.push_str(&format!("E_{a},{b} "));
        }
        r.eq(|| format!("filtration {label}"), &true, &m.respects_filtration());
    }
    Ok(())
}

fn random_space(rng: &mut ChaCha8Rng) -> Result<SuperSpace> {
    let d = rng.gen_range(1..=2);
    SuperSpace::new((0..d).map(|_| rng.gen_range(0..=1)).collect())
}

fn random_morphism(rng: &mut ChaCha8Rng, ty: &SchurType, v: &SuperSpace, w: &SuperSpace) -> SchurElement {
    let mut out = SchurElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let slots: Vec<ElemTrans> = (0..ty.n)
            .map(|_| {
                let s = ty.m.iter().map(|&m| rng.gen_range(0..m)).collect();
                let u = ty.m.iter().map(|&m| rng.gen_range(0..m)).collect();
                ElemTrans::new(rng.gen_range(0..v.dim()), s, rng.gen_range(0..w.dim()), u)
            })
            .collect();
        out.add_term(slots, &HPoly::from_int(rng.gen_range(1..=3)));
    }
    schur_classes(&out, ty, v, w)
}

fn schur(r: &mut Recorder, opts: &SuiteOptions) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let rounds = opts.random.unwrap_or(20);
    for n in 1..=opts.nmax.unwrap_or(2) {
        let ty = SchurType::new(vec![2], n)?;
        for _ in 0..rounds {
            let sp: Vec<SuperSpace> = (0..4).map(|_| random_space(&mut rng)).collect::<Result<_>>()?;
            let f = random_morphism(&mut rng, &ty, &sp[0], &sp[1]);
            let g = random_morphism(&mut rng, &ty, &sp[1], &sp[2]);
            let h = random_morphism(&mut rng, &ty, &sp[2], &sp[3]);
            let input = || format!("n={n} spaces={:?} F={f} G={g} H={h}", sp.iter().map(|s| &s.parity).collect::<Vec<_>>());
            let fg = schur_compose(&f, &g, &ty, &sp[0], &sp[1], &sp[2]);
            r.eq_r(input, schur_oracle_compose(&f, &g, &ty, &sp[0], &sp[1], &sp[2]), fg.clone());
            let gh = schur_compose(&g, &h, &ty, &sp[1], &sp[2], &sp[3]);
            let left = fg.and_then(|fg| schur_compose(&fg, &h, &ty, &sp[0], &sp[2], &sp[3]));
            let right = gh.and_then(|gh| schur_compose(&f, &gh, &ty, &sp[0], &sp[1], &sp[3]));
            r.eq_r(input, left, right);
            let id0 = schur_identity(&ty, &sp[0]);
            let id1 = schur_identity(&ty, &sp[1]);
            r.eq_r(input, Ok(f.clone()), schur_compose(&id0, &f, &ty, &sp[0], &sp[0], &sp[1]));
            r.eq_r(input, Ok(f.clone()), schur_compose(&f, &id1, &ty, &sp[0], &sp[1], &sp[1]));
        }
    }
    Ok(())
}

fn dimensions(r: &mut Recorder, opts: &SuiteOptions) -> Result<()> {
    let nmax = opts.nmax.unwrap_or(4);
    for n in 1..=nmax {
        for k in subgroups(n)? {
            for d in 1..=3u64 {
                r.eq(
                    || format!("orbits n={n} |K|={} d={d}", k.order()),
                    &BigInt::from(orbit_count(d as usize, &k)),
                    &sym_dimension(d, &k),
                );
            }
        }
    }
    for n in 1..=5u64 {
        let sym = PermGroup::symmetric(n as usize);
        for d in 1..=5u64 {
            r.eq(|| format!("multisets n={n} d={d}"), &binomial(d + n - 1, n), &sym_dimension(d, &sym));
        }
    }
    for m in 1..=3u32 {
        let dim = clifford_algebra(m).dim() as u64;
        r.eq(|| format!("dim C({m})"), &(1u64 << m), &dim);
        for n in 1..=3usize {
            let sym = PermGroup::symmetric(n);
            let s = sym_dimension(dim, &sym);
            r.eq(|| format!("Sym^{n} C({m}) orbits"), &BigInt::from(orbit_count(dim as usize, &sym)), &s);
            if m % 2 == 0 {
                // C(m) ≅ Mat(2^{m/2}) and Symⁿ of a matrix algebra of size d has dimension C(d²+n−1, n)
                let d = 1u64 << (m / 2);
                r.eq(|| format!("Sym^{n} C({m}) = Sym^{n} Mat({d})"), &binomial(d * d + n as u64 - 1, n as u64), &s);
            }
        }
    }
    for d in 1..=3u64 {
        for n in 1..=3u64 {
            let s = sym_dimension(d * d, &PermGroup::symmetric(n as usize));
            r.eq(|| format!("Schur d={d} n={n}"), &binomial(d * d + n - 1, n), &s);
            r.eq(|| format!("Schur classes d={d} n={n}"), &s, &BigInt::from(schur_class_count(d as usize, n as usize)?));
        }
    }
    Ok(())
}

/// Number of distinct classes of `n`-tuples of matrix units on an even space
/// of dimension `d`, with a trivial cyclic part.
fn schur_class_count(d: usize, n: usize) -> Result<usize> {
    let ty = SchurType::new(vec![1], n)?;
    let v = SuperSpace::even(d);
    let units: Vec<ElemTrans> = (0..d).flat_map(|r| (0..d).map(move |t| ElemTrans::new(r, vec![0], t, vec![0]))).collect();
    let mut all = SchurElement::zero();
    let total = units.len().pow(n as u32);
    for mut code in 0..total {
        let slots = (0..n)
            .map(|_| {
                let e = units[code % units.len()].clone();
                code /= units.len();
                e
            })
            .collect();
        all.add_term(slots, &HPoly::one());
    }
    Ok(schur_classes(&all, &ty, &v, &v).len())
}
