use polya_core::expmat::ExpMatrix;
use polya_core::qsym::*;
use polya_core::sympow::{
    classical_sym_product, monomial_canonical, oracle_product, symmetrize, tensor_mul, weyl_labels, Family,
    GroupAction, SymElement,
};
use polya_core::weyl::WeylKind;
use polya_core::HPoly;

/// Every `S_n`-class of `n` rows with row degree at most `d`.
fn classes(n: usize, d: u32) -> Vec<ExpMatrix> {
    let labels = weyl_labels(d);
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        if idx.windows(2).all(|w| w[0] <= w[1]) {
            out.push(ExpMatrix::from_weyl_rows(&idx.iter().map(|&l| labels[l]).collect::<Vec<_>>()).canonical());
        }
        let mut p = 0;
        while p < n {
            idx[p] += 1;
            if idx[p] < labels.len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
        if p == n {
            break;
        }
    }
    out.sort();
    out.dedup();
    out
}

fn oracle(a: &ExpMatrix, c: &ExpMatrix, action: &GroupAction, kind: WeylKind, complex: bool) -> QSymElement {
    let d = a.total_degree() + c.total_degree();
    let alg = weyl_encoding(d.max(1), kind, complex);
    let fa = SymElement::basis(expmat_to_tuple(a).unwrap());
    let fc = SymElement::basis(expmat_to_tuple(c).unwrap());
    let canon = |t: &Vec<usize>| monomial_canonical(action, &alg, t);
    from_sym(&oracle_product(&[fa, fc], action, &alg, &canon).unwrap())
}

#[test]
fn type_a_matches_the_averaged_oracle() {
    for n in 1..=2 {
        let action = action_symmetric(n);
        for a in classes(n, 2) {
            for c in classes(n, 2) {
                let star = qsym_star_a(&a, &c).unwrap();
                assert_eq!(star, oracle(&a, &c, &action, WeylKind::Weyl, false), "{a} * {c}");
                assert_eq!(star.hbar_part(0), classical_sym_product(&a, &c, Family::A).unwrap());
            }
        }
    }
}

#[test]
fn signed_families_match_their_oracles() {
    let n = 2;
    for family in [Family::B, Family::D] {
        let action = action_signed(n, family, 4);
        for a in classes(n, 2) {
            for c in classes(n, 2) {
                let Ok(star) = qsym_star_bd(&a, &c, family) else { continue };
                assert_eq!(star, qsym_star_a(&a, &c).unwrap());
                let d = a.total_degree() + c.total_degree();
                let action = if d == 4 { action.clone() } else { action_signed(n, family, d.max(1)) };
                assert_eq!(star, oracle(&a, &c, &action, WeylKind::Weyl, false), "{family:?} {a} * {c}");
            }
        }
    }
}

#[test]
fn wreath_matches_character_oracle() {
    for m_cyc in 1..=3 {
        for n in 1..=2 {
            for a in classes(n, 2) {
                for c in classes(n, 2) {
                    let Ok(star) = wreath_zm_star(&a, &c, m_cyc) else { continue };
                    let d = (a.total_degree() + c.total_degree()).max(1);
                    let action = action_zm(n, m_cyc, d);
                    assert_eq!(star, oracle(&a, &c, &action, WeylKind::Weyl, true), "Z{m_cyc} {a} * {c}");
                }
            }
        }
    }
}

#[test]
fn dihedral_matches_symmetrized_products() {
    for m_cyc in 1..=2 {
        for n in 1..=2 {
            for a in classes(n, 2) {
                for c in classes(n, 2) {
                    let Ok(star) = dihedral_star(&a, &c, m_cyc) else { continue };
                    let d = (a.total_degree() + c.total_degree()).max(1);
                    let alg = weyl_encoding(d, WeylKind::Weyl, true);
                    let action = action_dihedral(n, m_cyc, d);
                    let s = |x: &QSymElement| symmetrize(&to_sym(x).unwrap(), &action, &alg).unwrap();
                    let lhs = s(&star);
                    let rhs = tensor_mul(&alg, &s(&QSymElement::basis(a.clone())), &s(&QSymElement::basis(c.clone())));
                    assert_eq!(lhs, rhs, "D{m_cyc} {a} * {c}");
                }
            }
        }
    }
}

#[test]
fn dihedral_normal_form_is_faithful() {
    // the normal form changes representatives but never the invariant attached to a class
    for n in 1..=2 {
        let action = action_dihedral(n, 1, 4);
        let alg = weyl_encoding(4, WeylKind::Weyl, true);
        for a in classes(n, 2) {
            for k in 0..3 {
                let x = QSymElement::single(a.clone(), HPoly::hbar(k));
                let nf = dihedral_normal_form(&x);
                let s = |x: &QSymElement| symmetrize(&to_sym(x).unwrap(), &action, &alg).unwrap();
                assert_eq!(s(&x), s(&nf), "{a} h^{k}");
                assert_eq!(dihedral_normal_form(&nf), nf);
            }
        }
    }
}

#[test]
fn dihedral_square_of_z() {
    // n = 1, m = 1: z ⋆ z = ½ z² + ½ z z̄, and z² shares its class with z̄²
    let z = ExpMatrix::from_weyl_rows(&[(1, 0)]);
    let p = dihedral_star(&z, &z, 1).unwrap();
    let mut e = QSymElement::zero();
    let half = HPoly::constant(polya_core::GaussRat::ratio(1, 2));
    e.add_term(ExpMatrix::from_weyl_rows(&[(0, 2)]), &half);
    e.add_term(ExpMatrix::from_weyl_rows(&[(1, 1)]), &half);
    assert_eq!(p, e);
}

#[test]
fn symweyl_paths_agree_with_oracle() {
    let action = action_symmetric(2);
    let ys = ExpMatrix::from_weyl_rows(&[(0, 1), (1, 0)]);
    let f = [ys.clone(), ys.clone(), ys.clone()];
    let direct = symweyl_multiproduct(&f).unwrap();
    assert_eq!(direct, symweyl_multiproduct_iterated(&f).unwrap());
    let alg = weyl_encoding(6, WeylKind::Weyl, false);
    let canon = |t: &Vec<usize>| monomial_canonical(&action, &alg, t);
    let facs: Vec<SymElement> = f.iter().map(|x| SymElement::basis(expmat_to_tuple(x).unwrap())).collect();
    assert_eq!(direct, from_sym(&oracle_product(&facs, &action, &alg, &canon).unwrap()));

    let g = [ys.clone(), ExpMatrix::from_weyl_rows(&[(1, 0), (0, 1)])];
    let direct = msymweyl_multiproduct(&g).unwrap();
    assert_eq!(direct, msymweyl_multiproduct_iterated(&g).unwrap());
    let alg = weyl_encoding(6, WeylKind::MWeyl, false);
    let canon = |t: &Vec<usize>| monomial_canonical(&action, &alg, t);
    let facs: Vec<SymElement> = g.iter().map(|x| SymElement::basis(expmat_to_tuple(x).unwrap())).collect();
    assert_eq!(direct, from_sym(&oracle_product(&facs, &action, &alg, &canon).unwrap()));
}

#[test]
fn stars_are_associative_on_small_classes() {
    let cls = classes(2, 1);
    for a in &cls {
        for b in &cls {
            for c in &cls {
                let (x, y, z) = (QSymElement::basis(a.clone()), QSymElement::basis(b.clone()), QSymElement::basis(c.clone()));
                let l = qsym_star(&qsym_star(&x, &y).unwrap(), &z).unwrap();
                let r = qsym_star(&x, &qsym_star(&y, &z).unwrap()).unwrap();
                assert_eq!(l, r);
                let l = wreath_zm_star_elem(&wreath_zm_star_elem(&x, &y, 1).unwrap(), &z, 1).unwrap();
                let r = wreath_zm_star_elem(&x, &wreath_zm_star_elem(&y, &z, 1).unwrap(), 1).unwrap();
                assert_eq!(l, r);
                let l = dihedral_star_elem(&dihedral_star_elem(&x, &y, 1).unwrap(), &z, 1).unwrap();
                let r = dihedral_star_elem(&x, &dihedral_star_elem(&y, &z, 1).unwrap(), 1).unwrap();
                assert_eq!(l, r, "{a} {b} {c}");
            }
        }
    }
}
