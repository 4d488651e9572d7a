use num_rational::BigRational;
use num_traits::One;
use polya_core::expmat::ExpMatrix;
use polya_core::perm::Perm;
use polya_core::qsym::qsym_star;
use polya_core::superalg::{clifford_product, ext_product, koszul_sign, koszul_sign_formula, ExtMono};
use polya_core::sympow::boolean_product;
use polya_core::weyl::{mweyl_normal_order, normal_order, WeylKind, WeylNormalForm, WeylWord};
use polya_core::{GaussRat, HPoly, Lin};
use proptest::prelude::*;

fn gauss() -> impl Strategy<Value = GaussRat> {
    (-20i64..20, 1i64..8, -20i64..20, 1i64..8).prop_map(|(a, b, c, d)| {
        GaussRat::new(BigRational::new(a.into(), b.into()), BigRational::new(c.into(), d.into()))
    })
}

fn hpoly() -> impl Strategy<Value = HPoly> {
    prop::collection::vec((0u32..4, gauss()), 0..4).prop_map(HPoly::from_terms)
}

fn word() -> impl Strategy<Value = WeylWord> {
    prop::collection::vec((0u32..3, 0u32..3), 0..4).prop_map(WeylWord::new)
}

fn mono() -> impl Strategy<Value = ExtMono> {
    (0u32..16).prop_map(ExtMono)
}

fn ext_mul(a: &Lin<ExtMono>, b: &Lin<ExtMono>, clifford: bool) -> Lin<ExtMono> {
    let mut out = Lin::zero();
    for (i, c) in &a.terms {
        for (j, d) in &b.terms {
            let p = if clifford { Some(clifford_product(*i, *j)) } else { ext_product(*i, *j) };
            if let Some((s, k)) = p {
                out.add_term(k, &(c * d).scale(&GaussRat::from_int(s as i64)));
            }
        }
    }
    out
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn gauss_ring_axioms(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &GaussRat::one(), a.clone());
    }

    #[test]
    fn gauss_display_parses_back(a in gauss()) {
        prop_assert_eq!(a.to_string().parse::<GaussRat>().unwrap(), a);
    }

    #[test]
    fn gauss_division_inverts_multiplication(a in gauss(), b in gauss()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a);
    }

    #[test]
    fn hpoly_ring_axioms(p in hpoly(), q in hpoly(), r in hpoly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &HPoly::one(), p.clone());
    }

    #[test]
    fn hpoly_json_round_trip(p in hpoly()) {
        prop_assert_eq!(HPoly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn normal_order_is_multiplicative(u in word(), v in word()) {
        for kind in [WeylKind::Weyl, WeylKind::MWeyl] {
            let nf = |w: &WeylWord| match kind {
                WeylKind::Weyl => normal_order(w),
                WeylKind::MWeyl => mweyl_normal_order(w),
            };
            prop_assert_eq!(nf(&u.concat(&v)), nf(&u).mul(&nf(&v), kind));
        }
    }

    #[test]
    fn weyl_product_associative(u in word(), v in word(), w in word()) {
        for kind in [WeylKind::Weyl, WeylKind::MWeyl] {
            let (a, b, c): (WeylNormalForm, WeylNormalForm, WeylNormalForm) =
                (normal_order(&u), normal_order(&v), normal_order(&w));
            prop_assert_eq!(a.mul(&b, kind).mul(&c, kind), a.mul(&b.mul(&c, kind), kind));
        }
    }

    #[test]
    fn exterior_and_clifford_associative(a in mono(), b in mono(), c in mono()) {
        for clifford in [false, true] {
            let (x, y, z) = (Lin::basis(a), Lin::basis(b), Lin::basis(c));
            prop_assert_eq!(
                ext_mul(&ext_mul(&x, &y, clifford), &z, clifford),
                ext_mul(&x, &ext_mul(&y, &z, clifford), clifford)
            );
        }
    }

    #[test]
    fn exterior_supercommutative(a in mono(), b in mono()) {
        let s = if a.parity() == 1 && b.parity() == 1 { -1 } else { 1 };
        match (ext_product(a, b), ext_product(b, a)) {
            (Some((s1, k1)), Some((s2, k2))) => prop_assert!(k1 == k2 && s1 == s * s2),
            (None, None) => {}
            _ => prop_assert!(false, "zero on one side only"),
        }
    }

    #[test]
    fn koszul_formula_matches_reordering(
        (a, b, sigma) in (1usize..6).prop_flat_map(|n| (
            prop::collection::vec(0u8..2, n),
            prop::collection::vec(0u8..2, n),
            perm(n),
        ))
    ) {
        prop_assert_eq!(koszul_sign(&a, &b, &sigma).unwrap(), koszul_sign_formula(&a, &b, &sigma));
    }

    #[test]
    fn boolean_coefficients_sum_to_one((n, a, b) in (1u32..10).prop_flat_map(|n| (Just(n), 0..=n, 0..=n))) {
        let total: BigRational = boolean_product(a, b, n).unwrap().values().cloned().sum();
        prop_assert!(total.is_one());
    }

    #[test]
    fn qsym_star_associative(
        rows in prop::collection::vec(prop::collection::vec((0u32..2, 0u32..2), 2), 3)
    ) {
        let el = |r: &Vec<(u32, u32)>| Lin::basis(ExpMatrix::from_weyl_rows(r).canonical());
        let (a, b, c) = (el(&rows[0]), el(&rows[1]), el(&rows[2]));
        let left = qsym_star(&qsym_star(&a, &b).unwrap(), &c).unwrap();
        let right = qsym_star(&a, &qsym_star(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
