use polya_core::schur::*;
use polya_core::HPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_space(rng: &mut ChaCha8Rng) -> SuperSpace {
    let d = rng.gen_range(1..=2);
    SuperSpace::new((0..d).map(|_| rng.gen_range(0..=1)).collect()).unwrap()
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

#[test]
fn compose_matches_the_averaging_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for m in [2u32, 3] {
        for n in 1..=2 {
            let ty = SchurType::new(vec![m], n).unwrap();
            for _ in 0..12 {
                let (v, w, z) = (random_space(&mut rng), random_space(&mut rng), random_space(&mut rng));
                let f = random_morphism(&mut rng, &ty, &v, &w);
                let g = random_morphism(&mut rng, &ty, &w, &z);
                let closed = schur_compose(&f, &g, &ty, &v, &w, &z).unwrap();
                assert_eq!(closed, schur_oracle_compose(&f, &g, &ty, &v, &w, &z).unwrap(), "m={m} n={n}");
            }
        }
    }
}

#[test]
fn compose_is_associative_and_unital() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (m, n) in [(vec![2], 2), (vec![2, 3], 2), (vec![3], 3)] {
        let ty = SchurType::new(m, n).unwrap();
        for _ in 0..10 {
            let sp: Vec<SuperSpace> = (0..4).map(|_| random_space(&mut rng)).collect();
            let f = random_morphism(&mut rng, &ty, &sp[0], &sp[1]);
            let g = random_morphism(&mut rng, &ty, &sp[1], &sp[2]);
            let h = random_morphism(&mut rng, &ty, &sp[2], &sp[3]);
            let fg = schur_compose(&f, &g, &ty, &sp[0], &sp[1], &sp[2]).unwrap();
            let gh = schur_compose(&g, &h, &ty, &sp[1], &sp[2], &sp[3]).unwrap();
            let l = schur_compose(&fg, &h, &ty, &sp[0], &sp[2], &sp[3]).unwrap();
            let r = schur_compose(&f, &gh, &ty, &sp[0], &sp[1], &sp[3]).unwrap();
            assert_eq!(l, r);
            let id0 = schur_identity(&ty, &sp[0]);
            let id1 = schur_identity(&ty, &sp[1]);
            assert_eq!(schur_compose(&id0, &f, &ty, &sp[0], &sp[0], &sp[1]).unwrap(), f);
            assert_eq!(schur_compose(&f, &id1, &ty, &sp[0], &sp[1], &sp[1]).unwrap(), f);
        }
    }
}
