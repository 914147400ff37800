//! Randomized algebraic laws across several coefficient rings.

use orepoly::bound::{self, Algorithm};
use orepoly::csimple;
use orepoly::factor::{self, FactorOptions};
use orepoly::ffield::cpoly::{self, ComPoly};
use orepoly::ffield::FieldDesc;
use orepoly::ratfun::{rat_skew_ring, RationalFunctionField};
use orepoly::skewcore::{Coef, FiniteSkewRing, FrobeniusTwist, SkewPoly, SkewRing, Twist};
use orepoly::Field;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn finite(p: u64, m: u32, s: u32) -> FiniteSkewRing {
    SkewRing::new(FrobeniusTwist::new(&FieldDesc::new(p, m).unwrap(), s).unwrap())
}

fn rings() -> Vec<FiniteSkewRing> {
    vec![finite(2, 2, 1), finite(3, 2, 1), finite(2, 6, 2), finite(2, 8, 2), finite(5, 3, 1), finite(2, 4, 0)]
}

fn rand_poly<T: Twist>(r: &SkewRing<T>, rng: &mut ChaCha8Rng, max: usize) -> SkewPoly<Coef<T>> {
    let n = rng.gen_range(0..=max);
    r.random(rng, n, false, false)
}

fn rand_nonzero<T: Twist>(r: &SkewRing<T>, rng: &mut ChaCha8Rng, max: usize) -> SkewPoly<Coef<T>> {
    loop {
        let f = rand_poly(r, rng, max);
        if !f.is_zero() {
            return f;
        }
    }
}

fn ring_laws<T: Twist>(r: &SkewRing<T>, rng: &mut ChaCha8Rng) {
    let (f, g, h) = (rand_poly(r, rng, 6), rand_poly(r, rng, 6), rand_poly(r, rng, 6));
    assert_eq!(r.mul(&r.mul(&f, &g), &h), r.mul(&f, &r.mul(&g, &h)));
    assert_eq!(r.mul(&f, &r.add(&g, &h)), r.add(&r.mul(&f, &g), &r.mul(&f, &h)));
    assert_eq!(r.mul(&r.add(&f, &g), &h), r.add(&r.mul(&f, &h), &r.mul(&g, &h)));
    if !f.is_zero() && !g.is_zero() {
        assert_eq!(r.mul(&f, &g).deg(), Some(f.deg().unwrap() + g.deg().unwrap()));
    }
}

fn euclid_laws<T: Twist>(r: &SkewRing<T>, rng: &mut ChaCha8Rng) {
    let f = rand_nonzero(r, rng, 8);
    let g = rand_nonzero(r, rng, 6);
    let (q, rem) = r.ldivrem(&f, &g).unwrap();
    assert_eq!(r.add(&r.mul(&q, &g), &rem), f);
    assert!(rem.deg() < g.deg());
    let e = r.leea(&f, &g).unwrap();
    assert_eq!(r.add(&r.mul(&e.u, &f), &r.mul(&e.v, &g)), e.rgcd);
    assert!(r.add(&r.mul(&e.u1, &f), &r.mul(&e.v1, &g)).is_zero());
    assert_eq!(e.rgcd, r.rgcd(&f, &g).unwrap());
    let l = r.llcm(&f, &g).unwrap();
    assert_eq!(l, e.llcm);
    assert!(r.right_divides(&f, &l).unwrap() && r.right_divides(&g, &l).unwrap());
    assert!(r.right_divides(&e.rgcd, &f).unwrap() && r.right_divides(&e.rgcd, &g).unwrap());
    assert_eq!(l.deg().unwrap() + e.rgcd.deg().unwrap(), f.deg().unwrap() + g.deg().unwrap());
    let ann = r.annihilator(&f, &g).unwrap();
    let hg = r.lrem(&g, &f).unwrap();
    assert!(r.lrem(&r.mul(&ann, &g), &f).unwrap().is_zero());
    if !hg.is_zero() {
        assert_eq!(r.monic(&r.mul(&ann, &hg)).unwrap(), r.llcm(&f, &hg).unwrap());
    }
}

fn bound_laws<T: Twist>(r: &SkewRing<T>, rng: &mut ChaCha8Rng, max: usize) {
    let f = rand_nonzero(r, rng, max);
    let b1 = bound::bound_v1(r, &f).unwrap();
    let b2 = bound::bound_v2(r, &f).unwrap();
    assert_eq!(b1, b2);
    assert!(bound::is_twosided(r, &b2).unwrap());
    assert!(r.right_divides(&f, &b2).unwrap());
    assert!(b2.deg().unwrap() <= r.mu() * f.deg().unwrap());
    let cf = bound::centralize(r, &b2).unwrap();
    assert_eq!(bound::decentralize(r, &cf), b2);
    let (g, m) = r.strip_x(&r.monic(&f).unwrap()).unwrap();
    let cg = bound::centralize(r, &bound::bound_v2(r, &g).unwrap()).unwrap();
    assert_eq!((cf.m, &cf.fhat), (m, &cg.fhat));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn finite_ring_laws(seed in any::<u64>(), which in 0usize..6) {
        let r = &rings()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        ring_laws(r, &mut rng);
        euclid_laws(r, &mut rng);
        bound_laws(r, &mut rng, 7);
    }

    #[test]
    fn rational_ring_laws(seed in any::<u64>()) {
        let base = FieldDesc::new(2, 4).unwrap();
        let r = rat_skew_ring(&base, base.pow(&base.gen(), 5)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        ring_laws(&r, &mut rng);
        euclid_laws(&r, &mut rng);
        bound_laws(&r, &mut rng, 2);
    }

    #[test]
    fn rational_field_axioms(seed in any::<u64>()) {
        let k = RationalFunctionField::new(&FieldDesc::new(3, 2).unwrap(), "t");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y, z) = (k.random(&mut rng), k.random(&mut rng), k.random(&mut rng));
        prop_assert_eq!(k.mul(&x, &k.add(&y, &z)), k.add(&k.mul(&x, &y), &k.mul(&x, &z)));
        prop_assert_eq!(k.mul(&k.mul(&x, &y), &z), k.mul(&x, &k.mul(&y, &z)));
        if let Some(ix) = k.inv(&x) {
            prop_assert!(k.is_one(&k.mul(&x, &ix)));
        }
        prop_assert!(k.base().is_one(x.den().lc().unwrap()));
        prop_assert!(cpoly::is_one(k.base(), &cpoly::gcd(k.base(), x.num(), x.den())) || x.num().is_zero());
    }

    #[test]
    fn factorization_reconstructs(seed in any::<u64>(), which in 0usize..6) {
        let r = &rings()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=9);
        let f = r.random(&mut rng, n, false, false);
        prop_assume!(f.deg().unwrap_or(0) > 0);
        let fz = factor::factorize(r, &f, &FactorOptions::with_seed(seed)).unwrap();
        prop_assert!(factor::verify_factorization(r, &f, &fz));
        let fz2 = factor::factorize(r, &f, &FactorOptions::with_seed(seed ^ 1)).unwrap();
        prop_assert_eq!(fz.factors.len(), fz2.factors.len());
        prop_assert_eq!(factor::is_irreducible(r, &f).unwrap(), fz.factors.len() == 1);
    }

    #[test]
    fn commutative_factorization(seed in any::<u64>(), which in 0usize..4) {
        let k = [FieldDesc::new(2, 2), FieldDesc::new(3, 1), FieldDesc::new(5, 2), FieldDesc::new(2, 5)][which].clone().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut f = ComPoly::one(&k);
        for _ in 0..rng.gen_range(1..4) {
            let n = rng.gen_range(1..5);
            let g = cpoly::random(&k, n, &mut rng);
            if !g.is_zero() {
                f = cpoly::mul(&k, &f, &g);
            }
        }
        prop_assume!(f.deg().unwrap_or(0) > 0);
        let fs = cpoly::cpoly_factor(&k, &f, seed).unwrap();
        prop_assert_eq!(cpoly::expand_factors(&k, &fs), cpoly::monic(&k, &f));
        prop_assert!(fs.iter().all(|(p, _)| cpoly::is_irreducible(&k, p)));
        prop_assert!(fs.windows(2).all(|w| cpoly::canonical_cmp(&w[0].0, &w[1].0).is_lt()));
    }

    #[test]
    fn algebra_matches_skew_product(seed in any::<u64>()) {
        let r = finite(2, 8, 2);
        let k = r.center().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pi = loop {
            let n = rng.gen_range(1..4);
            let mut c: Vec<_> = (0..n).map(|_| k.random(&mut rng)).collect();
            c.push(k.one());
            let p = ComPoly::new(&k, c);
            if cpoly::is_irreducible(&k, &p) {
                break p;
            }
        };
        let sa = csimple::alg_build(&r, &pi).unwrap();
        let alg = sa.algebra();
        let (f, g) = (rand_poly(&r, &mut rng, 14), rand_poly(&r, &mut rng, 14));
        let (x, y) = (sa.project(&f).unwrap(), sa.project(&g).unwrap());
        prop_assert_eq!(alg.mul(&x, &y), sa.project(&r.mul(&f, &g)).unwrap());
        prop_assert_eq!(sa.project(&sa.lift(&x)).unwrap(), x.clone());
        let e = csimple::idempotent(alg, &x).unwrap();
        prop_assert_eq!(alg.mul(&e, &e), e.clone());
        prop_assert_eq!(alg.mul(&x, &e), x);
    }
}

#[test]
fn bound_algorithm_choice_is_irrelevant_for_irreducibility() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for r in rings() {
        for _ in 0..20 {
            let f = rand_nonzero(&r, &mut rng, 6);
            if f.deg() == Some(0) {
                continue;
            }
            assert_eq!(
                factor::is_irreducible_with(&r, &f, Algorithm::V1).unwrap(),
                factor::is_irreducible_with(&r, &f, Algorithm::V2).unwrap()
            );
        }
    }
}
