//! Regression values from the worked examples over F_256 and F_16(t).

use orepoly::bound::{self, Algorithm};
use orepoly::csimple;
use orepoly::factor::{self, FactorOptions, Factorization};
use orepoly::ffield::cpoly;
use orepoly::ffield::{FFElem, FieldDesc};
use orepoly::parse::{self, AnyRing};
use orepoly::ratfun::ScalingTwist;
use orepoly::skewcore::{FiniteSkewRing, SkewPoly, SkewRing, Twist};
use orepoly::{Field, FiniteField};

const F256: &str = "GF(2^8; modulus=x^8 + x^4 + x^3 + x^2 + 1; var=a); frobenius=2";
const F16T: &str = "GF(2^4; modulus=x^4 + x + 1; var=a)(t); sigma: t -> a^5*t";

macro_rules! data {
    ($name:literal) => {
        include_str!(concat!("../data/", $name, ".txt")).trim()
    };
}

fn f256() -> FiniteSkewRing {
    match parse::parse_ring(F256).unwrap() {
        AnyRing::Frobenius(r) => r,
        _ => unreachable!(),
    }
}

fn f16t() -> SkewRing<ScalingTwist> {
    match parse::parse_ring(F16T).unwrap() {
        AnyRing::Scaling(r) => r,
        _ => unreachable!(),
    }
}

fn big_f(r: &FiniteSkewRing) -> SkewPoly<FFElem> {
    parse::parse_skew(r, data!("f256_f")).unwrap()
}

fn printed_factors(r: &FiniteSkewRing) -> Vec<SkewPoly<FFElem>> {
    [
        data!("f256_f1"),
        data!("f256_f2"),
        data!("f256_f3"),
        data!("f256_f4_1"),
        data!("f256_f4_2"),
        data!("f256_f4_3"),
        data!("f256_f4_4"),
        data!("f256_f5"),
        data!("f256_f6"),
    ]
    .iter()
    .map(|s| parse::parse_skew(r, s).unwrap())
    .collect()
}

#[test]
fn field_and_subfield() {
    let r = f256();
    let k = r.field();
    assert_eq!(k.modulus(), &[1, 0, 1, 1, 1, 0, 0, 0, 1]);
    let b = k.pow(&k.gen(), 85);
    assert!(k.is_zero(&k.add(&k.add(&k.mul(&b, &b), &b), &k.one())));
    assert_eq!(r.twist().sigma_pow(&k.gen(), 1), k.pow(&k.gen(), 4));
    assert_eq!((r.center().q(), r.mu()), (4, 4));
    assert_eq!(r.twist().subfield().embed(&r.center().gen()), b);
}

#[test]
fn central_factors() {
    let r = f256();
    let k = r.center();
    let fhat = parse::parse_central(&r, data!("f256_fhat")).unwrap();
    let degs: Vec<usize> = cpoly::cpoly_factor(k, &fhat, 5).unwrap().iter().map(|(p, _)| p.deg().unwrap()).collect();
    let mut sorted = degs.clone();
    sorted.sort();
    assert_eq!(sorted, [1, 4, 5, 5, 28, 42]);
    let p1 = parse::parse_central(&r, data!("f256_p1")).unwrap();
    let p2 = parse::parse_central(&r, data!("f256_p2")).unwrap();
    let p5 = parse::parse_central(&r, data!("f256_p5")).unwrap();
    assert!(cpoly::cpoly_is_irreducible(k, &p1).unwrap());
    assert!(cpoly::cpoly_is_irreducible(k, &p5).unwrap());
    assert_eq!(csimple::kf_make(k, &p1).unwrap().order(), Some(4));
    assert_eq!(csimple::kf_make(k, &p2).unwrap().order(), Some(256));
}

#[test]
fn bound_of_the_degree_100_polynomial() {
    let r = f256();
    let f = big_f(&r);
    assert_eq!(f.deg(), Some(100));
    assert_eq!(parse::parse_skew(&r, &r.format(&f)).unwrap(), f);
    let want = parse::parse_central(&r, data!("f256_fhat")).unwrap();
    for alg in [Algorithm::V1, Algorithm::V2] {
        let cf = bound::centralize(&r, &bound::bound(&r, &f, alg).unwrap()).unwrap();
        assert_eq!((cf.m, cf.fhat.clone()), (0, want.clone()));
    }
    assert_eq!(bound::oracle_min_central(&r, &f).unwrap(), want);
}

#[test]
fn printed_factorization_multiplies_back() {
    let r = f256();
    let f = big_f(&r);
    let fs = printed_factors(&r);
    let prod = fs.iter().fold(r.one(), |acc, q| r.mul(&acc, q));
    assert_eq!(prod, f);
    let f4 = parse::parse_skew(&r, data!("f256_f4")).unwrap();
    assert_eq!(fs[3..7].iter().fold(r.one(), |acc, q| r.mul(&acc, q)), f4);
    let certificates = fs
        .iter()
        .map(|q| bound::centralize(&r, &bound::bound_v2(&r, q).unwrap()).unwrap())
        .collect();
    let fz = Factorization { unit: r.field().one(), factors: fs, certificates };
    assert!(factor::verify_factorization(&r, &f, &fz));
}

#[test]
fn irreducibility_of_printed_factors() {
    let r = f256();
    let f1 = parse::parse_skew(&r, "X + (a^7+a^5+a^3+a^2+a+1)").unwrap();
    assert_eq!(f1, parse::parse_skew(&r, data!("f256_f1")).unwrap());
    assert!(factor::is_irreducible(&r, &f1).unwrap());
    let f4 = parse::parse_skew(&r, data!("f256_f4")).unwrap();
    assert!(!factor::is_irreducible(&r, &f4).unwrap());
    assert_eq!(factor::num_factors(&r, &f4).unwrap(), 4);
    assert!(bound::is_twosided(&r, &f4).unwrap());
}

#[test]
fn central_f4_splits_into_four_similar_factors() {
    let r = f256();
    let f4 = parse::parse_skew(&r, data!("f256_f4")).unwrap();
    let p4 = parse::parse_central(&r, data!("f256_p4")).unwrap();
    assert_eq!(r.lift_central(&p4), f4);
    for seed in 0..5 {
        let parts = factor::factorize_irred(&r, &f4, &p4, seed, csimple::MAX_TRIALS).unwrap();
        assert_eq!(parts.len(), 4);
        assert!(parts.iter().all(|q| q.deg() == Some(5) && bound::bound_v2(&r, q).unwrap() == f4));
        assert_eq!(parts.iter().fold(r.one(), |acc, q| r.mul(&acc, q)), f4);
    }
    let sa = csimple::alg_build(&r, &p4).unwrap();
    assert!(sa.algebra().is_zero(&sa.project(&f4).unwrap()));
    let (zeta, _) = csimple::find_zero_divisor(sa.algebra(), 3, csimple::MAX_TRIALS).unwrap().unwrap();
    let d = r.rgcd(&sa.lift(&zeta), &f4).unwrap().deg().unwrap();
    assert!(d > 0 && d < 20);
}

#[test]
fn full_factorization_is_seed_independent_in_length() {
    let r = f256();
    let f = big_f(&r);
    for seed in [1, 99] {
        let fz = factor::factorize(&r, &f, &FactorOptions { seed, jobs: 3, ..FactorOptions::default() }).unwrap();
        assert_eq!(fz.factors.len(), 9);
        assert!(factor::verify_factorization(&r, &f, &fz));
    }
}

#[test]
fn rational_function_example() {
    let r = f16t();
    let k = r.field();
    let a = k.base().gen();
    let t = k.gen();
    assert_eq!(r.twist().sigma_pow(&t, 1), k.mul(&k.from_base(&k.base().pow(&a, 5)), &t));
    let t3 = k.pow(&t, 3);
    assert_eq!(r.twist().sigma_pow(&t3, 1), t3);
    assert_eq!((r.mu(), r.rank()), (3, 9));
    let f = parse::parse_skew(&r, data!("ratfun_bound_f")).unwrap();
    let want = parse::parse_skew(&r, data!("ratfun_bound_fstar")).unwrap();
    assert_eq!(bound::bound_v2(&r, &f).unwrap(), r.monic(&want).unwrap());
    assert_eq!(bound::bound_v1(&r, &f).unwrap(), r.monic(&want).unwrap());
}

#[test]
fn rational_function_split() {
    let r = f16t();
    let f = parse::parse_skew(&r, data!("ratfun_split_f")).unwrap();
    let fhat = parse::parse_central(&r, data!("ratfun_split_fhat")).unwrap();
    let p1 = parse::parse_central(&r, data!("ratfun_split_p1")).unwrap();
    let p2 = parse::parse_central(&r, data!("ratfun_split_p2")).unwrap();
    assert_eq!(cpoly::mul(r.center(), &p1, &p2), fhat);
    let fstar = parse::parse_skew(&r, data!("ratfun_split_fstar")).unwrap();
    assert_eq!(bound::bound_v2(&r, &f).unwrap(), r.monic(&fstar).unwrap());
    assert_eq!(bound::centralize(&r, &r.monic(&fstar).unwrap()).unwrap().fhat, fhat);
    let g2 = parse::parse_skew(&r, data!("ratfun_split_g2")).unwrap();
    assert_eq!(r.rgcd(&f, &r.lift_central(&p2)).unwrap(), g2);
    let g1 = parse::parse_skew(&r, data!("ratfun_split_g1")).unwrap();
    assert_eq!(factor::split_by_central(&r, &f, &p2).unwrap(), (g1.clone(), g2.clone()));
    let (g, p) = factor::split_by_central(&r, &f, &fhat).unwrap();
    assert_eq!((g, p), (r.constant(f.lc().unwrap().clone()), r.monic(&f).unwrap()));
    assert_eq!(r.mul(&g1, &g2), f);
}

#[test]
fn finite_field_defaults_differ_from_the_example_modulus() {
    let default = FieldDesc::new(2, 8).unwrap();
    assert_eq!(default.modulus(), &[1, 1, 0, 1, 1, 0, 0, 0, 1]);
    assert_ne!(default, f256().field().clone());
}
