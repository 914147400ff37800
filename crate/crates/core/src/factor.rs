//! Irreducibility testing and complete factorization over finite fields,
//! plus splitting by a supplied central factor for any twist.

use rayon::prelude::*;

use crate::arith::derive_seed;
use crate::bound::{self, Algorithm, CentralForm};
use crate::csimple::{self, MAX_TRIALS};
use crate::error::{Error, Result};
use crate::ffield::cpoly::{self, ComPoly};
use crate::ffield::FFElem;
use crate::field::Field;
use crate::skewcore::{Cen, Coef, FiniteSkewRing, SkewPoly, SkewRing, Twist};

/// `f = unit * factors[0] * factors[1] * ...` with monic irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FFElem,
    pub factors: Vec<SkewPoly<FFElem>>,
    /// Central form of the bound of each factor, in the same order.
    pub certificates: Vec<CentralForm<FFElem, FFElem>>,
}

#[derive(Clone, Copy, Debug)]
pub struct FactorOptions {
    pub seed: u64,
    pub algorithm: Algorithm,
    /// Worker threads for the independent branches; 1 runs serially.
    pub jobs: usize,
    pub max_trials: usize,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions { seed: 0, algorithm: Algorithm::V2, jobs: 1, max_trials: MAX_TRIALS }
    }
}

impl FactorOptions {
    pub fn with_seed(seed: u64) -> Self {
        FactorOptions { seed, ..Self::default() }
    }
}

fn check_nonconstant<E>(f: &SkewPoly<E>) -> Result<usize> {
    match f.deg() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(n) => Ok(n),
    }
}

fn x_divides<T: Twist>(ring: &SkewRing<T>, f: &SkewPoly<Coef<T>>) -> bool {
    ring.field().is_zero(&f.coeffs()[0])
}

pub fn is_irreducible(ring: &FiniteSkewRing, f: &SkewPoly<FFElem>) -> Result<bool> {
    is_irreducible_with(ring, f, Algorithm::V2)
}

pub fn is_irreducible_with(ring: &FiniteSkewRing, f: &SkewPoly<FFElem>, alg: Algorithm) -> Result<bool> {
    let n = check_nonconstant(f)?;
    if x_divides(ring, f) {
        return Ok(n == 1);
    }
    let (b, cf) = bound::central_bound(ring, f, alg)?;
    Ok(b.deg() == Some(ring.mu() * n) && cpoly::is_irreducible(ring.center(), &cf.fhat))
}

/// Number of irreducible factors of `f` when its bound has an irreducible
/// central part.
pub fn num_factors(ring: &FiniteSkewRing, f: &SkewPoly<FFElem>) -> Result<usize> {
    let n = check_nonconstant(f)?;
    if x_divides(ring, f) {
        return Err(Error::Precondition("X right-divides f".into()));
    }
    let (b, cf) = bound::central_bound(ring, f, Algorithm::V2)?;
    if !cpoly::is_irreducible(ring.center(), &cf.fhat) {
        return Err(Error::Precondition("the central part of the bound is reducible".into()));
    }
    let db = b.deg().expect("nonzero");
    let total = ring.mu() * n;
    if total % db != 0 {
        return Err(Error::Internal(format!("bound degree {db} does not divide {total}")));
    }
    Ok(total / db)
}

/// Splits `f = g p` where `p = rgcd(f, pi(X^mu))` has bound `pi(X^mu)`.
pub fn split_by_central<T: Twist>(
    ring: &SkewRing<T>,
    f: &SkewPoly<Coef<T>>,
    pi: &ComPoly<Cen<T>>,
) -> Result<(SkewPoly<Coef<T>>, SkewPoly<Coef<T>>)> {
    check_nonconstant(f)?;
    if x_divides(ring, f) {
        return Err(Error::Precondition("X right-divides f".into()));
    }
    let pi = cpoly::monic(ring.center(), pi);
    let lift = ring.lift_central(&pi);
    let p = ring.rgcd(f, &lift)?;
    let g = ring.lquot(f, &p)?;
    if bound::bound_v2(ring, &p)? != lift {
        return Err(Error::Precondition("pi does not divide the central part of the bound".into()));
    }
    Ok((g, p))
}

/// The peeling sequence: `f = g_1 g_2 ... g_s` where `g_i` has bound
/// `pis[i](X^mu)`, produced by `f_{i+1} = rgcd(f_i, lift(pi_{i+1} ... pi_s))`
/// and `g_i = lquot(f_i, f_{i+1})`.
pub fn peel<T: Twist>(
    ring: &SkewRing<T>,
    f: &SkewPoly<Coef<T>>,
    pis: &[ComPoly<Cen<T>>],
) -> Result<Vec<SkewPoly<Coef<T>>>> {
    let k = ring.center();
    let s = pis.len();
    let mut suffix = vec![ComPoly::one(k); s + 1];
    for i in (0..s).rev() {
        suffix[i] = cpoly::mul(k, &pis[i], &suffix[i + 1]);
    }
    let mut cur = ring.monic(f)?;
    let mut out = Vec::with_capacity(s);
    for i in 0..s {
        if i + 1 == s {
            out.push(cur.clone());
            break;
        }
        let next = ring.rgcd(&cur, &ring.lift_central(&suffix[i + 1]))?;
        out.push(ring.lquot(&cur, &next)?);
        cur = next;
    }
    Ok(out)
}

pub fn factorize(ring: &FiniteSkewRing, f: &SkewPoly<FFElem>, opts: &FactorOptions) -> Result<Factorization> {
    check_nonconstant(f)?;
    let (g, m) = ring.strip_x(&ring.monic(f)?)?;
    let pis = if g.deg() == Some(0) {
        Vec::new()
    } else {
        let cf = bound::centralize(ring, &bound::bound(ring, &g, opts.algorithm)?)?;
        let k = ring.center();
        let fs = cpoly::cpoly_factor(k, &cf.fhat, derive_seed(opts.seed, 0))?;
        fs.into_iter().flat_map(|(p, e)| std::iter::repeat_n(p, e)).collect()
    };
    factorize_parts(ring, f, &g, m, &pis, opts)
}

/// As [`factorize`] with the irreducible central factors (with repetition)
/// supplied in peeling order.
pub fn factorize_with_central(
    ring: &FiniteSkewRing,
    f: &SkewPoly<FFElem>,
    pis: &[ComPoly<FFElem>],
    opts: &FactorOptions,
) -> Result<Factorization> {
    check_nonconstant(f)?;
    let (g, m) = ring.strip_x(&ring.monic(f)?)?;
    let k = ring.center();
    let fhat = bound::centralize(ring, &bound::bound(ring, &g, opts.algorithm)?)?.fhat;
    let pis: Vec<ComPoly<FFElem>> = pis.iter().map(|p| cpoly::monic(k, p)).collect();
    if pis.iter().any(|p| !cpoly::is_irreducible(k, p)) || cpoly::expand_factors(k, &pis.iter().map(|p| (p.clone(), 1)).collect::<Vec<_>>()) != fhat {
        return Err(Error::Precondition("central factors must be irreducible with product fhat".into()));
    }
    factorize_parts(ring, f, &g, m, &pis, opts)
}

fn factorize_parts(
    ring: &FiniteSkewRing,
    f: &SkewPoly<FFElem>,
    g: &SkewPoly<FFElem>,
    m: usize,
    pis: &[ComPoly<FFElem>],
    opts: &FactorOptions,
) -> Result<Factorization> {
    let unit = *f.lc().expect("nonzero");
    let parts = peel(ring, g, pis)?;
    let branch = |i: usize| -> Result<Vec<SkewPoly<FFElem>>> {
        factorize_irred(ring, &parts[i], &pis[i], derive_seed(opts.seed, i as u64 + 1), opts.max_trials)
    };
    let branches: Vec<Result<Vec<SkewPoly<FFElem>>>> = if opts.jobs > 1 && parts.len() > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?;
        pool.install(|| (0..parts.len()).into_par_iter().map(branch).collect())
    } else {
        (0..parts.len()).map(branch).collect()
    };
    let mut factors = Vec::new();
    for b in branches {
        factors.extend(b?);
    }
    factors.extend(std::iter::repeat_n(ring.x(), m));
    let certificates = factors
        .iter()
        .map(|q| bound::central_bound(ring, q, opts.algorithm).map(|(_, cf)| cf))
        .collect::<Result<_>>()?;
    Ok(Factorization { unit, factors, certificates })
}

/// Factors `g` whose bound is `pi(X^mu)` with `pi` irreducible.
pub fn factorize_irred(
    ring: &FiniteSkewRing,
    g: &SkewPoly<FFElem>,
    pi: &ComPoly<FFElem>,
    seed: u64,
    max_trials: usize,
) -> Result<Vec<SkewPoly<FFElem>>> {
    let g = ring.monic(g)?;
    let n = g.deg().expect("nonzero");
    if n == 0 {
        return Ok(Vec::new());
    }
    if pi.deg() == Some(n) {
        return Ok(vec![g]);
    }
    let sa = csimple::alg_build(ring, pi)?;
    irred_rec(ring, &sa, g, pi, seed, max_trials)
}

fn irred_rec(
    ring: &FiniteSkewRing,
    sa: &csimple::StructAlgebra<'_>,
    g: SkewPoly<FFElem>,
    pi: &ComPoly<FFElem>,
    seed: u64,
    max_trials: usize,
) -> Result<Vec<SkewPoly<FFElem>>> {
    let n = g.deg().expect("nonzero");
    if n == 0 {
        return Ok(Vec::new());
    }
    if pi.deg() == Some(n) {
        return Ok(vec![g]);
    }
    let alg = sa.algebra();
    let a = sa.project(&g)?;
    let e = csimple::idempotent(alg, &a)?;
    let corner = csimple::corner(alg, &e)?;
    let (zeta, _) = csimple::find_zero_divisor(corner.algebra(), derive_seed(seed, 0), max_trials)?
        .ok_or_else(|| Error::Internal("corner of a reducible polynomial is a division algebra".into()))?;
    let aux = sa.lift(&corner.embed(&zeta));
    let p = ring.rgcd(&aux, &g)?;
    let dp = p.deg().expect("nonzero");
    if dp == 0 || dp >= n {
        return Err(Error::Internal(format!("zero divisor gave a trivial divisor of degree {dp}")));
    }
    let h = ring.lquot(&g, &p)?;
    let mut out = irred_rec(ring, sa, h, pi, derive_seed(seed, 1), max_trials)?;
    out.extend(irred_rec(ring, sa, p, pi, derive_seed(seed, 2), max_trials)?);
    Ok(out)
}

/// Re-multiplies, re-tests irreducibility and checks the certificates.
pub fn verify_factorization(ring: &FiniteSkewRing, f: &SkewPoly<FFElem>, fz: &Factorization) -> bool {
    let prod = fz.factors.iter().fold(ring.constant(fz.unit), |acc, q| ring.mul(&acc, q));
    if prod != *f || fz.certificates.len() != fz.factors.len() {
        return false;
    }
    fz.factors.iter().zip(&fz.certificates).all(|(q, cf)| {
        ring.is_monic(q)
            && matches!(is_irreducible(ring, q), Ok(true))
            && matches!(bound::bound_v2(ring, q), Ok(b) if b == bound::decentralize(ring, cf))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FieldDesc;
    use crate::skewcore::FrobeniusTwist;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ring(p: u64, m: u32, s: u32) -> FiniteSkewRing {
        let f = FieldDesc::new(p, m).unwrap();
        SkewRing::new(FrobeniusTwist::new(&f, s).unwrap())
    }

    #[test]
    fn small_cases() {
        let r = ring(2, 2, 1);
        let k = r.field().clone();
        let x2 = r.monomial(k.one(), 2);
        assert!(!is_irreducible(&r, &x2).unwrap());
        assert!(is_irreducible(&r, &r.x()).unwrap());
        assert!(is_irreducible(&r, &r.one()).is_err());
        let x1 = r.add(&r.x(), &r.one());
        assert!(is_irreducible(&r, &x1).unwrap());
        assert_eq!(num_factors(&r, &x1).unwrap(), 1);
        let x3 = r.monomial(k.one(), 3);
        let fz = factorize(&r, &x3, &FactorOptions::default()).unwrap();
        assert_eq!(fz.factors, vec![r.x(); 3]);
        assert!(verify_factorization(&r, &x3, &fz));
        let xb = r.add(&r.x(), &r.constant(k.gen()));
        let f = r.mul(&x1, &xb);
        let cf = bound::centralize(&r, &bound::bound_v2(&r, &xb).unwrap()).unwrap();
        let (g, p) = split_by_central(&r, &f, &cf.fhat).unwrap();
        assert_eq!(p.deg(), Some(1));
        assert_eq!(r.mul(&g, &p), f);
        let mut bad = fz.clone();
        bad.factors[0] = x2;
        assert!(!verify_factorization(&r, &x3, &bad));
    }

    #[test]
    fn random_factorizations() {
        for (p, m, s) in [(2u64, 4u32, 1u32), (3, 2, 1), (2, 6, 2), (5, 3, 1)] {
            let r = ring(p, m, s);
            let mut rng = ChaCha8Rng::seed_from_u64(p * 100 + m as u64);
            for _ in 0..25 {
                let n = rng.gen_range(1..9);
                let f = r.random(&mut rng, n, false, false);
                let f = r.scale_left(&r.field().random_nonzero(&mut rng), &r.monic(&f).unwrap_or(r.x()));
                if f.deg() == Some(0) {
                    continue;
                }
                let lens: Vec<usize> = (0..3)
                    .map(|seed| {
                        let fz = factorize(&r, &f, &FactorOptions::with_seed(seed)).unwrap();
                        assert!(verify_factorization(&r, &f, &fz));
                        fz.factors.len()
                    })
                    .collect();
                assert!(lens.iter().all(|&l| l == lens[0]));
                assert_eq!(is_irreducible(&r, &f).unwrap(), lens[0] == 1);
            }
        }
    }

    #[test]
    fn fully_split_central() {
        let r = ring(2, 4, 1);
        let k = r.center().clone();
        let fhat = ComPoly::new(&k, vec![k.one(), k.one(), k.one()]);
        let g = r.lift_central(&fhat);
        let fz = factorize(&r, &g, &FactorOptions { jobs: 2, ..FactorOptions::default() }).unwrap();
        assert_eq!(fz.factors.len(), 4);
        assert!(fz.factors.iter().all(|q| q.deg() == Some(2)));
        assert!(verify_factorization(&r, &g, &fz));
    }
}
