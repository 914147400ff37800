//! Bounds: the monic generator `f*` of the largest twosided ideal inside
//! `R f`, computed from annihilators and left least common multiples.

use crate::error::{Error, Result};
use crate::ffield::cpoly::ComPoly;
use crate::ffield::FFElem;
use crate::field::Field;
use crate::linalg::{Insert, Span};
use crate::skewcore::{Cen, Coef, FiniteSkewRing, SkewPoly, SkewRing, Twist};

/// `f* = d X^m fhat(X^mu)` with `fhat` monic over `K` and `fhat(0) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralForm<E, K> {
    pub m: usize,
    pub d: E,
    pub fhat: ComPoly<K>,
}

/// Which bound algorithm to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Algorithm {
    /// Annihilators of all module generators `c_i X^j`.
    V1,
    /// Restarting loop over the algebra generators `{d, X}`.
    #[default]
    V2,
}

/// `lrem(f d, f) = 0` for every algebra generator `d`.
pub fn is_twosided<T: Twist>(ring: &SkewRing<T>, f: &SkewPoly<Coef<T>>) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    for d in ring.twist().algebra_generators() {
        if !ring.lrem(&ring.mul_const_right(f, &d), f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(ring.lrem(&ring.shift(f, 1), f)?.is_zero())
}

pub fn bound<T: Twist>(ring: &SkewRing<T>, f: &SkewPoly<Coef<T>>, alg: Algorithm) -> Result<SkewPoly<Coef<T>>> {
    match alg {
        Algorithm::V1 => bound_v1(ring, f),
        Algorithm::V2 => bound_v2(ring, f),
    }
}

/// Bound as the left least common multiple of `f` and the annihilators of
/// the module generators `c_i X^j`, visited in lexicographic `(i, j)` order,
/// stopping as soon as the running multiple is twosided.
pub fn bound_v1<T: Twist>(ring: &SkewRing<T>, f: &SkewPoly<Coef<T>>) -> Result<SkewPoly<Coef<T>>> {
    let f = ring.monic(f)?;
    if f.deg() == Some(0) {
        return Ok(ring.one());
    }
    let mu = ring.mu();
    let mut fstar = f.clone();
    for c in ring.twist().module_coefficients() {
        for j in 0..mu {
            if is_twosided(ring, &fstar)? {
                return Ok(fstar);
            }
            let gen = ring.monomial(c.clone(), j);
            let fc = ring.annihilator(&f, &gen)?;
            fstar = ring.llcm(&fc, &fstar)?;
        }
    }
    Ok(fstar)
}

/// Bound by the restarting loop: whenever `lrem(f* d, f*) != 0`, replace `f*`
/// by the left least common multiple with the annihilator of `d + R f*`.
pub fn bound_v2<T: Twist>(ring: &SkewRing<T>, f: &SkewPoly<Coef<T>>) -> Result<SkewPoly<Coef<T>>> {
    let mut fstar = ring.monic(f)?;
    let n = fstar.deg().expect("nonzero");
    if n == 0 {
        return Ok(ring.one());
    }
    let limit = ring.mu() * n;
    let mut gens: Vec<SkewPoly<Coef<T>>> =
        ring.twist().algebra_generators().into_iter().map(|d| ring.constant(d)).collect();
    gens.push(ring.x());
    let mut i = 0;
    while i < gens.len() {
        let prod = ring.mul(&fstar, &gens[i]);
        if ring.lrem(&prod, &fstar)?.is_zero() {
            i += 1;
            continue;
        }
        let fd = ring.annihilator(&fstar, &gens[i])?;
        fstar = ring.llcm(&fd, &fstar)?;
        if fstar.deg().expect("nonzero") > limit {
            return Err(Error::Internal(format!(
                "bound degree {} exceeds mu * deg f = {limit}",
                fstar.deg().unwrap()
            )));
        }
        i = 0;
    }
    Ok(fstar)
}

/// Splits a twosided polynomial as `d X^m fhat(X^mu)`.
pub fn centralize<T: Twist>(
    ring: &SkewRing<T>,
    fstar: &SkewPoly<Coef<T>>,
) -> Result<CentralForm<Coef<T>, Cen<T>>> {
    if !is_twosided(ring, fstar)? {
        return Err(Error::NotTwosided);
    }
    let d = fstar.lc().expect("nonzero").clone();
    let (h, m) = ring.strip_x(&ring.monic(fstar)?)?;
    let k = ring.field();
    let mu = ring.mu();
    let mut out = Vec::with_capacity(h.coeffs().len() / mu + 1);
    for (i, c) in h.coeffs().iter().enumerate() {
        if i % mu != 0 {
            if !k.is_zero(c) {
                return Err(Error::NotInCenter(format!("nonzero coefficient at X^{}", i + m)));
            }
            continue;
        }
        let kc = ring.twist().to_center(c).ok_or_else(|| Error::NotInCenter(k.format(c)))?;
        out.push(kc);
    }
    Ok(CentralForm { m, d, fhat: ComPoly::new(ring.center(), out) })
}

pub fn decentralize<T: Twist>(ring: &SkewRing<T>, cf: &CentralForm<Coef<T>, Cen<T>>) -> SkewPoly<Coef<T>> {
    ring.scale_left(&cf.d, &ring.shift(&ring.lift_central(&cf.fhat), cf.m))
}

/// Monic bound together with its central form.
pub fn central_bound<T: Twist>(
    ring: &SkewRing<T>,
    f: &SkewPoly<Coef<T>>,
    alg: Algorithm,
) -> Result<(SkewPoly<Coef<T>>, CentralForm<Coef<T>, Cen<T>>)> {
    let b = bound(ring, f, alg)?;
    let cf = centralize(ring, &b)?;
    Ok((b, cf))
}

/// Least monic `m(z)` over `K` such that `f` right-divides `m(X^mu)`, found
/// as the first `K`-linear dependency among `lrem(X^(mu i), f)`.
pub fn oracle_min_central(ring: &FiniteSkewRing, f: &SkewPoly<FFElem>) -> Result<ComPoly<FFElem>> {
    let f = ring.monic(f)?;
    let n = f.deg().expect("nonzero");
    let kf = ring.center();
    if n == 0 {
        return Ok(ComPoly::one(kf));
    }
    if ring.field().is_zero(&f.coeffs()[0]) {
        return Err(Error::Precondition("X right-divides f".into()));
    }
    let map = ring.twist().subfield();
    let mu = ring.mu();
    let vector = |r: &SkewPoly<FFElem>| -> Vec<FFElem> {
        let mut v = vec![kf.zero(); mu * n];
        for (j, c) in r.coeffs().iter().enumerate() {
            for (i, x) in map.expand(c).into_iter().enumerate() {
                v[j * mu + i] = x;
            }
        }
        v
    };
    let mut span = Span::new(kf);
    let mut r = ring.one();
    for i in 0..=n {
        if let Insert::Dependent(c) = span.insert(&vector(&r)) {
            let mut coeffs: Vec<FFElem> = c.iter().map(|x| kf.neg(x)).collect();
            coeffs.push(kf.one());
            debug_assert_eq!(coeffs.len(), i + 1);
            return Ok(ComPoly::new(kf, coeffs));
        }
        r = ring.lrem(&ring.shift(&r, mu), &f)?;
    }
    Err(Error::Internal("no central multiple of degree at most deg f".into()))
}
