//! The skew polynomial ring `D[X; sigma]` with the product rule
//! `X c = sigma(c) X`, left Euclidean division and the extended left
//! Euclidean algorithm.

pub mod twist;

use rand::Rng;

use crate::error::{Error, Result};
use crate::ffield::cpoly::{self, ComPoly};
use crate::field::Field;

pub use twist::{Cen, Coef, FrobeniusTwist, Twist};

/// A left polynomial `sum c_i X^i`. The zero polynomial has no coefficients;
/// otherwise the top coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SkewPoly<E> {
    coeffs: Vec<E>,
}

impl<E> SkewPoly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

/// Output of the extended left Euclidean algorithm on `(f, g)`:
/// `rgcd = u f + v g` and `llcm = u1 f = -v1 g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leea<E> {
    pub rgcd: SkewPoly<E>,
    pub u: SkewPoly<E>,
    pub v: SkewPoly<E>,
    pub u1: SkewPoly<E>,
    pub v1: SkewPoly<E>,
    pub llcm: SkewPoly<E>,
}

/// `D[X; sigma]` for a twist `sigma`.
#[derive(Clone, Debug)]
pub struct SkewRing<T: Twist> {
    twist: T,
}

/// Lazily computed images `sigma^r(g)` for `r < mu`.
struct SigmaImages<'a, T: Twist> {
    twist: &'a T,
    base: &'a [Coef<T>],
    cache: Vec<Option<Vec<Coef<T>>>>,
}

impl<'a, T: Twist> SigmaImages<'a, T> {
    fn new(twist: &'a T, base: &'a [Coef<T>]) -> Self {
        SigmaImages { twist, base, cache: vec![None; twist.mu()] }
    }

    fn get(&mut self, e: usize) -> &[Coef<T>] {
        let r = e % self.cache.len();
        if r == 0 {
            return self.base;
        }
        let (twist, base) = (self.twist, self.base);
        self.cache[r].get_or_insert_with(|| base.iter().map(|c| twist.sigma_pow(c, r)).collect())
    }
}

impl<T: Twist> SkewRing<T> {
    pub fn new(twist: T) -> Self {
        SkewRing { twist }
    }

    pub fn twist(&self) -> &T {
        &self.twist
    }

    pub fn field(&self) -> &T::F {
        self.twist.field()
    }

    pub fn center(&self) -> &T::K {
        self.twist.center()
    }

    pub fn mu(&self) -> usize {
        self.twist.mu()
    }

    /// Rank over the center, `mu^2` for the rings supported here.
    pub fn rank(&self) -> usize {
        self.mu() * self.mu()
    }

    pub fn poly(&self, mut coeffs: Vec<Coef<T>>) -> SkewPoly<Coef<T>> {
        let k = self.field();
        while coeffs.last().is_some_and(|c| k.is_zero(c)) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn zero(&self) -> SkewPoly<Coef<T>> {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn one(&self) -> SkewPoly<Coef<T>> {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: Coef<T>) -> SkewPoly<Coef<T>> {
        self.poly(vec![c])
    }

    /// `c X^n`.
    pub fn monomial(&self, c: Coef<T>, n: usize) -> SkewPoly<Coef<T>> {
        let mut v = vec![self.field().zero(); n];
        v.push(c);
        self.poly(v)
    }

    pub fn x(&self) -> SkewPoly<Coef<T>> {
        self.monomial(self.field().one(), 1)
    }

    pub fn is_one(&self, f: &SkewPoly<Coef<T>>) -> bool {
        f.coeffs.len() == 1 && self.field().is_one(&f.coeffs[0])
    }

    pub fn add(&self, f: &SkewPoly<Coef<T>>, g: &SkewPoly<Coef<T>>) -> SkewPoly<Coef<T>> {
        let k = self.field();
        let (long, short) = if f.coeffs.len() >= g.coeffs.len() { (f, g) } else { (g, f) };
        let mut v = long.coeffs.clone();
        for (x, y) in v.iter_mut().zip(&short.coeffs) {
            *x = k.add(x, y);
        }
        self.poly(v)
    }

    pub fn neg(&self, f: &SkewPoly<Coef<T>>) -> SkewPoly<Coef<T>> {
        let k = self.field();
        SkewPoly { coeffs: f.coeffs.iter().map(|c| k.neg(c)).collect() }
    }

    pub fn sub(&self, f: &SkewPoly<Coef<T>>, g: &SkewPoly<Coef<T>>) -> SkewPoly<Coef<T>> {
        self.add(f, &self.neg(g))
    }

    /// `c f`, scaling every coefficient on the left.
    pub fn scale_left(&self, c: &Coef<T>, f: &SkewPoly<Coef<T>>) -> SkewPoly<Coef<T>> {
        let k = self.field();
        self.poly(f.coeffs.iter().map(|x| k.mul(c, x)).collect())
    }

    /// `f c` for a constant `c`: coefficient `i` becomes `f_i sigma^i(c)`.
    pub fn mul_const_right(&self, f: &SkewPoly<Coef<T>>, c: &Coef<T>) -> SkewPoly<Coef<T>> {
        let k = self.field();
        let imgs: Vec<Coef<T>> = (0..self.mu()).map(|r| self.twist.sigma_pow(c, r)).collect();
        self.poly(
            f.coeffs.iter().enumerate().map(|(i, x)| k.mul(x, &imgs[i % imgs.len()])).collect(),
        )
    }

    /// `f X^n`.
    pub fn shift(&self, f: &SkewPoly<Coef<T>>, n: usize) -> SkewPoly<Coef<T>> {
        if f.is_zero() {
            return self.zero();
        }
        let mut v = vec![self.field().zero(); n];
        v.extend(f.coeffs.iter().cloned());
        SkewPoly { coeffs: v }
    }

    /// The Ore product.
    pub fn mul(&self, f: &SkewPoly<Coef<T>>, g: &SkewPoly<Coef<T>>) -> SkewPoly<Coef<T>> {
        if f.is_zero() || g.is_zero() {
            return self.zero();
        }
        let k = self.field();
        let mut out = vec![k.zero(); f.coeffs.len() + g.coeffs.len() - 1];
        let mut imgs = SigmaImages::new(&self.twist, &g.coeffs);
        for (i, fi) in f.coeffs.iter().enumerate() {
            if k.is_zero(fi) {
                continue;
            }
            let gi = imgs.get(i);
            for (o, gj) in out[i..].iter_mut().zip(gi) {
                *o = k.mul_add(o, fi, gj);
            }
        }
        self.poly(out)
    }

    pub fn pow(&self, f: &SkewPoly<Coef<T>>, mut e: u64) -> SkewPoly<Coef<T>> {
        let mut base = f.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Left division: `f = c g + r` with `deg r < deg g`.
    pub fn ldivrem(
        &self,
        f: &SkewPoly<Coef<T>>,
        g: &SkewPoly<Coef<T>>,
    ) -> Result<(SkewPoly<Coef<T>>, SkewPoly<Coef<T>>)> {
        let dg = g.deg().ok_or(Error::DivisionByZero)?;
        let Some(df) = f.deg() else { return Ok((self.zero(), self.zero())) };
        if df < dg {
            return Ok((self.zero(), f.clone()));
        }
        let k = self.field();
        let inv = k.inv(&g.coeffs[dg]).ok_or(Error::DivisionByZero)?;
        let inv_imgs: Vec<Coef<T>> = (0..self.mu()).map(|r| self.twist.sigma_pow(&inv, r)).collect();
        let mut imgs = SigmaImages::new(&self.twist, &g.coeffs);
        let mut r = f.coeffs.clone();
        let mut q = vec![k.zero(); df - dg + 1];
        for s in (0..=df - dg).rev() {
            if k.is_zero(&r[s + dg]) {
                continue;
            }
            let a = k.mul(&r[s + dg], &inv_imgs[s % inv_imgs.len()]);
            let gs = imgs.get(s);
            for (x, gj) in r[s..s + dg].iter_mut().zip(gs) {
                if !k.is_zero(gj) {
                    *x = k.sub(x, &k.mul(&a, gj));
                }
            }
            r[s + dg] = k.zero();
            q[s] = a;
        }
        r.truncate(dg);
        Ok((self.poly(q), self.poly(r)))
    }

    pub fn lrem(&self, f: &SkewPoly<Coef<T>>, g: &SkewPoly<Coef<T>>) -> Result<SkewPoly<Coef<T>>> {
        Ok(self.ldivrem(f, g)?.1)
    }

    /// The exact left quotient `c` with `f = c g`.
    pub fn lquot(&self, f: &SkewPoly<Coef<T>>, g: &SkewPoly<Coef<T>>) -> Result<SkewPoly<Coef<T>>> {
        let (c, r) = self.ldivrem(f, g)?;
        if r.is_zero() {
            Ok(c)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn right_divides(&self, g: &SkewPoly<Coef<T>>, f: &SkewPoly<Coef<T>>) -> Result<bool> {
        Ok(self.lrem(f, g)?.is_zero())
    }

    /// `lc(f)^{-1} f`.
    pub fn monic(&self, f: &SkewPoly<Coef<T>>) -> Result<SkewPoly<Coef<T>>> {
        let lc = f.lc().ok_or(Error::ZeroPolynomial)?;
        let inv = self.field().inv(lc).ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale_left(&inv, f))
    }

    pub fn is_monic(&self, f: &SkewPoly<Coef<T>>) -> bool {
        f.lc().is_some_and(|c| self.field().is_one(c))
    }

    /// The extended left Euclidean algorithm.
    pub fn leea(&self, f: &SkewPoly<Coef<T>>, g: &SkewPoly<Coef<T>>) -> Result<Leea<Coef<T>>> {
        if f.is_zero() || g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut f0, mut f1) = (f.clone(), g.clone());
        let (mut u0, mut u1) = (self.one(), self.zero());
        let (mut v0, mut v1) = (self.zero(), self.one());
        while !f1.is_zero() {
            let (c, r) = self.ldivrem(&f0, &f1)?;
            let u = self.sub(&u0, &self.mul(&c, &u1));
            let v = self.sub(&v0, &self.mul(&c, &v1));
            f0 = std::mem::replace(&mut f1, r);
            u0 = std::mem::replace(&mut u1, u);
            v0 = std::mem::replace(&mut v1, v);
        }
        let k = self.field();
        let inv = k.inv(f0.lc().expect("nonzero")).expect("nonzero");
        let rgcd = self.scale_left(&inv, &f0);
        let u = self.scale_left(&inv, &u0);
        let v = self.scale_left(&inv, &v0);
        let llcm = self.monic(&self.mul(&u1, f))?;
        Ok(Leea { rgcd, u, v, u1, v1, llcm })
    }

    /// Monic right greatest common divisor; `rgcd(0, 0)` is an error.
    pub fn rgcd(&self, f: &SkewPoly<Coef<T>>, g: &SkewPoly<Coef<T>>) -> Result<SkewPoly<Coef<T>>> {
        if f.is_zero() && g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = self.lrem(&a, &b)?;
            a = std::mem::replace(&mut b, r);
        }
        self.monic(&a)
    }

    /// The cofactor `v1` of the extended algorithm on `(f, h)`, which
    /// satisfies `v1 h in R f` and generates the annihilator of `h + R f`.
    fn left_cofactor(&self, f: &SkewPoly<Coef<T>>, h: &SkewPoly<Coef<T>>) -> Result<SkewPoly<Coef<T>>> {
        let (mut f0, mut f1) = (f.clone(), h.clone());
        let (mut v0, mut v1) = (self.zero(), self.one());
        while !f1.is_zero() {
            let (c, r) = self.ldivrem(&f0, &f1)?;
            let v = self.sub(&v0, &self.mul(&c, &v1));
            f0 = std::mem::replace(&mut f1, r);
            v0 = std::mem::replace(&mut v1, v);
        }
        Ok(v1)
    }

    /// Monic left least common multiple.
    pub fn llcm(&self, f: &SkewPoly<Coef<T>>, g: &SkewPoly<Coef<T>>) -> Result<SkewPoly<Coef<T>>> {
        if f.is_zero() || g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let v1 = self.left_cofactor(f, g)?;
        self.monic(&self.mul(&v1, g))
    }

    /// Monic generator `f_h` of the annihilator of `h + R f`, so that
    /// `f_h h = llcm(f, h)` up to a unit. `h` is first reduced modulo `f`;
    /// when it vanishes the annihilator is the whole ring.
    pub fn annihilator(&self, f: &SkewPoly<Coef<T>>, h: &SkewPoly<Coef<T>>) -> Result<SkewPoly<Coef<T>>> {
        if f.is_zero() || h.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let h = self.lrem(h, f)?;
        if h.is_zero() {
            return Ok(self.one());
        }
        let v1 = self.left_cofactor(f, &h)?;
        self.monic(&v1)
    }

    /// `f = g X^m` with the constant coefficient of `g` nonzero.
    pub fn strip_x(&self, f: &SkewPoly<Coef<T>>) -> Result<(SkewPoly<Coef<T>>, usize)> {
        let k = self.field();
        let m = f.coeffs.iter().position(|c| !k.is_zero(c)).ok_or(Error::ZeroPolynomial)?;
        Ok((SkewPoly { coeffs: f.coeffs[m..].to_vec() }, m))
    }

    /// `sum from_center(c_l) X^(mu l)` for a polynomial in `z` over `K`.
    pub fn lift_central(&self, c: &ComPoly<Cen<T>>) -> SkewPoly<Coef<T>> {
        let k = self.field();
        let mu = self.mu();
        let mut v = vec![k.zero(); c.coeffs().len().saturating_sub(1) * mu + 1];
        for (l, cl) in c.coeffs().iter().enumerate() {
            v[l * mu] = self.twist.from_center(cl);
        }
        self.poly(v)
    }

    /// Random polynomial of degree exactly `n`.
    pub fn random<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        n: usize,
        monic: bool,
        nonzero_constant: bool,
    ) -> SkewPoly<Coef<T>> {
        let k = self.field();
        let mut v: Vec<Coef<T>> = (0..=n).map(|_| k.random(rng)).collect();
        v[n] = if monic { k.one() } else { k.random_nonzero(rng) };
        if nonzero_constant && n > 0 {
            v[0] = k.random_nonzero(rng);
        }
        self.poly(v)
    }

    /// Text form: descending powers of `X`, compound coefficients in parentheses.
    pub fn format(&self, f: &SkewPoly<Coef<T>>) -> String {
        let k = self.field();
        cpoly::format_terms(
            f.coeffs.iter().enumerate().rev().filter(|(_, c)| !k.is_zero(c)).map(|(i, c)| {
                (i, if k.is_one(c) { None } else { Some(k.format(c)) })
            }),
            "X",
        )
    }
}

/// The ring `F_{p^m}[X; x -> x^(p^s)]`.
pub type FiniteSkewRing = SkewRing<FrobeniusTwist>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{FFElem, FieldDesc};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f4_ring() -> (FiniteSkewRing, FFElem) {
        let f = FieldDesc::new(2, 2).unwrap().renamed("b");
        let b = f.gen();
        (SkewRing::new(FrobeniusTwist::new(&f, 1).unwrap()), b)
    }

    #[test]
    fn product_rule() {
        let (r, b) = f4_ring();
        let k = r.field().clone();
        let b1 = k.add(&b, &k.one());
        assert_eq!(r.mul(&r.x(), &r.constant(b)), r.monomial(b1, 1));
        let x1 = r.add(&r.x(), &r.one());
        let sq = r.mul(&x1, &x1);
        assert_eq!(sq, r.add(&r.monomial(k.one(), 2), &r.one()));
        let (q, rem) = r.ldivrem(&sq, &x1).unwrap();
        assert_eq!((q, rem), (x1.clone(), r.zero()));
        assert_eq!(r.add(&x1, &r.add(&r.x(), &r.constant(b))), r.constant(b1));
    }

    #[test]
    fn euclid_small_cases() {
        let (r, b) = f4_ring();
        let x1 = r.add(&r.x(), &r.one());
        let xb = r.add(&r.x(), &r.constant(b));
        let l = r.leea(&x1, &xb).unwrap();
        assert!(r.is_one(&l.rgcd));
        assert_eq!(l.llcm.deg(), Some(2));
        assert_eq!(r.mul(&l.u1, &x1), r.neg(&r.mul(&l.v1, &xb)));
        assert_eq!(r.llcm(&x1, &r.one()).unwrap(), x1);
        let (g, m) = r.strip_x(&r.mul(&x1, &r.monomial(r.field().one(), 2))).unwrap();
        assert_eq!((g, m), (x1.clone(), 2));
        let bx = r.scale_left(&b, &x1);
        assert_eq!(r.monic(&bx).unwrap(), x1);
    }

    #[test]
    fn degree_law_and_bezout() {
        let f = FieldDesc::new(2, 6).unwrap();
        let r = SkewRing::new(FrobeniusTwist::new(&f, 2).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let (df, dg) = (rng.gen_range(0..7), rng.gen_range(0..7));
            let f1 = r.random(&mut rng, df, false, false);
            let g1 = r.random(&mut rng, dg, false, false);
            let p = r.mul(&f1, &g1);
            assert_eq!(p.deg().unwrap(), f1.deg().unwrap() + g1.deg().unwrap());
            let want = f.mul(f1.lc().unwrap(), &r.twist().sigma_pow(g1.lc().unwrap(), f1.deg().unwrap()));
            assert_eq!(p.lc().unwrap(), &want);
            let l = r.leea(&f1, &g1).unwrap();
            assert_eq!(r.add(&r.mul(&l.u, &f1), &r.mul(&l.v, &g1)), l.rgcd);
            assert!(r.right_divides(&l.rgcd, &f1).unwrap());
            assert!(r.right_divides(&l.rgcd, &g1).unwrap());
            assert!(r.right_divides(&f1, &l.llcm).unwrap());
            assert!(r.right_divides(&g1, &l.llcm).unwrap());
            assert_eq!(
                l.llcm.deg().unwrap() + l.rgcd.deg().unwrap(),
                f1.deg().unwrap() + g1.deg().unwrap()
            );
            assert_eq!(r.llcm(&f1, &g1).unwrap(), l.llcm);
            assert_eq!(r.rgcd(&f1, &g1).unwrap(), l.rgcd);
        }
    }
}
