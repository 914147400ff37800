//! The rational function field `F_q(t)` with the automorphism `t -> c t`.

use rand::Rng;

use crate::arith;
use crate::error::{Error, Result};
use crate::ffield::cpoly::{self, ComPoly};
use crate::ffield::{FFElem, FieldDesc};
use crate::field::Field;
use crate::skewcore::{SkewRing, Twist};

/// A reduced fraction: `gcd(num, den) = 1`, `den` monic, zero is `0/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RatFun {
    num: ComPoly<FFElem>,
    den: ComPoly<FFElem>,
}

impl RatFun {
    pub fn num(&self) -> &ComPoly<FFElem> {
        &self.num
    }

    pub fn den(&self) -> &ComPoly<FFElem> {
        &self.den
    }

    /// `max(deg num, deg den)`, for size diagnostics.
    pub fn height(&self) -> usize {
        self.num.deg().unwrap_or(0).max(self.den.deg().unwrap_or(0))
    }
}

/// `F_q(var)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunctionField {
    base: FieldDesc,
    var: String,
}

impl RationalFunctionField {
    pub fn new(base: &FieldDesc, var: &str) -> Self {
        RationalFunctionField { base: base.clone(), var: var.into() }
    }

    pub fn base(&self) -> &FieldDesc {
        &self.base
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    /// The canonical form of `num / den`.
    pub fn fraction(&self, num: &ComPoly<FFElem>, den: &ComPoly<FFElem>) -> Result<RatFun> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.reduce(num.clone(), den.clone()))
    }

    pub fn from_poly(&self, num: &ComPoly<FFElem>) -> RatFun {
        RatFun { num: num.clone(), den: ComPoly::one(&self.base) }
    }

    pub fn from_base(&self, c: &FFElem) -> RatFun {
        self.from_poly(&ComPoly::constant(&self.base, *c))
    }

    /// The variable itself.
    pub fn gen(&self) -> RatFun {
        self.from_poly(&ComPoly::var(&self.base))
    }

    fn reduce(&self, num: ComPoly<FFElem>, den: ComPoly<FFElem>) -> RatFun {
        let k = &self.base;
        if num.is_zero() {
            return RatFun { num, den: ComPoly::one(k) };
        }
        let g = cpoly::gcd(k, &num, &den);
        let (mut num, mut den) = if cpoly::is_one(k, &g) {
            (num, den)
        } else {
            (cpoly::exact_div(k, &num, &g).expect("gcd"), cpoly::exact_div(k, &den, &g).expect("gcd"))
        };
        let lc = *den.lc().expect("nonzero denominator");
        if !k.is_one(&lc) {
            let inv = k.inv(&lc).expect("nonzero");
            num = cpoly::scale(k, &inv, &num);
            den = cpoly::scale(k, &inv, &den);
        }
        RatFun { num, den }
    }

    /// Substitutes `var -> var^e` in numerator and denominator.
    pub fn inflate(&self, x: &RatFun, e: usize, target: &RationalFunctionField) -> RatFun {
        let spread = |p: &ComPoly<FFElem>| {
            let mut v = vec![FFElem(0); p.coeffs().len().saturating_sub(1) * e + 1];
            for (i, c) in p.coeffs().iter().enumerate() {
                v[i * e] = *c;
            }
            ComPoly::new(&self.base, v)
        };
        target.reduce(spread(&x.num), spread(&x.den))
    }

    /// Substitutes `var^e -> var`, when every exponent is a multiple of `e`.
    pub fn deflate(&self, x: &RatFun, e: usize, target: &RationalFunctionField) -> Option<RatFun> {
        let shrink = |p: &ComPoly<FFElem>| -> Option<ComPoly<FFElem>> {
            let mut v = Vec::new();
            for (i, c) in p.coeffs().iter().enumerate() {
                if i % e == 0 {
                    v.push(*c);
                } else if c.0 != 0 {
                    return None;
                }
            }
            Some(ComPoly::new(&self.base, v))
        };
        Some(target.reduce(shrink(&x.num)?, shrink(&x.den)?))
    }
}

impl Field for RationalFunctionField {
    type Elem = RatFun;

    fn zero(&self) -> RatFun {
        RatFun { num: ComPoly::zero(), den: ComPoly::one(&self.base) }
    }

    fn one(&self) -> RatFun {
        self.from_base(&FFElem(1))
    }

    fn is_zero(&self, x: &RatFun) -> bool {
        x.num.is_zero()
    }

    fn add(&self, x: &RatFun, y: &RatFun) -> RatFun {
        let k = &self.base;
        if x.num.is_zero() {
            return y.clone();
        }
        if y.num.is_zero() {
            return x.clone();
        }
        if x.den == y.den {
            return self.reduce(cpoly::add(k, &x.num, &y.num), x.den.clone());
        }
        let g = cpoly::gcd(k, &x.den, &y.den);
        let xd = cpoly::exact_div(k, &x.den, &g).expect("gcd");
        let yd = cpoly::exact_div(k, &y.den, &g).expect("gcd");
        let num = cpoly::add(k, &cpoly::mul(k, &x.num, &yd), &cpoly::mul(k, &y.num, &xd));
        self.reduce(num, cpoly::mul(k, &x.den, &yd))
    }

    fn sub(&self, x: &RatFun, y: &RatFun) -> RatFun {
        self.add(x, &self.neg(y))
    }

    fn neg(&self, x: &RatFun) -> RatFun {
        RatFun { num: cpoly::neg(&self.base, &x.num), den: x.den.clone() }
    }

    fn mul(&self, x: &RatFun, y: &RatFun) -> RatFun {
        let k = &self.base;
        if x.num.is_zero() || y.num.is_zero() {
            return self.zero();
        }
        let g1 = cpoly::gcd(k, &x.num, &y.den);
        let g2 = cpoly::gcd(k, &y.num, &x.den);
        let div = |a: &ComPoly<FFElem>, g: &ComPoly<FFElem>| {
            if cpoly::is_one(k, g) {
                a.clone()
            } else {
                cpoly::exact_div(k, a, g).expect("gcd")
            }
        };
        let num = cpoly::mul(k, &div(&x.num, &g1), &div(&y.num, &g2));
        let den = cpoly::mul(k, &div(&x.den, &g2), &div(&y.den, &g1));
        RatFun { num, den }
    }

    fn inv(&self, x: &RatFun) -> Option<RatFun> {
        if x.num.is_zero() {
            return None;
        }
        let k = &self.base;
        let inv = k.inv(x.num.lc().expect("nonzero")).expect("nonzero");
        Some(RatFun { num: cpoly::scale(k, &inv, &x.den), den: cpoly::scale(k, &inv, &x.num) })
    }

    fn from_int(&self, n: i64) -> RatFun {
        self.from_base(&self.base.from_int(n))
    }

    fn characteristic(&self) -> u64 {
        self.base.p()
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> RatFun {
        let k = &self.base;
        let num = cpoly::random(k, rng.gen_range(0..4), rng);
        let mut den = cpoly::random(k, rng.gen_range(1..4), rng);
        if den.is_zero() {
            den = ComPoly::one(k);
        }
        self.reduce(num, den)
    }

    fn format(&self, x: &RatFun) -> String {
        let k = &self.base;
        let n = cpoly::format(k, &x.num, &self.var);
        if cpoly::is_one(k, &x.den) {
            n
        } else {
            format!("(({})/({}))", n, cpoly::format(k, &x.den, &self.var))
        }
    }
}

/// `sigma(t) = c t` on `F_q(t)`, fixing `F_q`; `mu` is the order of `c`.
/// The fixed field `F_q(t^mu)` is represented as `F_q(s)` with `s = t^mu`.
#[derive(Clone, Debug)]
pub struct ScalingTwist {
    field: RationalFunctionField,
    center: RationalFunctionField,
    c: FFElem,
    mu: usize,
    c_pows: Vec<FFElem>,
}

impl ScalingTwist {
    pub fn new(base: &FieldDesc, c: FFElem) -> Result<Self> {
        if c.0 == 0 {
            return Err(Error::InvalidField("sigma(t) = 0 t is not an automorphism".into()));
        }
        let mu = multiplicative_order(base, &c).expect("nonzero") as usize;
        let c_pows = (0..mu as u64).map(|i| base.pow(&c, i)).collect();
        Ok(ScalingTwist {
            field: RationalFunctionField::new(base, "t"),
            center: RationalFunctionField::new(base, "s"),
            c,
            mu,
            c_pows,
        })
    }

    pub fn c(&self) -> FFElem {
        self.c
    }

    fn scale_poly(&self, p: &ComPoly<FFElem>, e: usize) -> ComPoly<FFElem> {
        let k = self.field.base();
        let v = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, x)| k.mul(x, &self.c_pows[(e * i) % self.mu]))
            .collect();
        ComPoly::new(k, v)
    }
}

impl Twist for ScalingTwist {
    type F = RationalFunctionField;
    type K = RationalFunctionField;

    fn field(&self) -> &RationalFunctionField {
        &self.field
    }

    fn center(&self) -> &RationalFunctionField {
        &self.center
    }

    fn mu(&self) -> usize {
        self.mu
    }

    fn sigma_pow(&self, x: &RatFun, e: usize) -> RatFun {
        let e = e % self.mu;
        if e == 0 || x.num.is_zero() {
            return x.clone();
        }
        let k = self.field.base();
        let num = self.scale_poly(&x.num, e);
        let den = self.scale_poly(&x.den, e);
        let inv = k.inv(den.lc().expect("nonzero")).expect("nonzero");
        RatFun { num: cpoly::scale(k, &inv, &num), den: cpoly::scale(k, &inv, &den) }
    }

    fn to_center(&self, x: &RatFun) -> Option<RatFun> {
        self.field.deflate(x, self.mu, &self.center)
    }

    fn from_center(&self, k: &RatFun) -> RatFun {
        self.center.inflate(k, self.mu, &self.field)
    }

    fn algebra_generators(&self) -> Vec<RatFun> {
        vec![self.field.gen()]
    }

    fn module_coefficients(&self) -> Vec<RatFun> {
        let t = self.field.gen();
        (0..self.mu as u64).map(|i| self.field.pow(&t, i)).collect()
    }

    fn literal(&self) -> String {
        let base = self.field.base();
        let c = base.format(&self.c);
        let c = if c.contains(' ') { format!("({c})") } else { c };
        format!("{}(t); sigma: t -> {}*t", base.literal(), c)
    }

    fn center_var(&self) -> &str {
        "s"
    }
}

/// `F_q(t)[X; t -> c t]`.
pub fn rat_skew_ring(base: &FieldDesc, c: FFElem) -> Result<SkewRing<ScalingTwist>> {
    Ok(SkewRing::new(ScalingTwist::new(base, c)?))
}

/// Convenience check used by the K-membership tests: `sigma(x) = x`.
pub fn is_invariant(twist: &ScalingTwist, x: &RatFun) -> bool {
    twist.sigma_pow(x, 1) == *x
}

/// Order of `c` in the multiplicative group of a finite field.
pub fn multiplicative_order(base: &FieldDesc, c: &FFElem) -> Option<u64> {
    if c.0 == 0 {
        return None;
    }
    Some(arith::order_dividing(base.q() - 1, |e| base.is_one(&base.pow(c, e))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f16() -> FieldDesc {
        FieldDesc::new(2, 4).unwrap()
    }

    #[test]
    fn canonical_form() {
        let f2 = FieldDesc::prime(2).unwrap();
        let q = RationalFunctionField::new(&f2, "t");
        let p = |v: &[u64]| ComPoly::new(&f2, v.iter().map(|&c| FFElem(c)).collect());
        let x = q.fraction(&p(&[0, 1, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(x, q.gen());
        assert!(q.fraction(&p(&[1]), &p(&[])).is_err());
        assert_eq!(q.format(&q.fraction(&p(&[1]), &p(&[1, 1])).unwrap()), "((1)/(t + 1))");
    }

    #[test]
    fn field_axioms() {
        let q = RationalFunctionField::new(&f16(), "t");
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..2000 {
            let (x, y, z) = (q.random(&mut rng), q.random(&mut rng), q.random(&mut rng));
            assert_eq!(q.mul(&x, &q.add(&y, &z)), q.add(&q.mul(&x, &y), &q.mul(&x, &z)));
            assert_eq!(q.add(&q.add(&x, &y), &z), q.add(&x, &q.add(&y, &z)));
            if !q.is_zero(&x) {
                assert_eq!(q.mul(&x, &q.inv(&x).unwrap()), q.one());
            }
            let s = q.add(&x, &y);
            assert!(s.den.lc().is_some_and(|c| c.0 == 1));
            assert!(cpoly::is_one(q.base(), &cpoly::gcd(q.base(), &s.num, &s.den)) || s.num.is_zero());
        }
    }

    #[test]
    fn scaling_twist() {
        let k = f16();
        let a5 = k.pow(&k.gen(), 5);
        let tw = ScalingTwist::new(&k, a5).unwrap();
        assert_eq!(tw.mu(), 3);
        let q = tw.field().clone();
        let t = q.gen();
        assert_eq!(tw.sigma_pow(&t, 1), q.mul(&q.from_base(&a5), &t));
        let t3 = q.pow(&t, 3);
        assert_eq!(tw.sigma_pow(&t3, 1), t3);
        assert!(is_invariant(&tw, &t3));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let x = q.random(&mut rng);
            assert_eq!(tw.sigma_pow(&x, 3), x);
            let y = q.random(&mut rng);
            assert_eq!(tw.sigma_pow(&q.mul(&x, &y), 2), q.mul(&tw.sigma_pow(&x, 2), &tw.sigma_pow(&y, 2)));
        }
        let s = tw.center().gen();
        assert_eq!(tw.from_center(&s), t3);
        assert_eq!(tw.to_center(&t3), Some(s));
        assert_eq!(tw.to_center(&t), None);
        let one = ScalingTwist::new(&k, FFElem(1)).unwrap();
        assert_eq!(one.mu(), 1);
        assert!(ScalingTwist::new(&k, FFElem(0)).is_err());
        assert_eq!(multiplicative_order(&k, &a5), Some(3));
    }
}
