//! Simple extensions `B[z]/(pi)` of a finite field by an irreducible polynomial.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FiniteField};

use super::cpoly::{self, ComPoly};

/// The field `B[z]/(pi)`; elements are coefficient vectors of length `deg pi`.
#[derive(Clone, Debug)]
pub struct ExtensionField<B: FiniteField> {
    base: B,
    modulus: ComPoly<B::Elem>,
    var: String,
}

impl<B: FiniteField> ExtensionField<B> {
    /// Fails when `pi` is not irreducible of positive degree.
    pub fn new(base: &B, pi: &ComPoly<B::Elem>, var: &str) -> Result<Self> {
        if !cpoly::cpoly_is_irreducible(base, pi)? {
            return Err(Error::InvalidField("extension polynomial is reducible".into()));
        }
        Ok(ExtensionField { base: base.clone(), modulus: cpoly::monic(base, pi), var: var.into() })
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn modulus(&self) -> &ComPoly<B::Elem> {
        &self.modulus
    }

    /// Degree over the base field.
    pub fn rel_degree(&self) -> usize {
        self.modulus.deg().unwrap_or(0)
    }

    pub fn embed(&self, c: &B::Elem) -> Vec<B::Elem> {
        let mut v = vec![self.base.zero(); self.rel_degree()];
        v[0] = c.clone();
        v
    }

    /// Residue class of a polynomial over the base.
    pub fn from_poly(&self, a: &ComPoly<B::Elem>) -> Vec<B::Elem> {
        let r = cpoly::rem(&self.base, a, &self.modulus);
        let mut v = r.into_coeffs();
        v.resize(self.rel_degree(), self.base.zero());
        v
    }

    pub fn to_poly(&self, x: &[B::Elem]) -> ComPoly<B::Elem> {
        ComPoly::new(&self.base, x.to_vec())
    }

    /// The class of `z`.
    pub fn generator(&self) -> Vec<B::Elem> {
        self.from_poly(&ComPoly::var(&self.base))
    }
}

impl<B: FiniteField> Field for ExtensionField<B> {
    type Elem = Vec<B::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base.zero(); self.rel_degree()]
    }

    fn one(&self) -> Self::Elem {
        self.embed(&self.base.one())
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        x.iter().all(|c| self.base.is_zero(c))
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        x.iter().zip(y).map(|(a, b)| self.base.add(a, b)).collect()
    }

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        x.iter().zip(y).map(|(a, b)| self.base.sub(a, b)).collect()
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        x.iter().map(|a| self.base.neg(a)).collect()
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let k = &self.base;
        let n = self.rel_degree();
        if n == 1 {
            return vec![k.mul(&x[0], &y[0])];
        }
        let mut r = vec![k.zero(); 2 * n - 1];
        for (i, a) in x.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                r[i + j] = k.mul_add(&r[i + j], a, b);
            }
        }
        let md = self.modulus.coeffs();
        for deg in (n..2 * n - 1).rev() {
            let c = r[deg].clone();
            if k.is_zero(&c) {
                continue;
            }
            for (j, mj) in md.iter().enumerate().take(n) {
                let idx = deg - n + j;
                r[idx] = k.sub(&r[idx], &k.mul(&c, mj));
            }
        }
        r.truncate(n);
        r
    }

    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(x) {
            return None;
        }
        let (g, s, _) = cpoly::ext_gcd(&self.base, &self.to_poly(x), &self.modulus);
        debug_assert!(cpoly::is_one(&self.base, &g));
        Some(self.from_poly(&s))
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.embed(&self.base.from_int(n))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        (0..self.rel_degree()).map(|_| self.base.random(rng)).collect()
    }

    fn format(&self, x: &Self::Elem) -> String {
        cpoly::format(&self.base, &self.to_poly(x), &self.var)
    }
}

impl<B: FiniteField> FiniteField for ExtensionField<B> {
    fn degree(&self) -> u32 {
        self.base.degree() * self.rel_degree() as u32
    }

    fn element(&self, mut index: u64) -> Self::Elem {
        let q = self.base.order().expect("enumeration needs a word-sized base");
        (0..self.rel_degree())
            .map(|_| {
                let c = self.base.element(index % q);
                index /= q;
                c
            })
            .collect()
    }
}
