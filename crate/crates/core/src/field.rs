//! Field abstractions shared by every coefficient domain.

use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng;

/// A commutative field with exact arithmetic.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;
    /// Image of an integer under the canonical map from Z.
    fn from_int(&self, n: i64) -> Self::Elem;
    fn characteristic(&self) -> u64;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// Human-readable form, polynomial in the generator(s).
    fn format(&self, x: &Self::Elem) -> String;

    fn is_one(&self, x: &Self::Elem) -> bool {
        *x == self.one()
    }

    fn div(&self, x: &Self::Elem, y: &Self::Elem) -> Option<Self::Elem> {
        self.inv(y).map(|iy| self.mul(x, &iy))
    }

    fn pow(&self, x: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = x.clone();
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

    /// `x + y*z`, the inner step of every dense product.
    fn mul_add(&self, x: &Self::Elem, y: &Self::Elem, z: &Self::Elem) -> Self::Elem {
        self.add(x, &self.mul(y, z))
    }

    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let x = self.random(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }
}

/// A finite field of order `characteristic()^degree()`.
pub trait FiniteField: Field {
    /// Degree over the prime field.
    fn degree(&self) -> u32;

    /// `x^(p^e)`.
    fn frobenius(&self, x: &Self::Elem, e: u32) -> Self::Elem {
        let p = self.characteristic();
        let mut y = x.clone();
        for _ in 0..e % self.degree() {
            y = self.pow(&y, p);
        }
        y
    }

    /// Order of the field when it fits in 64 bits.
    fn order(&self) -> Option<u64> {
        self.characteristic().checked_pow(self.degree())
    }

    /// The `p`-th root, inverse of `frobenius(x, 1)`.
    fn pth_root(&self, x: &Self::Elem) -> Self::Elem {
        self.frobenius(x, self.degree() - 1)
    }

    /// Element number `index` in a fixed enumeration, for exhaustive tests.
    fn element(&self, index: u64) -> Self::Elem;
}
