//! The simple algebra `A = R / R f*` over `K_f = K[z]/(fhat)` for a prime
//! bound `f* = fhat(X^mu)`, its idempotents and corners, and a Las Vegas
//! search for zero divisors.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::derive_seed;
use crate::error::{Error, Result};
use crate::ffield::cpoly::{self, ComPoly};
use crate::ffield::ext::ExtensionField;
use crate::ffield::{FFElem, FieldDesc};
use crate::field::Field;
use crate::linalg::{self, Insert, Span};
use crate::skewcore::{FiniteSkewRing, SkewPoly, Twist};

/// The residue field `K[z]/(fhat)`.
pub type Kf = ExtensionField<FieldDesc>;
/// An element of [`Kf`].
pub type KfElem = Vec<FFElem>;

/// Default number of sampling rounds in [`find_zero_divisor`].
pub const MAX_TRIALS: usize = 200;

/// Fails when `fhat` is reducible.
pub fn kf_make(k: &FieldDesc, fhat: &ComPoly<FFElem>) -> Result<Kf> {
    ExtensionField::new(k, fhat, "z")
}

/// A finite-dimensional associative algebra with unit over `K_f`, given by
/// sparse structure constants on a fixed basis.
#[derive(Clone, Debug)]
pub struct Algebra {
    kf: Kf,
    dim: usize,
    /// Entry `i * dim + j` lists the nonzero coordinates of `u_i u_j`.
    table: Vec<Vec<(usize, KfElem)>>,
    one: Vec<KfElem>,
}

impl Algebra {
    pub fn kf(&self) -> &Kf {
        &self.kf
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn zero(&self) -> Vec<KfElem> {
        vec![self.kf.zero(); self.dim]
    }

    pub fn one(&self) -> Vec<KfElem> {
        self.one.clone()
    }

    pub fn basis(&self, k: usize) -> Vec<KfElem> {
        let mut v = self.zero();
        v[k] = self.kf.one();
        v
    }

    pub fn is_zero(&self, x: &[KfElem]) -> bool {
        x.iter().all(|c| self.kf.is_zero(c))
    }

    pub fn add(&self, x: &[KfElem], y: &[KfElem]) -> Vec<KfElem> {
        x.iter().zip(y).map(|(a, b)| self.kf.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[KfElem], y: &[KfElem]) -> Vec<KfElem> {
        x.iter().zip(y).map(|(a, b)| self.kf.sub(a, b)).collect()
    }

    pub fn scale(&self, c: &KfElem, x: &[KfElem]) -> Vec<KfElem> {
        x.iter().map(|a| self.kf.mul(c, a)).collect()
    }

    pub fn mul(&self, x: &[KfElem], y: &[KfElem]) -> Vec<KfElem> {
        let k = &self.kf;
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if k.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if k.is_zero(yj) {
                    continue;
                }
                let c = k.mul(xi, yj);
                for (t, s) in &self.table[i * self.dim + j] {
                    out[*t] = k.mul_add(&out[*t], &c, s);
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.table[i * self.dim + j] == self.table[j * self.dim + i]))
    }

    /// `m(x)` by Horner's rule.
    pub fn eval(&self, m: &ComPoly<KfElem>, x: &[KfElem]) -> Vec<KfElem> {
        let mut acc = self.zero();
        for c in m.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            acc = self.add(&acc, &self.scale(c, &self.one));
        }
        acc
    }

    /// The monic generator of `{m : m(x) = 0}`, found as the first linear
    /// dependency among `1, x, x^2, ...`.
    pub fn minimal_polynomial(&self, x: &[KfElem]) -> ComPoly<KfElem> {
        let k = &self.kf;
        let mut span = Span::new(k);
        let mut p = self.one();
        loop {
            if let Insert::Dependent(c) = span.insert(&p) {
                let mut coeffs: Vec<KfElem> = c.iter().map(|v| k.neg(v)).collect();
                coeffs.push(k.one());
                return ComPoly::new(k, coeffs);
            }
            p = self.mul(&p, x);
        }
    }

    fn from_products(kf: &Kf, dim: usize, one: Vec<KfElem>, prod: impl Fn(usize, usize) -> Vec<KfElem>) -> Self {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = prod(i, j);
                table.push(v.into_iter().enumerate().filter(|(_, c)| !kf.is_zero(c)).collect());
            }
        }
        Algebra { kf: kf.clone(), dim, table, one }
    }
}

/// `R / R lift(fhat)` as an algebra over `K_f` with basis `a^i X^j`,
/// `0 <= i, j < mu`, stored at index `i * mu + j`.
#[derive(Clone, Debug)]
pub struct StructAlgebra<'a> {
    ring: &'a FiniteSkewRing,
    fstar: SkewPoly<FFElem>,
    n: usize,
    alg: Algebra,
}

/// Structure constants of `R / R lift(fhat)`; fails for reducible `fhat`.
pub fn alg_build<'a>(ring: &'a FiniteSkewRing, fhat: &ComPoly<FFElem>) -> Result<StructAlgebra<'a>> {
    let kf = kf_make(ring.center(), fhat)?;
    let fhat = cpoly::monic(ring.center(), fhat);
    let n = fhat.deg().expect("irreducible");
    let mu = ring.mu();
    let map = ring.twist().subfield();
    let field = ring.field();
    let apow = map.a_powers();
    let dim = mu * mu;
    let k = ring.center();
    let prod = |u: usize, v: usize| {
        let (i1, j1, i2, j2) = (u / mu, u % mu, v / mu, v % mu);
        let c = field.mul(&apow[i1], &ring.twist().sigma_pow(&apow[i2], j1));
        let (j, carry) = ((j1 + j2) % mu, (j1 + j2) / mu);
        let mut out = vec![kf.zero(); dim];
        for (i, kap) in map.expand(&c).into_iter().enumerate() {
            if !k.is_zero(&kap) {
                out[i * mu + j] = kf.from_poly(&ComPoly::monomial(k, kap, carry));
            }
        }
        out
    };
    let mut one = vec![kf.zero(); dim];
    one[0] = kf.one();
    let alg = Algebra::from_products(&kf, dim, one, prod);
    Ok(StructAlgebra { ring, fstar: ring.lift_central(&fhat), n, alg })
}

impl StructAlgebra<'_> {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn fstar(&self) -> &SkewPoly<FFElem> {
        &self.fstar
    }

    /// Coordinates of `f + R f*`.
    pub fn project(&self, f: &SkewPoly<FFElem>) -> Result<Vec<KfElem>> {
        let r = self.ring.lrem(f, &self.fstar)?;
        let mu = self.ring.mu();
        let map = self.ring.twist().subfield();
        let k = self.ring.center();
        let mut out = vec![vec![k.zero(); self.n]; mu * mu];
        for (e, c) in r.coeffs().iter().enumerate() {
            let (j, l) = (e % mu, e / mu);
            for (i, kap) in map.expand(c).into_iter().enumerate() {
                out[i * mu + j][l] = kap;
            }
        }
        Ok(out)
    }

    /// The representative of X-degree below `deg f*`.
    pub fn lift(&self, x: &[KfElem]) -> SkewPoly<FFElem> {
        let mu = self.ring.mu();
        let map = self.ring.twist().subfield();
        let coeffs = (0..mu * self.n)
            .map(|e| {
                let (j, l) = (e % mu, e / mu);
                let ks: Vec<FFElem> = (0..mu).map(|i| x[i * mu + j][l]).collect();
                map.contract(&ks)
            })
            .collect();
        self.ring.poly(coeffs)
    }
}

/// A solution `y` of `a y a = a` with free variables set to zero.
pub fn solve_von_neumann(alg: &Algebra, a: &[KfElem]) -> Result<Vec<KfElem>> {
    let d = alg.dim();
    let cols: Vec<Vec<KfElem>> = (0..d).map(|k| alg.mul(&alg.mul(a, &alg.basis(k)), a)).collect();
    let rows: Vec<Vec<KfElem>> = (0..d).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    linalg::solve(alg.kf(), &rows, a)
        .ok_or_else(|| Error::Internal("inconsistent regularity system; the algebra is not semisimple".into()))
}

/// An idempotent `e = y a` with `A e = A a`.
pub fn idempotent(alg: &Algebra, a: &[KfElem]) -> Result<Vec<KfElem>> {
    if alg.is_zero(a) {
        return Ok(alg.zero());
    }
    let y = solve_von_neumann(alg, a)?;
    Ok(alg.mul(&y, a))
}

/// The corner `(1-e) A (1-e)` with its own basis and structure constants.
#[derive(Clone, Debug)]
pub struct Corner {
    alg: Algebra,
    basis: Vec<Vec<KfElem>>,
    span: Span<Kf>,
}

/// Builds `(1-e) A (1-e)`; fails when `e` is not idempotent.
pub fn corner(parent: &Algebra, e: &[KfElem]) -> Result<Corner> {
    if alg_ne(parent, &parent.mul(e, e), e) {
        return Err(Error::Precondition("corner needs an idempotent".into()));
    }
    let f = parent.sub(&parent.one(), e);
    let mut span = Span::new(parent.kf());
    let mut basis = Vec::new();
    for k in 0..parent.dim() {
        let w = parent.mul(&parent.mul(&f, &parent.basis(k)), &f);
        if span.insert(&w) == Insert::Added {
            basis.push(w);
        }
    }
    let mut c = Corner { alg: Algebra { kf: parent.kf().clone(), dim: 0, table: vec![], one: vec![] }, basis, span };
    let d = c.basis.len();
    let one = c.retract(&f).expect("1 - e lies in its own corner");
    let alg = Algebra::from_products(parent.kf(), d, one, |i, j| {
        c.retract(&parent.mul(&c.basis[i], &c.basis[j])).expect("corner is closed")
    });
    c.alg = alg;
    Ok(c)
}

fn alg_ne(alg: &Algebra, x: &[KfElem], y: &[KfElem]) -> bool {
    !alg.is_zero(&alg.sub(x, y))
}

impl Corner {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Corner coordinates to coordinates in the parent algebra.
    pub fn embed(&self, c: &[KfElem]) -> Vec<KfElem> {
        let k = &self.alg.kf;
        let n = self.span_width();
        let mut out = vec![k.zero(); n];
        for (ci, b) in c.iter().zip(&self.basis) {
            for (o, x) in out.iter_mut().zip(b) {
                *o = k.mul_add(o, ci, x);
            }
        }
        out
    }

    fn span_width(&self) -> usize {
        self.basis.first().map_or(self.alg.one.len(), |b| b.len())
    }

    /// Parent coordinates to corner coordinates, `None` outside the corner.
    pub fn retract(&self, x: &[KfElem]) -> Option<Vec<KfElem>> {
        let all = self.span.express(x)?;
        Some(self.span.independent().iter().map(|&i| all[i].clone()).collect())
    }
}

/// Searches for `zeta, eta != 0` with `zeta eta = 0` in a simple algebra.
///
/// A commutative simple algebra is a field, so only a few samples are tried
/// and `None` is returned when they show no zero divisor. Otherwise elements
/// are sampled until one has a reducible minimal polynomial `m = m1 m2`,
/// giving `zeta = m1(x)` and `eta = m2(x)`.
pub fn find_zero_divisor(alg: &Algebra, seed: u64, max_trials: usize) -> Result<Option<(Vec<KfElem>, Vec<KfElem>)>> {
    if alg.dim() <= 1 {
        return Ok(None);
    }
    let commutative = alg.is_commutative();
    let trials = if commutative { max_trials.min(4) } else { max_trials };
    let k = alg.kf();
    for t in 0..trials {
        let ts = derive_seed(seed, t as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(ts);
        let x: Vec<KfElem> = (0..alg.dim()).map(|_| k.random(&mut rng)).collect();
        let m = alg.minimal_polynomial(&x);
        let fs = cpoly::cpoly_factor(k, &m, derive_seed(ts, 1))?;
        if fs.len() == 1 && fs[0].1 == 1 {
            continue;
        }
        let m1 = fs[0].0.clone();
        let m2 = cpoly::exact_div(k, &m, &m1)?;
        let zeta = alg.eval(&m1, &x);
        let eta = alg.eval(&m2, &x);
        if alg.is_zero(&zeta) || alg.is_zero(&eta) || !alg.is_zero(&alg.mul(&zeta, &eta)) {
            return Err(Error::Internal("minimal polynomial split gave no zero divisor".into()));
        }
        return Ok(Some((zeta, eta)));
    }
    if commutative {
        Ok(None)
    } else {
        Err(Error::TrialsExhausted { trials })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skewcore::{FrobeniusTwist, SkewRing};
    use rand::Rng;

    fn ring(p: u64, m: u32, s: u32) -> FiniteSkewRing {
        let f = FieldDesc::new(p, m).unwrap();
        SkewRing::new(FrobeniusTwist::new(&f, s).unwrap())
    }

    fn central(r: &FiniteSkewRing, v: &[i64]) -> ComPoly<FFElem> {
        let k = r.center();
        ComPoly::new(k, v.iter().map(|&c| k.from_int(c)).collect())
    }

    #[test]
    fn quotient_field() {
        let r = ring(2, 2, 1);
        assert_eq!(kf_make(r.center(), &central(&r, &[1, 1])).unwrap().rel_degree(), 1);
        assert!(kf_make(r.center(), &central(&r, &[1, 0, 1])).is_err());
    }

    #[test]
    fn four_dimensional_example() {
        let r = ring(2, 2, 1);
        let sa = alg_build(&r, &central(&r, &[1, 1])).unwrap();
        let alg = sa.algebra();
        assert_eq!(alg.dim(), 4);
        let x = sa.project(&r.x()).unwrap();
        assert_eq!(alg.mul(&x, &x), alg.one());
        let x1 = sa.project(&r.add(&r.x(), &r.one())).unwrap();
        assert!(alg.is_zero(&alg.mul(&x1, &x1)));
        assert!(!alg.is_commutative());
        for i in 0..4 {
            for j in 0..4 {
                for l in 0..4 {
                    let (a, b, c) = (alg.basis(i), alg.basis(j), alg.basis(l));
                    assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
                }
            }
            assert_eq!(alg.mul(&alg.one(), &alg.basis(i)), alg.basis(i));
            assert_eq!(alg.mul(&alg.basis(i), &alg.one()), alg.basis(i));
        }
        let y = solve_von_neumann(alg, &x1).unwrap();
        assert_eq!(alg.mul(&alg.mul(&x1, &y), &x1), x1);
        let e = alg.mul(&y, &x1);
        assert_eq!(alg.mul(&e, &e), e);
        let c = corner(alg, &e).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(corner(alg, &alg.zero()).unwrap().dim(), 4);
        assert_eq!(corner(alg, &alg.one()).unwrap().dim(), 0);
        assert!(corner(alg, &x1).is_err());
        assert!(solve_von_neumann(alg, &alg.zero()).unwrap().iter().all(|c| alg.kf().is_zero(c)));
        let (z, w) = find_zero_divisor(alg, 7, MAX_TRIALS).unwrap().unwrap();
        assert!(alg.is_zero(&alg.mul(&z, &w)));
        assert_eq!(find_zero_divisor(c.algebra(), 7, MAX_TRIALS).unwrap(), None);
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (p, m, s, fh) in [(2u64, 2u32, 1u32, vec![1i64, 1]), (2, 4, 1, vec![1, 1, 1]), (3, 2, 1, vec![1, 0, 1]), (2, 6, 2, vec![1, 1])] {
            let r = ring(p, m, s);
            let k = r.center();
            let mut fhat = central(&r, &fh);
            while !cpoly::is_irreducible(k, &fhat) {
                fhat = cpoly::add(k, &fhat, &ComPoly::monomial(k, k.gen(), 0));
            }
            let sa = alg_build(&r, &fhat).unwrap();
            let alg = sa.algebra();
            assert!(alg.is_zero(&sa.project(sa.fstar()).unwrap()));
            for _ in 0..100 {
                let (n1, n2) = (rng.gen_range(0..12), rng.gen_range(0..12));
                let f = r.random(&mut rng, n1, false, false);
                let g = r.random(&mut rng, n2, false, false);
                let (pf, pg) = (sa.project(&f).unwrap(), sa.project(&g).unwrap());
                assert_eq!(sa.project(&sa.lift(&pf)).unwrap(), pf);
                assert_eq!(r.lrem(&f, sa.fstar()).unwrap(), sa.lift(&pf));
                assert_eq!(alg.mul(&pf, &pg), sa.project(&r.mul(&f, &g)).unwrap());
            }
        }
    }

    #[test]
    fn corner_dimensions_add_up() {
        let r = ring(2, 4, 1);
        let sa = alg_build(&r, &central(&r, &[1, 1])).unwrap();
        let alg = sa.algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let f = r.random(&mut rng, 2, true, true);
            let a = sa.project(&f).unwrap();
            let e = idempotent(alg, &a).unwrap();
            assert_eq!(alg.mul(&e, &e), e);
            assert_eq!(alg.mul(&a, &e), a);
            let one_e = alg.sub(&alg.one(), &e);
            let dim_of = |l: &[KfElem], rr: &[KfElem]| {
                let vs: Vec<Vec<KfElem>> = (0..alg.dim()).map(|k| alg.mul(&alg.mul(l, &alg.basis(k)), rr)).collect();
                linalg::rank(alg.kf(), &vs)
            };
            let total = dim_of(&e, &e) + dim_of(&e, &one_e) + dim_of(&one_e, &e) + dim_of(&one_e, &one_e);
            assert_eq!(total, alg.dim());
            assert_eq!(corner(alg, &e).unwrap().dim(), dim_of(&one_e, &one_e));
        }
    }
}
