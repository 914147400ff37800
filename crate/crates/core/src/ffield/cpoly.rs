//! Dense commutative univariate polynomials and their factorization over
//! finite fields (squarefree, distinct-degree and equal-degree splitting).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{Field, FiniteField};

/// A polynomial `sum c_i z^i`; the zero polynomial has no coefficients and
/// the top coefficient of a nonzero one is nonzero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ComPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> ComPoly<E> {
    pub fn new<F: Field<Elem = E>>(k: &F, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| k.is_zero(c)) {
            coeffs.pop();
        }
        ComPoly { coeffs }
    }

    pub fn zero() -> Self {
        ComPoly { coeffs: Vec::new() }
    }

    pub fn constant<F: Field<Elem = E>>(k: &F, c: E) -> Self {
        Self::new(k, vec![c])
    }

    pub fn one<F: Field<Elem = E>>(k: &F) -> Self {
        Self::constant(k, k.one())
    }

    /// The monomial `c z^n`.
    pub fn monomial<F: Field<Elem = E>>(k: &F, c: E, n: usize) -> Self {
        let mut v = vec![k.zero(); n];
        v.push(c);
        Self::new(k, v)
    }

    pub fn var<F: Field<Elem = E>>(k: &F) -> Self {
        Self::monomial(k, k.one(), 1)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `-1` for the zero polynomial.
    pub fn degree_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff<F: Field<Elem = E>>(&self, k: &F, i: usize) -> E {
        self.coeffs.get(i).cloned().unwrap_or_else(|| k.zero())
    }
}

/// Total order used for canonical factor lists: degree first, then the
/// coefficient vectors from the constant term upward.
pub fn canonical_cmp<E: Ord>(a: &ComPoly<E>, b: &ComPoly<E>) -> std::cmp::Ordering {
    a.coeffs.len().cmp(&b.coeffs.len()).then_with(|| a.coeffs.cmp(&b.coeffs))
}

pub fn is_one<F: Field>(k: &F, a: &ComPoly<F::Elem>) -> bool {
    a.coeffs.len() == 1 && k.is_one(&a.coeffs[0])
}

pub fn add<F: Field>(k: &F, a: &ComPoly<F::Elem>, b: &ComPoly<F::Elem>) -> ComPoly<F::Elem> {
    let n = a.coeffs.len().max(b.coeffs.len());
    let v = (0..n).map(|i| k.add(&a.coeff(k, i), &b.coeff(k, i))).collect();
    ComPoly::new(k, v)
}

pub fn sub<F: Field>(k: &F, a: &ComPoly<F::Elem>, b: &ComPoly<F::Elem>) -> ComPoly<F::Elem> {
    let n = a.coeffs.len().max(b.coeffs.len());
    let v = (0..n).map(|i| k.sub(&a.coeff(k, i), &b.coeff(k, i))).collect();
    ComPoly::new(k, v)
}

pub fn neg<F: Field>(k: &F, a: &ComPoly<F::Elem>) -> ComPoly<F::Elem> {
    ComPoly { coeffs: a.coeffs.iter().map(|c| k.neg(c)).collect() }
}

pub fn scale<F: Field>(k: &F, c: &F::Elem, a: &ComPoly<F::Elem>) -> ComPoly<F::Elem> {
    ComPoly::new(k, a.coeffs.iter().map(|x| k.mul(c, x)).collect())
}

pub fn mul<F: Field>(k: &F, a: &ComPoly<F::Elem>, b: &ComPoly<F::Elem>) -> ComPoly<F::Elem> {
    if a.is_zero() || b.is_zero() {
        return ComPoly::zero();
    }
    let mut v = vec![k.zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            v[i + j] = k.mul_add(&v[i + j], x, y);
        }
    }
    ComPoly::new(k, v)
}

pub fn pow<F: Field>(k: &F, a: &ComPoly<F::Elem>, mut e: u64) -> ComPoly<F::Elem> {
    let mut base = a.clone();
    let mut acc = ComPoly::one(k);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(k, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(k, &base, &base);
        }
    }
    acc
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub fn divrem<F: Field>(
    k: &F,
    a: &ComPoly<F::Elem>,
    b: &ComPoly<F::Elem>,
) -> Result<(ComPoly<F::Elem>, ComPoly<F::Elem>)> {
    let db = b.deg().ok_or(Error::DivisionByZero)?;
    let Some(da) = a.deg() else {
        return Ok((ComPoly::zero(), ComPoly::zero()));
    };
    if da < db {
        return Ok((ComPoly::zero(), a.clone()));
    }
    let inv = k.inv(&b.coeffs[db]).ok_or(Error::DivisionByZero)?;
    let mut r = a.coeffs.clone();
    let mut q = vec![k.zero(); da - db + 1];
    for i in (0..=da - db).rev() {
        let c = k.mul(&r[i + db], &inv);
        if k.is_zero(&c) {
            continue;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            r[i + j] = k.sub(&r[i + j], &k.mul(&c, bj));
        }
        q[i] = c;
    }
    r.truncate(db);
    Ok((ComPoly::new(k, q), ComPoly::new(k, r)))
}

pub fn rem<F: Field>(k: &F, a: &ComPoly<F::Elem>, b: &ComPoly<F::Elem>) -> ComPoly<F::Elem> {
    divrem(k, a, b).expect("nonzero modulus").1
}

/// Exact quotient; fails when `b` does not divide `a`.
pub fn exact_div<F: Field>(
    k: &F,
    a: &ComPoly<F::Elem>,
    b: &ComPoly<F::Elem>,
) -> Result<ComPoly<F::Elem>> {
    let (q, r) = divrem(k, a, b)?;
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision)
    }
}

pub fn monic<F: Field>(k: &F, a: &ComPoly<F::Elem>) -> ComPoly<F::Elem> {
    match a.lc() {
        None => ComPoly::zero(),
        Some(lc) => {
            let inv = k.inv(lc).expect("nonzero leading coefficient");
            scale(k, &inv, a)
        }
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(k: &F, a: &ComPoly<F::Elem>, b: &ComPoly<F::Elem>) -> ComPoly<F::Elem> {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = rem(k, &x, &y);
        x = y;
        y = r;
    }
    monic(k, &x)
}

/// `(g, s, t)` with `s a + t b = g = gcd(a, b)` monic.
pub fn ext_gcd<F: Field>(
    k: &F,
    a: &ComPoly<F::Elem>,
    b: &ComPoly<F::Elem>,
) -> (ComPoly<F::Elem>, ComPoly<F::Elem>, ComPoly<F::Elem>) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (ComPoly::one(k), ComPoly::zero());
    let (mut t0, mut t1) = (ComPoly::zero(), ComPoly::one(k));
    while !r1.is_zero() {
        let (q, r) = divrem(k, &r0, &r1).expect("nonzero divisor");
        let s = sub(k, &s0, &mul(k, &q, &s1));
        let t = sub(k, &t0, &mul(k, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    match r0.lc().cloned() {
        None => (r0, s0, t0),
        Some(lc) => {
            let inv = k.inv(&lc).expect("nonzero");
            (scale(k, &inv, &r0), scale(k, &inv, &s0), scale(k, &inv, &t0))
        }
    }
}

pub fn derivative<F: Field>(k: &F, a: &ComPoly<F::Elem>) -> ComPoly<F::Elem> {
    let v = a
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| k.mul(&k.from_int(i as i64), c))
        .collect();
    ComPoly::new(k, v)
}

/// Horner evaluation in any ring containing the coefficients.
pub fn eval_with<E, T: Clone>(
    a: &ComPoly<E>,
    zero: T,
    embed: impl Fn(&E) -> T,
    add: impl Fn(&T, &T) -> T,
    mul_x: impl Fn(&T) -> T,
) -> T {
    let mut acc = zero;
    for c in a.coeffs.iter().rev() {
        acc = add(&mul_x(&acc), &embed(c));
    }
    acc
}

pub fn mulmod<F: Field>(
    k: &F,
    a: &ComPoly<F::Elem>,
    b: &ComPoly<F::Elem>,
    m: &ComPoly<F::Elem>,
) -> ComPoly<F::Elem> {
    rem(k, &mul(k, a, b), m)
}

pub fn powmod<F: Field>(
    k: &F,
    a: &ComPoly<F::Elem>,
    mut e: u64,
    m: &ComPoly<F::Elem>,
) -> ComPoly<F::Elem> {
    let mut base = rem(k, a, m);
    let mut acc = rem(k, &ComPoly::one(k), m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(k, &acc, &base, m);
        }
        e >>= 1;
        if e > 0 {
            base = mulmod(k, &base, &base, m);
        }
    }
    acc
}

/// Text form in descending powers of `var`, nontrivial coefficients in
/// parentheses.
pub fn format<F: Field>(k: &F, a: &ComPoly<F::Elem>, var: &str) -> String {
    format_terms(
        a.coeffs.iter().enumerate().rev().filter(|(_, c)| !k.is_zero(c)).map(|(i, c)| {
            let s = if k.is_one(c) { None } else { Some(k.format(c)) };
            (i, s)
        }),
        var,
    )
}

/// Joins `(exponent, coefficient)` terms, highest first.
pub fn format_terms(terms: impl Iterator<Item = (usize, Option<String>)>, var: &str) -> String {
    let mut out: Vec<String> = Vec::new();
    for (i, c) in terms {
        let pw = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        out.push(match (c, i) {
            (None, 0) => "1".into(),
            (None, _) => pw,
            (Some(c), 0) => c,
            (Some(c), _) if is_atom(&c) || is_wrapped(&c) => format!("{c} {pw}"),
            (Some(c), _) => format!("({c}) {pw}"),
        });
    }
    if out.is_empty() {
        "0".into()
    } else {
        out.join(" + ")
    }
}

/// Whether the whole string is one parenthesized group.
fn is_wrapped(s: &str) -> bool {
    if !s.starts_with('(') || !s.ends_with(')') {
        return false;
    }
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i + 1 < s.len() {
                    return false;
                }
            }
            _ => {}
        }
    }
    true
}

fn is_atom(s: &str) -> bool {
    if s.chars().all(|c| c.is_ascii_digit()) {
        return true;
    }
    let base = s.split('^').next().unwrap_or("");
    let ident = base.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
        && base.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    let exp_ok = s.split('^').skip(1).all(|e| !e.is_empty() && e.chars().all(|c| c.is_ascii_digit()));
    ident && exp_ok && s.matches('^').count() <= 1
}

pub fn random<F: Field, R: Rng + ?Sized>(k: &F, n: usize, rng: &mut R) -> ComPoly<F::Elem> {
    ComPoly::new(k, (0..n).map(|_| k.random(rng)).collect())
}

/// `h^p mod m` for the characteristic `p` via square-and-multiply.
fn pth_power_mod<F: FiniteField>(k: &F, h: &ComPoly<F::Elem>, m: &ComPoly<F::Elem>) -> ComPoly<F::Elem> {
    powmod(k, h, k.characteristic(), m)
}

/// The map `h -> h^Q mod m` with `Q = |k|`, which is `k`-linear.
struct QFrobenius<E> {
    cols: Vec<ComPoly<E>>,
}

impl<E: Clone> QFrobenius<E> {
    fn new<F: FiniteField<Elem = E>>(k: &F, m: &ComPoly<E>) -> Self {
        let n = m.deg().expect("nonzero modulus");
        let mut xq = rem(k, &ComPoly::var(k), m);
        for _ in 0..k.degree() {
            xq = pth_power_mod(k, &xq, m);
        }
        let mut cols = Vec::with_capacity(n);
        let mut cur = rem(k, &ComPoly::one(k), m);
        for _ in 0..n {
            cols.push(cur.clone());
            cur = mulmod(k, &cur, &xq, m);
        }
        QFrobenius { cols }
    }

    fn apply<F: FiniteField<Elem = E>>(&self, k: &F, h: &ComPoly<E>) -> ComPoly<E> {
        let n = self.cols.len();
        let mut acc = vec![k.zero(); n];
        for (i, c) in h.coeffs.iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            for (j, x) in self.cols[i].coeffs.iter().enumerate() {
                acc[j] = k.mul_add(&acc[j], c, x);
            }
        }
        ComPoly::new(k, acc)
    }
}

/// Rabin's deterministic irreducibility test.
pub fn is_irreducible<F: FiniteField>(k: &F, f: &ComPoly<F::Elem>) -> bool {
    let Some(n) = f.deg() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let f = monic(k, f);
    let frob = QFrobenius::new(k, &f);
    let x = ComPoly::var(k);
    let mut powers = Vec::with_capacity(n + 1);
    let mut h = rem(k, &x, &f);
    powers.push(h.clone());
    for _ in 0..n {
        h = frob.apply(k, &h);
        powers.push(h.clone());
    }
    if powers[n] != rem(k, &x, &f) {
        return false;
    }
    for r in arith::prime_divisors(n as u64) {
        let hr = &powers[n / r as usize];
        let g = gcd(k, &sub(k, hr, &x), &f);
        if !is_one(k, &g) {
            return false;
        }
    }
    true
}

/// Checked form of [`is_irreducible`] that rejects constants.
pub fn cpoly_is_irreducible<F: FiniteField>(k: &F, f: &ComPoly<F::Elem>) -> Result<bool> {
    match f.deg() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => Ok(is_irreducible(k, f)),
    }
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, e)` with
/// pairwise coprime squarefree `g`.
pub fn squarefree<F: FiniteField>(k: &F, f: &ComPoly<F::Elem>) -> Vec<(ComPoly<F::Elem>, usize)> {
    let mut out = Vec::new();
    if f.deg().unwrap_or(0) == 0 {
        return out;
    }
    let p = k.characteristic() as usize;
    let mut c = gcd(k, f, &derivative(k, f));
    let mut w = exact_div(k, f, &c).expect("gcd divides");
    let mut i = 1;
    while !is_one(k, &w) {
        let y = gcd(k, &w, &c);
        let fac = exact_div(k, &w, &y).expect("gcd divides");
        if !is_one(k, &fac) {
            out.push((fac, i));
        }
        c = exact_div(k, &c, &y).expect("gcd divides");
        w = y;
        i += 1;
    }
    if !is_one(k, &c) {
        let root: Vec<F::Elem> = c.coeffs.iter().step_by(p).map(|x| k.pth_root(x)).collect();
        let root = ComPoly::new(k, root);
        for (g, e) in squarefree(k, &root) {
            out.push((g, e * p));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial.
pub fn distinct_degree<F: FiniteField>(k: &F, f: &ComPoly<F::Elem>) -> Vec<(ComPoly<F::Elem>, usize)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    if rest.deg().unwrap_or(0) == 0 {
        return out;
    }
    let frob = QFrobenius::new(k, f);
    let x = ComPoly::var(k);
    let mut h = rem(k, &x, f);
    let mut d = 0;
    while let Some(n) = rest.deg() {
        if 2 * (d + 1) > n {
            break;
        }
        d += 1;
        h = rem(k, &frob.apply(k, &h), &rest);
        let g = gcd(k, &sub(k, &h, &x), &rest);
        if !is_one(k, &g) {
            rest = exact_div(k, &rest, &g).expect("gcd divides");
            h = rem(k, &h, &rest);
            out.push((g, d));
        }
    }
    if rest.deg().unwrap_or(0) > 0 {
        let n = rest.deg().unwrap();
        out.push((rest, n));
    }
    out
}

/// Splits a monic squarefree product of irreducibles of degree `d`.
pub fn equal_degree<F: FiniteField, R: Rng + ?Sized>(
    k: &F,
    f: &ComPoly<F::Elem>,
    d: usize,
    rng: &mut R,
) -> Vec<ComPoly<F::Elem>> {
    let n = f.deg().expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    let steps = k.degree() as usize * d;
    let p = k.characteristic();
    loop {
        let r = random(k, n, rng);
        if r.deg().unwrap_or(0) == 0 {
            continue;
        }
        let t = if p == 2 {
            let mut acc = r.clone();
            let mut cur = r.clone();
            for _ in 1..steps {
                cur = mulmod(k, &cur, &cur, f);
                acc = add(k, &acc, &cur);
            }
            acc
        } else {
            let mut acc = r.clone();
            let mut cur = r.clone();
            for _ in 1..steps {
                cur = pth_power_mod(k, &cur, f);
                acc = mulmod(k, &acc, &cur, f);
            }
            let e = (p - 1) / 2;
            sub(k, &powmod(k, &acc, e, f), &ComPoly::one(k))
        };
        let g = gcd(k, &t, f);
        if let Some(dg) = g.deg() {
            if dg > 0 && dg < n {
                let h = exact_div(k, f, &g).expect("gcd divides");
                let mut out = equal_degree(k, &g, d, rng);
                out.extend(equal_degree(k, &h, d, rng));
                return out;
            }
        }
    }
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by [`canonical_cmp`]. The leading coefficient is dropped.
pub fn cpoly_factor<F: FiniteField>(
    k: &F,
    f: &ComPoly<F::Elem>,
    seed: u64,
) -> Result<Vec<(ComPoly<F::Elem>, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = monic(k, f);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: Vec<(ComPoly<F::Elem>, usize)> = Vec::new();
    for (part, e) in squarefree(k, &f) {
        for (g, d) in distinct_degree(k, &part) {
            for h in equal_degree(k, &g, d, &mut rng) {
                match found.iter_mut().find(|(x, _)| *x == h) {
                    Some(entry) => entry.1 += e,
                    None => found.push((h, e)),
                }
            }
        }
    }
    found.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    Ok(found)
}

/// Product of a factor list with multiplicities.
pub fn expand_factors<F: Field>(k: &F, fs: &[(ComPoly<F::Elem>, usize)]) -> ComPoly<F::Elem> {
    fs.iter().fold(ComPoly::one(k), |acc, (g, e)| mul(k, &acc, &pow(k, g, *e as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FieldDesc;

    fn f4() -> FieldDesc {
        FieldDesc::new(2, 2).unwrap().renamed("b")
    }

    #[test]
    fn division_and_gcd() {
        let k = FieldDesc::new(3, 1).unwrap();
        let e = |v: &[i64]| ComPoly::new(&k, v.iter().map(|&c| k.from_int(c)).collect());
        let a = e(&[1, 0, 1]);
        let b = e(&[2, 1]);
        let (q, r) = divrem(&k, &mul(&k, &a, &b), &b).unwrap();
        assert_eq!(q, a);
        assert!(r.is_zero());
        let (g, s, t) = ext_gcd(&k, &a, &b);
        assert!(is_one(&k, &g));
        assert_eq!(add(&k, &mul(&k, &s, &a), &mul(&k, &t, &b)), g);
    }

    #[test]
    fn irreducibility() {
        let k = f4();
        let b = k.gen();
        let lin = |c| ComPoly::new(&k, vec![c, k.one()]);
        let p = mul(&k, &lin(b), &lin(k.add(&b, &k.one())));
        assert!(is_irreducible(&k, &lin(b)));
        assert!(!is_irreducible(&k, &p));
        assert!(cpoly_is_irreducible(&k, &ComPoly::one(&k)).is_err());
        let f = cpoly_factor(&k, &p, 1).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f, vec![(lin(b), 1), (lin(k.add(&b, &k.one())), 1)]);
        assert_eq!(cpoly_factor(&k, &lin(b), 5).unwrap(), vec![(lin(b), 1)]);
    }

    #[test]
    fn factor_with_repeats_in_odd_characteristic() {
        let k = FieldDesc::new(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..40 {
            let mut f = ComPoly::one(&k);
            for _ in 0..4 {
                let g = monic(&k, &random(&k, rng.gen_range(2..5), &mut rng));
                if g.deg().unwrap_or(0) > 0 {
                    let e = rng.gen_range(1..5);
                    f = mul(&k, &f, &pow(&k, &g, e));
                }
            }
            let fs = cpoly_factor(&k, &f, 77).unwrap();
            assert_eq!(expand_factors(&k, &fs), monic(&k, &f));
            assert!(fs.iter().all(|(g, _)| is_irreducible(&k, g)));
        }
    }

    #[test]
    fn factor_char_two_with_squares() {
        let k = FieldDesc::new(2, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..40 {
            let g = monic(&k, &random(&k, 4, &mut rng));
            let h = monic(&k, &random(&k, 6, &mut rng));
            let f = mul(&k, &pow(&k, &g, 4), &pow(&k, &h, 3));
            if f.is_zero() {
                continue;
            }
            let fs = cpoly_factor(&k, &f, 3).unwrap();
            assert_eq!(expand_factors(&k, &fs), f);
            assert!(fs.iter().all(|(g, _)| is_irreducible(&k, g)));
        }
    }

    #[test]
    fn formats() {
        let k = f4();
        let b = k.gen();
        let b1 = k.add(&b, &k.one());
        let p = ComPoly::new(&k, vec![b, b1, k.zero(), k.one()]);
        assert_eq!(format(&k, &p, "z"), "z^3 + (b + 1) z + b");
        assert_eq!(format(&k, &ComPoly::zero(), "z"), "0");
    }
}
