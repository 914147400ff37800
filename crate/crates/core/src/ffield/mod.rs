//! Finite fields `F_{p^m}` in a polynomial basis over `F_p`, their
//! invariant subfields, extension towers, and commutative polynomials.

pub mod cpoly;
pub mod ext;
pub mod subfield;

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{Field, FiniteField};

pub use cpoly::ComPoly;
pub use ext::ExtensionField;
pub use subfield::SubfieldMap;

/// Fields up to this order use exponent/logarithm tables.
pub const TABLE_LIMIT: u64 = 1 << 16;

/// An element of `F_{p^m}`: the coordinates `c_0 + c_1 a + ... + c_{m-1} a^{m-1}`
/// packed as the integer `sum c_i p^i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FFElem(pub u64);

impl fmt::Debug for FFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Options for [`FieldDesc::with_options`].
#[derive(Clone, Debug, Default)]
pub struct FieldOptions {
    /// Polynomial-basis arithmetic even when tables would fit.
    pub force_poly: bool,
    /// Display name of the generator, `a` when absent.
    pub gen_name: Option<String>,
}

#[derive(Debug)]
struct Tables {
    /// `exp[i] = g^i` for `0 <= i < 2(q-1)`.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`.
    log: Vec<u32>,
    /// Zech logarithms `log(1 + g^n)`, odd characteristic only.
    zech: Vec<u32>,
}

const NO_LOG: u32 = u32::MAX;

#[derive(Debug)]
struct Inner {
    p: u64,
    m: u32,
    q: u64,
    modulus: Vec<u64>,
    gen_name: String,
    tables: Option<Tables>,
    /// `frob[e]` holds the images of `a^i` under `x -> x^(p^e)`.
    frob: Vec<Vec<FFElem>>,
    primitive: FFElem,
}

/// Handle to a finite field. Cloning is cheap; the tables are shared.
#[derive(Clone)]
pub struct FieldDesc {
    inner: Arc<Inner>,
}

impl fmt::Debug for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literal())
    }
}

impl PartialEq for FieldDesc {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.modulus == other.inner.modulus
                && self.inner.gen_name == other.inner.gen_name)
    }
}

impl Eq for FieldDesc {}

/// Builds `F_{p^m}`. Without a modulus the smallest monic irreducible is used,
/// comparing coefficient vectors from the top degree down.
pub fn make_field(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<FieldDesc> {
    FieldDesc::with_options(p, m, modulus, FieldOptions::default())
}

impl FieldDesc {
    pub fn new(p: u64, m: u32) -> Result<Self> {
        make_field(p, m, None)
    }

    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        make_field(p, 1, None)
    }

    pub fn with_options(
        p: u64,
        m: u32,
        modulus: Option<&[u64]>,
        opts: FieldOptions,
    ) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q < 1 << 63)
            .ok_or_else(|| Error::InvalidField(format!("{p}^{m} exceeds 63 bits")))?;
        let gen_name = opts.gen_name.unwrap_or_else(|| "a".to_string());
        let modulus = match modulus {
            Some(md) => {
                let md = trim(md.iter().map(|c| c % p).collect());
                if md.len() != m as usize + 1 || md[m as usize] != 1 {
                    return Err(Error::InvalidField(format!("modulus must be monic of degree {m}")));
                }
                if !prime_poly_irreducible(p, &md)? {
                    return Err(Error::InvalidField("modulus is reducible".into()));
                }
                md
            }
            None => smallest_irreducible(p, m)?,
        };
        let mut inner = Inner {
            p,
            m,
            q,
            modulus,
            gen_name,
            tables: None,
            frob: Vec::new(),
            primitive: FFElem(1),
        };
        inner.primitive = find_primitive(&inner);
        if q <= TABLE_LIMIT && !opts.force_poly {
            inner.tables = Some(build_tables(&inner));
        } else {
            inner.frob = build_frobenius(&inner);
        }
        Ok(FieldDesc { inner: Arc::new(inner) })
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn m(&self) -> u32 {
        self.inner.m
    }

    pub fn q(&self) -> u64 {
        self.inner.q
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn gen_name(&self) -> &str {
        &self.inner.gen_name
    }

    pub fn is_table_mode(&self) -> bool {
        self.inner.tables.is_some()
    }

    /// Same field, different display name for the generator.
    pub fn renamed(&self, gen_name: &str) -> Self {
        let i = &self.inner;
        Self::with_options(
            i.p,
            i.m,
            Some(&i.modulus),
            FieldOptions { force_poly: i.tables.is_none(), gen_name: Some(gen_name.into()) },
        )
        .expect("existing field parameters are valid")
    }

    /// The generator `a`, a root of the modulus.
    pub fn gen(&self) -> FFElem {
        if self.inner.m == 1 {
            FFElem((self.inner.p - self.inner.modulus[0]) % self.inner.p)
        } else {
            FFElem(self.inner.p)
        }
    }

    /// The smallest primitive element in the packed ordering.
    pub fn primitive_element(&self) -> FFElem {
        self.inner.primitive
    }

    pub fn coeffs(&self, x: &FFElem) -> Vec<u64> {
        digits(self.inner.p, self.inner.m, x.0)
    }

    pub fn from_coeffs(&self, c: &[u64]) -> FFElem {
        let p = self.inner.p;
        let mut v = 0u64;
        for &ci in c.iter().take(self.inner.m as usize).rev() {
            v = v * p + ci % p;
        }
        FFElem(v)
    }

    /// Field literal accepted by the parser.
    pub fn literal(&self) -> String {
        let i = &self.inner;
        format!(
            "GF({}^{}; modulus={}; var={})",
            i.p,
            i.m,
            format_prime_poly(&i.modulus, "x"),
            i.gen_name
        )
    }

    fn add_digits(&self, x: u64, y: u64) -> u64 {
        let p = self.inner.p;
        let (mut x, mut y) = (x, y);
        let mut out = 0u64;
        let mut scale = 1u64;
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale = scale.wrapping_mul(p);
        }
        out
    }

    fn neg_digits(&self, x: u64) -> u64 {
        let p = self.inner.p;
        let mut x = x;
        let mut out = 0u64;
        let mut scale = 1u64;
        while x > 0 {
            out += ((p - x % p) % p) * scale;
            x /= p;
            scale = scale.wrapping_mul(p);
        }
        out
    }

    fn apply_frob(&self, x: u64, e: u32) -> u64 {
        let i = &self.inner;
        let cols = &i.frob[e as usize];
        if i.p == 2 {
            let mut out = 0u64;
            let mut bits = x;
            let mut k = 0;
            while bits != 0 {
                if bits & 1 == 1 {
                    out ^= cols[k].0;
                }
                bits >>= 1;
                k += 1;
            }
            out
        } else {
            let d = digits(i.p, i.m, x);
            let mut acc = vec![0u64; i.m as usize];
            for (k, &dk) in d.iter().enumerate() {
                if dk == 0 {
                    continue;
                }
                for (j, cj) in digits(i.p, i.m, cols[k].0).into_iter().enumerate() {
                    acc[j] = (acc[j] + dk * cj) % i.p;
                }
            }
            pack(i.p, &acc)
        }
    }
}

fn digits(p: u64, m: u32, mut x: u64) -> Vec<u64> {
    let mut d = Vec::with_capacity(m as usize);
    for _ in 0..m {
        d.push(x % p);
        x /= p;
    }
    d
}

fn pack(p: u64, d: &[u64]) -> u64 {
    d.iter().rev().fold(0u64, |v, &c| v * p + c)
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Product of packed elements via schoolbook multiplication modulo the modulus.
fn poly_mul(i: &Inner, x: u64, y: u64) -> u64 {
    let m = i.m as usize;
    if i.p == 2 {
        let mut prod: u128 = 0;
        let mut b = y;
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                prod ^= (x as u128) << shift;
            }
            b >>= 1;
            shift += 1;
        }
        let md = pack(2, &i.modulus) as u128;
        for deg in (m..=2 * m).rev() {
            if prod >> deg & 1 == 1 {
                prod ^= md << (deg - m);
            }
        }
        prod as u64
    } else {
        let p = i.p as u128;
        let a = digits(i.p, i.m, x);
        let b = digits(i.p, i.m, y);
        let mut r = vec![0u128; 2 * m];
        for (s, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (t, &bj) in b.iter().enumerate() {
                r[s + t] = (r[s + t] + ai as u128 * bj as u128) % p;
            }
        }
        for deg in (m..2 * m).rev() {
            let c = r[deg];
            if c == 0 {
                continue;
            }
            for (j, &mj) in i.modulus.iter().enumerate() {
                let idx = deg - m + j;
                r[idx] = (r[idx] + (p - c) * mj as u128) % p;
            }
        }
        let d: Vec<u64> = r[..m].iter().map(|&c| c as u64).collect();
        pack(i.p, &d)
    }
}

fn poly_pow(i: &Inner, x: u64, mut e: u64) -> u64 {
    let mut base = x;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul(i, acc, base);
        }
        base = poly_mul(i, base, base);
        e >>= 1;
    }
    acc
}

fn find_primitive(i: &Inner) -> FFElem {
    let order = i.q - 1;
    let divisors = arith::prime_divisors(order);
    for g in 1..i.q {
        if divisors.iter().all(|&r| poly_pow(i, g, order / r) != 1) {
            return FFElem(g);
        }
    }
    unreachable!("every finite field has a primitive element")
}

fn build_tables(i: &Inner) -> Tables {
    let n = (i.q - 1) as usize;
    let g = i.primitive.0;
    let mut exp = vec![0u32; 2 * n.max(1)];
    let mut log = vec![NO_LOG; i.q as usize];
    let mut cur = 1u64;
    for k in 0..n {
        exp[k] = cur as u32;
        log[cur as usize] = k as u32;
        cur = poly_mul(i, cur, g);
    }
    for k in n..2 * n {
        exp[k] = exp[k - n];
    }
    let mut zech = Vec::new();
    if i.p != 2 {
        zech = (0..n)
            .map(|k| {
                let v = exp[k] as u64;
                let d0 = v % i.p;
                let w = v - d0 + (d0 + 1) % i.p;
                if w == 0 {
                    NO_LOG
                } else {
                    log[w as usize]
                }
            })
            .collect();
    }
    Tables { exp, log, zech }
}

fn build_frobenius(i: &Inner) -> Vec<Vec<FFElem>> {
    let m = i.m as usize;
    let mut frob = Vec::with_capacity(m);
    let mut ident = Vec::with_capacity(m);
    let mut cur = 1u64;
    for _ in 0..m {
        ident.push(FFElem(cur));
        cur = if m == 1 { cur } else { poly_mul(i, cur, i.p) };
    }
    frob.push(ident);
    if m == 1 {
        return frob;
    }
    let ap = poly_pow(i, i.p, i.p);
    let mut first = Vec::with_capacity(m);
    let mut cur = 1u64;
    for _ in 0..m {
        first.push(FFElem(cur));
        cur = poly_mul(i, cur, ap);
    }
    frob.push(first);
    for e in 2..m {
        let prev = frob[e - 1].clone();
        let next = prev.iter().map(|c| FFElem(apply_cols(i, &frob[1], c.0))).collect();
        frob.push(next);
    }
    frob
}

fn apply_cols(i: &Inner, cols: &[FFElem], x: u64) -> u64 {
    let d = digits(i.p, i.m, x);
    let mut acc = vec![0u64; i.m as usize];
    for (k, &dk) in d.iter().enumerate() {
        if dk == 0 {
            continue;
        }
        for (j, cj) in digits(i.p, i.m, cols[k].0).into_iter().enumerate() {
            acc[j] = (acc[j] + dk * cj) % i.p;
        }
    }
    pack(i.p, &acc)
}

/// Rabin's test for a monic polynomial over `F_p` given by integer coefficients.
fn prime_poly_irreducible(p: u64, md: &[u64]) -> Result<bool> {
    let fp = FieldDesc::prime_unchecked(p);
    let f = ComPoly::new(&fp, md.iter().map(|&c| FFElem(c)).collect());
    Ok(cpoly::is_irreducible(&fp, &f))
}

fn smallest_irreducible(p: u64, m: u32) -> Result<Vec<u64>> {
    if m == 1 {
        return Ok(vec![0, 1]);
    }
    let fp = FieldDesc::prime_unchecked(p);
    let count = p.pow(m);
    for n in 0..count {
        let mut md = digits(p, m, n);
        if md[0] == 0 {
            continue;
        }
        md.push(1);
        let f = ComPoly::new(&fp, md.iter().map(|&c| FFElem(c)).collect());
        if cpoly::is_irreducible(&fp, &f) {
            return Ok(md);
        }
    }
    Err(Error::InvalidField(format!("no irreducible polynomial of degree {m} over F_{p}")))
}

impl FieldDesc {
    /// `F_p` with modulus `x`; the caller guarantees `p` is prime.
    fn prime_unchecked(p: u64) -> Self {
        let mut inner = Inner {
            p,
            m: 1,
            q: p,
            modulus: vec![0, 1],
            gen_name: "a".into(),
            tables: None,
            frob: Vec::new(),
            primitive: FFElem(1),
        };
        inner.primitive = find_primitive(&inner);
        if p <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        } else {
            inner.frob = build_frobenius(&inner);
        }
        FieldDesc { inner: Arc::new(inner) }
    }
}

/// Formats an `F_p` polynomial given by integer coefficients.
pub fn format_prime_poly(c: &[u64], var: &str) -> String {
    let mut terms = Vec::new();
    for (k, &ck) in c.iter().enumerate().rev() {
        if ck == 0 {
            continue;
        }
        terms.push(monomial(ck, k, var));
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn monomial(c: u64, k: usize, var: &str) -> String {
    let pw = match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    match (c, k) {
        (_, 0) => c.to_string(),
        (1, _) => pw,
        _ => format!("{c}*{pw}"),
    }
}

impl Field for FieldDesc {
    type Elem = FFElem;

    fn zero(&self) -> FFElem {
        FFElem(0)
    }

    fn one(&self) -> FFElem {
        FFElem(1)
    }

    fn is_zero(&self, x: &FFElem) -> bool {
        x.0 == 0
    }

    fn add(&self, x: &FFElem, y: &FFElem) -> FFElem {
        let i = &self.inner;
        if i.p == 2 {
            return FFElem(x.0 ^ y.0);
        }
        if x.0 == 0 {
            return *y;
        }
        if y.0 == 0 {
            return *x;
        }
        match &i.tables {
            Some(t) => {
                let n = (i.q - 1) as u32;
                let lx = t.log[x.0 as usize];
                let ly = t.log[y.0 as usize];
                let d = if ly >= lx { ly - lx } else { ly + n - lx };
                let z = t.zech[d as usize];
                if z == NO_LOG {
                    FFElem(0)
                } else {
                    FFElem(t.exp[(lx + z) as usize] as u64)
                }
            }
            None => FFElem(self.add_digits(x.0, y.0)),
        }
    }

    fn sub(&self, x: &FFElem, y: &FFElem) -> FFElem {
        self.add(x, &self.neg(y))
    }

    fn neg(&self, x: &FFElem) -> FFElem {
        let i = &self.inner;
        if i.p == 2 || x.0 == 0 {
            return *x;
        }
        match &i.tables {
            Some(t) => {
                let n = i.q - 1;
                let l = t.log[x.0 as usize] as u64 + n / 2;
                FFElem(t.exp[(l % n) as usize] as u64)
            }
            None => FFElem(self.neg_digits(x.0)),
        }
    }

    fn mul(&self, x: &FFElem, y: &FFElem) -> FFElem {
        if x.0 == 0 || y.0 == 0 {
            return FFElem(0);
        }
        let i = &self.inner;
        match &i.tables {
            Some(t) => {
                FFElem(t.exp[(t.log[x.0 as usize] + t.log[y.0 as usize]) as usize] as u64)
            }
            None => FFElem(poly_mul(i, x.0, y.0)),
        }
    }

    fn inv(&self, x: &FFElem) -> Option<FFElem> {
        if x.0 == 0 {
            return None;
        }
        let i = &self.inner;
        Some(match &i.tables {
            Some(t) => {
                let n = (i.q - 1) as u32;
                let l = t.log[x.0 as usize];
                FFElem(t.exp[((n - l) % n) as usize] as u64)
            }
            None => FFElem(poly_pow(i, x.0, i.q - 2)),
        })
    }

    fn pow(&self, x: &FFElem, e: u64) -> FFElem {
        if e == 0 {
            return FFElem(1);
        }
        if x.0 == 0 {
            return FFElem(0);
        }
        let i = &self.inner;
        match &i.tables {
            Some(t) => {
                let n = i.q - 1;
                let l = (t.log[x.0 as usize] as u128 * e as u128 % n as u128) as usize;
                FFElem(t.exp[l] as u64)
            }
            None => FFElem(poly_pow(i, x.0, e % (i.q - 1))),
        }
    }

    fn from_int(&self, n: i64) -> FFElem {
        let p = self.inner.p as i128;
        FFElem(((n as i128 % p + p) % p) as u64)
    }

    fn characteristic(&self) -> u64 {
        self.inner.p
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FFElem {
        FFElem(rng.gen_range(0..self.inner.q))
    }

    fn format(&self, x: &FFElem) -> String {
        let d = digits(self.inner.p, self.inner.m, x.0);
        format_prime_poly(&d, &self.inner.gen_name)
    }
}

impl FiniteField for FieldDesc {
    fn degree(&self) -> u32 {
        self.inner.m
    }

    fn frobenius(&self, x: &FFElem, e: u32) -> FFElem {
        let i = &self.inner;
        let e = e % i.m;
        if e == 0 || x.0 == 0 {
            return *x;
        }
        match &i.tables {
            Some(t) => {
                let n = (i.q - 1) as u128;
                let pe = i.p.pow(e) as u128;
                let l = (t.log[x.0 as usize] as u128 * pe % n) as usize;
                FFElem(t.exp[l] as u64)
            }
            None => FFElem(self.apply_frob(x.0, e)),
        }
    }

    fn order(&self) -> Option<u64> {
        Some(self.inner.q)
    }

    fn element(&self, index: u64) -> FFElem {
        FFElem(index % self.inner.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f256() -> FieldDesc {
        make_field(2, 8, Some(&[1, 0, 1, 1, 1, 0, 0, 0, 1])).unwrap()
    }

    #[test]
    fn default_moduli() {
        assert_eq!(FieldDesc::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldDesc::new(2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(FieldDesc::new(2, 8).unwrap().modulus(), &[1, 1, 0, 1, 1, 0, 0, 0, 1]);
        assert_eq!(FieldDesc::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FieldDesc::prime(2).unwrap().q(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(FieldDesc::new(4, 2).is_err());
        assert!(make_field(2, 2, Some(&[1, 0, 1])).is_err());
        assert!(make_field(2, 3, Some(&[1, 1, 1])).is_err());
        assert!(FieldDesc::new(2, 64).is_err());
    }

    #[test]
    fn f4_square() {
        let k = FieldDesc::new(2, 2).unwrap();
        let b = k.gen();
        assert_eq!(k.mul(&b, &b), k.add(&b, &k.one()));
        assert_eq!(k.inv(&k.one()), Some(k.one()));
        assert_eq!(k.inv(&k.zero()), None);
    }

    #[test]
    fn f256_subfield_generator() {
        let f = f256();
        assert_eq!(f.primitive_element(), f.gen());
        let b = f.pow(&f.gen(), 85);
        let lhs = f.add(&f.add(&f.mul(&b, &b), &b), &f.one());
        assert!(f.is_zero(&lhs));
        assert_eq!(f.frobenius(&f.gen(), 2), f.pow(&f.gen(), 4));
        let x = FFElem(0x5b);
        assert_eq!(f.frobenius(&x, 0), x);
        assert_eq!(f.frobenius(&x, 8), x);
    }

    #[test]
    fn tables_agree_with_polynomial_basis() {
        for (p, m) in [(2u64, 4u32), (2, 8), (3, 3), (5, 2), (7, 3), (2, 11)] {
            let t = FieldDesc::new(p, m).unwrap();
            let s = FieldDesc::with_options(
                p,
                m,
                Some(t.modulus()),
                FieldOptions { force_poly: true, gen_name: None },
            )
            .unwrap();
            assert!(t.is_table_mode() && !s.is_table_mode());
            let mut rng = ChaCha8Rng::seed_from_u64(p * 100 + m as u64);
            for _ in 0..3000 {
                let x = t.random(&mut rng);
                let y = t.random(&mut rng);
                assert_eq!(t.add(&x, &y), s.add(&x, &y));
                assert_eq!(t.sub(&x, &y), s.sub(&x, &y));
                assert_eq!(t.mul(&x, &y), s.mul(&x, &y));
                assert_eq!(t.inv(&x), s.inv(&x));
                assert_eq!(t.neg(&x), s.neg(&x));
                let e = rng.gen_range(0..2 * m);
                assert_eq!(t.frobenius(&x, e), s.frobenius(&x, e));
                assert_eq!(t.pow(&x, 1000), s.pow(&x, 1000));
            }
        }
    }

    #[test]
    fn large_field_axioms() {
        let f = FieldDesc::new(2, 40).unwrap();
        assert!(!f.is_table_mode());
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..500 {
            let x = f.random_nonzero(&mut rng);
            let y = f.random(&mut rng);
            assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
            assert_eq!(
                f.frobenius(&f.mul(&x, &y), 7),
                f.mul(&f.frobenius(&x, 7), &f.frobenius(&y, 7))
            );
            assert_eq!(f.frobenius(&x, 3), f.pow(&x, 8));
        }
    }

    #[test]
    fn formatting() {
        let f = f256();
        assert_eq!(f.format(&FFElem(0b1010_1111)), "a^7 + a^5 + a^3 + a^2 + a + 1");
        assert_eq!(f.format(&FFElem(0)), "0");
        let g = FieldDesc::new(3, 2).unwrap();
        assert_eq!(g.format(&g.from_coeffs(&[1, 2])), "2*a + 1");
        assert_eq!(f.literal(), "GF(2^8; modulus=x^8 + x^4 + x^3 + x^2 + 1; var=a)");
    }
}
