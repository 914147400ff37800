//! The fixed field `K = F^sigma` of a Frobenius power and coordinates of
//! `F` over `K` in the basis `1, a, ..., a^(mu-1)`.

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{Field, FiniteField};

use super::{FFElem, FieldDesc, FieldOptions, TABLE_LIMIT};

/// `K = F_{p^k}` inside `F = F_{p^m}`, with `k = gcd(m, s)` and `mu = m / k`.
#[derive(Clone, Debug)]
pub struct SubfieldMap {
    field: FieldDesc,
    sub: FieldDesc,
    s: u32,
    k_degree: u32,
    mu: usize,
    /// Powers `beta^j`, `j < k`, of the image of the generator of `K`.
    beta_pows: Vec<FFElem>,
    /// Inverse of the `F_p`-matrix whose column `i*k + j` is `beta^j a^i`.
    inv_basis: Vec<Vec<u64>>,
    expand_cache: Option<Vec<Vec<FFElem>>>,
    embed_cache: Option<Vec<FFElem>>,
    a_pows: Vec<FFElem>,
}

/// Builds the fixed field of `x -> x^(p^s)`; `s = 0` gives `K = F`.
pub fn invariant_subfield(field: &FieldDesc, s: u32) -> Result<SubfieldMap> {
    SubfieldMap::new(field, s)
}

impl SubfieldMap {
    pub fn new(field: &FieldDesc, s: u32) -> Result<Self> {
        let m = field.m();
        let p = field.p();
        if s >= m && !(m == 1 && s == 0) {
            return Err(Error::InvalidField(format!("Frobenius exponent {s} must lie in 0..{m}")));
        }
        let k_degree = if s == 0 { m } else { arith::gcd(m as u64, s as u64) as u32 };
        let mu = (m / k_degree) as usize;
        let a_pows: Vec<FFElem> = {
            let mut v = Vec::with_capacity(mu);
            let mut cur = field.one();
            for _ in 0..mu {
                v.push(cur);
                cur = field.mul(&cur, &field.gen());
            }
            v
        };
        let (sub, beta) = if k_degree == m {
            (field.clone(), field.gen())
        } else {
            let q = field.q();
            let qk = p.pow(k_degree);
            let beta = field.pow(&field.primitive_element(), (q - 1) / (qk - 1));
            let mut minpoly = vec![field.one()];
            for j in 0..k_degree {
                let root = field.neg(&field.frobenius(&beta, j));
                let mut next = vec![field.zero(); minpoly.len() + 1];
                for (i, c) in minpoly.iter().enumerate() {
                    next[i + 1] = field.add(&next[i + 1], c);
                    next[i] = field.add(&next[i], &field.mul(c, &root));
                }
                minpoly = next;
            }
            let md: Vec<u64> = minpoly
                .iter()
                .map(|c| {
                    let d = field.coeffs(c);
                    debug_assert!(d[1..].iter().all(|&x| x == 0));
                    d[0]
                })
                .collect();
            let sub = FieldDesc::with_options(
                p,
                k_degree,
                Some(&md),
                FieldOptions { force_poly: false, gen_name: Some("b".into()) },
            )?;
            (sub, beta)
        };
        let mut beta_pows = Vec::with_capacity(k_degree as usize);
        let mut cur = field.one();
        for _ in 0..k_degree {
            beta_pows.push(cur);
            cur = field.mul(&cur, &beta);
        }
        let md = m as usize;
        let kd = k_degree as usize;
        let mut basis = vec![vec![0u64; md]; md];
        for (i, ai) in a_pows.iter().enumerate() {
            for (j, bj) in beta_pows.iter().enumerate() {
                let col = field.coeffs(&field.mul(bj, ai));
                for (r, c) in col.into_iter().enumerate() {
                    basis[r][i * kd + j] = c;
                }
            }
        }
        let inv_basis = invert_mod_p(&basis, p).ok_or_else(|| {
            Error::Internal("a does not generate F over its invariant subfield".into())
        })?;
        let mut map = SubfieldMap {
            field: field.clone(),
            sub,
            s,
            k_degree,
            mu,
            beta_pows,
            inv_basis,
            expand_cache: None,
            embed_cache: None,
            a_pows,
        };
        if field.q() <= TABLE_LIMIT {
            let embed = (0..map.sub.q()).map(|i| map.embed_slow(&FFElem(i))).collect();
            let expand = (0..field.q()).map(|i| map.expand_slow(&FFElem(i))).collect();
            map.embed_cache = Some(embed);
            map.expand_cache = Some(expand);
        }
        let b = map.sub.gen();
        let eb = map.embed(&b);
        if field.frobenius(&eb, s) != eb {
            return Err(Error::Internal("subfield generator is not fixed".into()));
        }
        Ok(map)
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    /// The invariant subfield `K` as a field of its own.
    pub fn k_field(&self) -> &FieldDesc {
        &self.sub
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn k_degree(&self) -> u32 {
        self.k_degree
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn k_modulus(&self) -> &[u64] {
        self.sub.modulus()
    }

    /// `a^i` for `i < mu`.
    pub fn a_powers(&self) -> &[FFElem] {
        &self.a_pows
    }

    pub fn embed(&self, x: &FFElem) -> FFElem {
        match &self.embed_cache {
            Some(t) => t[x.0 as usize],
            None => self.embed_slow(x),
        }
    }

    fn embed_slow(&self, x: &FFElem) -> FFElem {
        let f = &self.field;
        let mut acc = f.zero();
        for (c, bj) in self.sub.coeffs(x).into_iter().zip(&self.beta_pows) {
            if c != 0 {
                acc = f.add(&acc, &f.mul(&f.from_int(c as i64), bj));
            }
        }
        acc
    }

    /// Coordinates `(k_0, ..., k_{mu-1})` with `x = sum k_i a^i`.
    pub fn expand(&self, x: &FFElem) -> Vec<FFElem> {
        match &self.expand_cache {
            Some(t) => t[x.0 as usize].clone(),
            None => self.expand_slow(x),
        }
    }

    /// Coordinate `i` of [`expand`](Self::expand).
    pub fn expand_at(&self, x: &FFElem, i: usize) -> FFElem {
        match &self.expand_cache {
            Some(t) => t[x.0 as usize][i],
            None => self.expand_slow(x)[i],
        }
    }

    fn expand_slow(&self, x: &FFElem) -> Vec<FFElem> {
        let p = self.field.p();
        let v = self.field.coeffs(x);
        let kd = self.k_degree as usize;
        let mut w = vec![0u64; v.len()];
        for (r, row) in self.inv_basis.iter().enumerate() {
            let mut acc: u128 = 0;
            for (c, &vc) in row.iter().zip(&v) {
                acc += *c as u128 * vc as u128;
            }
            w[r] = (acc % p as u128) as u64;
        }
        (0..self.mu).map(|i| self.sub.from_coeffs(&w[i * kd..(i + 1) * kd])).collect()
    }

    /// Inverse of [`expand`](Self::expand).
    pub fn contract(&self, ks: &[FFElem]) -> FFElem {
        let f = &self.field;
        ks.iter()
            .zip(&self.a_pows)
            .fold(f.zero(), |acc, (k, ai)| f.add(&acc, &f.mul(&self.embed(k), ai)))
    }

    /// The preimage in `K` of a fixed element, `None` otherwise.
    pub fn section(&self, x: &FFElem) -> Option<FFElem> {
        if self.field.frobenius(x, self.k_degree) != *x {
            return None;
        }
        Some(self.expand_at(x, 0))
    }
}

/// Inverse of a square matrix over `F_p`.
fn invert_mod_p(a: &[Vec<u64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let n = a.len();
    let pm = p as u128;
    let mut m: Vec<Vec<u64>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    let inv = |x: u64| -> u64 {
        let mut base = x as u128;
        let mut e = p - 2;
        let mut acc: u128 = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % pm;
            }
            base = base * base % pm;
            e >>= 1;
        }
        acc as u64
    };
    for col in 0..n {
        let piv = (col..n).find(|&r| m[r][col] != 0)?;
        m.swap(col, piv);
        let iv = inv(m[col][col]) as u128;
        for x in m[col].iter_mut() {
            *x = (*x as u128 * iv % pm) as u64;
        }
        for r in 0..n {
            if r != col && m[r][col] != 0 {
                let c = m[r][col] as u128;
                let pivot_row = m[col].clone();
                for (x, pv) in m[r].iter_mut().zip(pivot_row) {
                    *x = ((*x as u128 + (pm - c) * pv as u128) % pm) as u64;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}
