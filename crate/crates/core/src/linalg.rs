//! Dense linear algebra over an arbitrary field.

use crate::field::Field;

/// An incrementally built echelon basis that remembers how each stored row
/// was obtained from the inserted vectors.
#[derive(Clone, Debug)]
pub struct Span<F: Field> {
    k: F,
    rows: Vec<(usize, Vec<F::Elem>, Vec<F::Elem>)>,
    inserted: usize,
    independent: Vec<usize>,
}

/// Outcome of [`Span::insert`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert<E> {
    /// The vector was independent and is now part of the basis.
    Added,
    /// The vector equals `sum c_i v_i` over the previously inserted vectors.
    Dependent(Vec<E>),
}

impl<F: Field> Span<F> {
    pub fn new(k: &F) -> Self {
        Span { k: k.clone(), rows: Vec::new(), inserted: 0, independent: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Positions (in insertion order) of the vectors kept as independent.
    pub fn independent(&self) -> &[usize] {
        &self.independent
    }

    /// Reduces `v`; returns the residue and the combination (over inserted
    /// vectors, with the new vector at index `inserted`) that produced it.
    fn reduce(&self, v: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let k = &self.k;
        let mut v = v.to_vec();
        let mut combo = vec![k.zero(); self.inserted + 1];
        combo[self.inserted] = k.one();
        for (piv, row, rc) in &self.rows {
            if k.is_zero(&v[*piv]) {
                continue;
            }
            let c = k.div(&v[*piv], &row[*piv]).expect("pivot is nonzero");
            for (x, r) in v.iter_mut().zip(row) {
                if !k.is_zero(r) {
                    *x = k.sub(x, &k.mul(&c, r));
                }
            }
            for (x, r) in combo.iter_mut().zip(rc) {
                if !k.is_zero(r) {
                    *x = k.sub(x, &k.mul(&c, r));
                }
            }
        }
        (v, combo)
    }

    pub fn insert(&mut self, v: &[F::Elem]) -> Insert<F::Elem> {
        let (res, mut combo) = self.reduce(v);
        match res.iter().position(|x| !self.k.is_zero(x)) {
            Some(piv) => {
                self.independent.push(self.inserted);
                self.inserted += 1;
                for (_, _, rc) in self.rows.iter_mut() {
                    rc.push(self.k.zero());
                }
                self.rows.push((piv, res, combo));
                Insert::Added
            }
            None => {
                combo.pop();
                let coeffs = combo.iter().map(|c| self.k.neg(c)).collect();
                self.inserted += 1;
                for (_, _, rc) in self.rows.iter_mut() {
                    rc.push(self.k.zero());
                }
                Insert::Dependent(coeffs)
            }
        }
    }

    /// Coefficients of `v` over the inserted vectors when `v` lies in the span.
    pub fn express(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let (res, mut combo) = self.reduce(v);
        if res.iter().any(|x| !self.k.is_zero(x)) {
            return None;
        }
        combo.pop();
        Some(combo.iter().map(|c| self.k.neg(c)).collect())
    }
}

/// Solves `a x = b` for an `n x m` matrix given by rows; free variables are
/// set to zero. `None` when the system is inconsistent.
pub fn solve<F: Field>(k: &F, a: &[Vec<F::Elem>], b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let n = a.len();
    let m = a.first().map_or(0, |r| r.len());
    let mut rows: Vec<Vec<F::Elem>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..m {
        let Some(piv) = (r..n).find(|&i| !k.is_zero(&rows[i][col])) else { continue };
        rows.swap(r, piv);
        let inv = k.inv(&rows[r][col]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = k.mul(x, &inv);
        }
        let prow = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || k.is_zero(&row[col]) {
                continue;
            }
            let c = row[col].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !k.is_zero(p) {
                    *x = k.sub(x, &k.mul(&c, p));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == n {
            break;
        }
    }
    if rows[r..].iter().any(|row| !k.is_zero(&row[m])) {
        return None;
    }
    let mut x = vec![k.zero(); m];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = rows[i][m].clone();
    }
    Some(x)
}

pub fn rank<F: Field>(k: &F, vs: &[Vec<F::Elem>]) -> usize {
    let mut s = Span::new(k);
    for v in vs {
        s.insert(v);
    }
    s.rank()
}
