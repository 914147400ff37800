//! Literal syntax for fields, rings and polynomials.
//!
//! Expressions use `+ - * / ^`, parentheses, integers, identifiers and
//! juxtaposition (`a^3 t` means `a^3 * t`). One grammar serves every target;
//! an [`Eval`] implementation decides what identifiers and operators mean.

use crate::error::{Error, Result};
use crate::ffield::cpoly::ComPoly;
use crate::ffield::{FFElem, FieldDesc, FieldOptions};
use crate::field::Field;
use crate::ratfun::{RatFun, RationalFunctionField, ScalingTwist};
use crate::skewcore::{Coef, FiniteSkewRing, FrobeniusTwist, SkewPoly, SkewRing, Twist};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Int(u64),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    /// Byte offset of the first token.
    pub pos: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str, offset: usize) -> Result<Vec<(Tok, usize)>> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let n = src[start..i]
                .parse()
                .map_err(|_| Error::parse(offset + start, "integer literal too large"))?;
            out.push((Tok::Int(n), offset + start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), offset + start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), offset + start));
            i += 1;
        } else {
            return Err(Error::parse(offset + start, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let pos = self.pos();
            if self.eat('+') {
                let rhs = self.term()?;
                lhs = Expr { kind: ExprKind::Add(Box::new(lhs), Box::new(rhs)), pos };
            } else if self.eat('-') {
                let rhs = self.term()?;
                lhs = Expr { kind: ExprKind::Sub(Box::new(lhs), Box::new(rhs)), pos };
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let pos = self.pos();
            let kind = if self.eat('*') {
                ExprKind::Mul(Box::new(lhs), Box::new(self.unary()?))
            } else if self.eat('/') {
                ExprKind::Div(Box::new(lhs), Box::new(self.unary()?))
            } else if matches!(self.peek(), Some(Tok::Int(_) | Tok::Ident(_) | Tok::Sym('('))) {
                ExprKind::Mul(Box::new(lhs), Box::new(self.power()?))
            } else {
                return Ok(lhs);
            };
            lhs = Expr { kind, pos };
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        let pos = self.pos();
        if self.eat('-') {
            Ok(Expr { kind: ExprKind::Neg(Box::new(self.unary()?)), pos })
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        let pos = self.pos();
        if !self.eat('^') {
            return Ok(base);
        }
        match self.peek().cloned() {
            Some(Tok::Int(e)) => {
                self.at += 1;
                Ok(Expr { kind: ExprKind::Pow(Box::new(base), e), pos })
            }
            _ => Err(Error::parse(self.pos(), "expected a non-negative integer exponent")),
        }
    }

    fn primary(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(Expr { kind: ExprKind::Int(n), pos })
            }
            Some(Tok::Ident(s)) => {
                self.at += 1;
                Ok(Expr { kind: ExprKind::Var(s), pos })
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::parse(self.pos(), "expected ')'"));
                }
                Ok(e)
            }
            Some(t) => Err(Error::parse(pos, format!("unexpected {t:?}"))),
            None => Err(Error::parse(pos, "unexpected end of input")),
        }
    }
}

/// Parses an expression; positions are offset by `offset`.
pub fn parse_expr_at(src: &str, offset: usize) -> Result<Expr> {
    let toks = tokenize(src, offset)?;
    let mut p = Parser { toks, at: 0, end: offset + src.len() };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return Err(Error::parse(p.pos(), "trailing input"));
    }
    Ok(e)
}

pub fn parse_expr(src: &str) -> Result<Expr> {
    parse_expr_at(src, 0)
}

/// Meaning of the expression grammar in some target ring.
pub trait Eval {
    type V: Clone;
    fn int(&self, n: u64) -> Self::V;
    fn var(&self, name: &str, pos: usize) -> Result<Self::V>;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn sub(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn neg(&self, a: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn div(&self, a: &Self::V, b: &Self::V, pos: usize) -> Result<Self::V>;

    fn pow(&self, a: &Self::V, mut e: u64) -> Self::V {
        let mut acc = self.int(1);
        let mut base = a.clone();
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

    fn eval(&self, e: &Expr) -> Result<Self::V> {
        Ok(match &e.kind {
            ExprKind::Int(n) => self.int(*n),
            ExprKind::Var(s) => self.var(s, e.pos)?,
            ExprKind::Neg(a) => self.neg(&self.eval(a)?),
            ExprKind::Add(a, b) => self.add(&self.eval(a)?, &self.eval(b)?),
            ExprKind::Sub(a, b) => self.sub(&self.eval(a)?, &self.eval(b)?),
            ExprKind::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?),
            ExprKind::Div(a, b) => self.div(&self.eval(a)?, &self.eval(b)?, e.pos)?,
            ExprKind::Pow(a, n) => self.pow(&self.eval(a)?, *n),
        })
    }

    fn parse(&self, src: &str) -> Result<Self::V> {
        self.eval(&parse_expr(src)?)
    }
}

/// Fields whose elements have named generators.
pub trait Named: Field {
    fn atom(&self, name: &str) -> Option<Self::Elem>;
}

impl Named for FieldDesc {
    fn atom(&self, name: &str) -> Option<FFElem> {
        (self.m() > 1 && name == self.gen_name()).then(|| self.gen())
    }
}

impl Named for RationalFunctionField {
    fn atom(&self, name: &str) -> Option<RatFun> {
        if name == self.var() {
            Some(self.gen())
        } else {
            self.base().atom(name).map(|c| self.from_base(&c))
        }
    }
}

fn int_in<F: Field>(k: &F, n: u64) -> F::Elem {
    k.from_int((n % k.characteristic()) as i64)
}

/// Elements of a field.
pub struct FieldEval<'a, F>(pub &'a F);

impl<F: Named> Eval for FieldEval<'_, F> {
    type V = F::Elem;
    fn int(&self, n: u64) -> F::Elem {
        int_in(self.0, n)
    }
    fn var(&self, name: &str, pos: usize) -> Result<F::Elem> {
        self.0.atom(name).ok_or_else(|| Error::parse(pos, format!("unknown identifier '{name}'")))
    }
    fn add(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.0.add(a, b)
    }
    fn sub(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.0.sub(a, b)
    }
    fn neg(&self, a: &F::Elem) -> F::Elem {
        self.0.neg(a)
    }
    fn mul(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.0.mul(a, b)
    }
    fn div(&self, a: &F::Elem, b: &F::Elem, pos: usize) -> Result<F::Elem> {
        self.0.div(a, b).ok_or_else(|| Error::parse(pos, "division by zero"))
    }
}

/// Commutative polynomials over a field in a named variable.
pub struct PolyEval<'a, F> {
    pub k: &'a F,
    pub var: &'a str,
}

impl<F: Named> Eval for PolyEval<'_, F> {
    type V = ComPoly<F::Elem>;
    fn int(&self, n: u64) -> Self::V {
        ComPoly::constant(self.k, int_in(self.k, n))
    }
    fn var(&self, name: &str, pos: usize) -> Result<Self::V> {
        if name == self.var {
            return Ok(ComPoly::var(self.k));
        }
        self.k
            .atom(name)
            .map(|c| ComPoly::constant(self.k, c))
            .ok_or_else(|| Error::parse(pos, format!("unknown identifier '{name}'")))
    }
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V {
        crate::ffield::cpoly::add(self.k, a, b)
    }
    fn sub(&self, a: &Self::V, b: &Self::V) -> Self::V {
        crate::ffield::cpoly::sub(self.k, a, b)
    }
    fn neg(&self, a: &Self::V) -> Self::V {
        crate::ffield::cpoly::neg(self.k, a)
    }
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V {
        crate::ffield::cpoly::mul(self.k, a, b)
    }
    fn div(&self, a: &Self::V, b: &Self::V, pos: usize) -> Result<Self::V> {
        let c = match b.deg() {
            Some(0) => &b.coeffs()[0],
            Some(_) => return Err(Error::parse(pos, "division by a non-constant polynomial")),
            None => return Err(Error::parse(pos, "division by zero")),
        };
        let inv = self.k.inv(c).expect("nonzero constant");
        Ok(crate::ffield::cpoly::scale(self.k, &inv, a))
    }
}

/// Skew polynomials in `X`; juxtaposition is the skew product, and `f / c`
/// is `f c^(-1)` for a nonzero constant `c`.
pub struct SkewEval<'a, T: Twist>(pub &'a SkewRing<T>);

impl<T: Twist> Eval for SkewEval<'_, T>
where
    T::F: Named,
{
    type V = SkewPoly<Coef<T>>;
    fn int(&self, n: u64) -> Self::V {
        self.0.constant(int_in(self.0.field(), n))
    }
    fn var(&self, name: &str, pos: usize) -> Result<Self::V> {
        if name == "X" {
            return Ok(self.0.x());
        }
        self.0
            .field()
            .atom(name)
            .map(|c| self.0.constant(c))
            .ok_or_else(|| Error::parse(pos, format!("unknown identifier '{name}'")))
    }
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V {
        self.0.add(a, b)
    }
    fn sub(&self, a: &Self::V, b: &Self::V) -> Self::V {
        self.0.sub(a, b)
    }
    fn neg(&self, a: &Self::V) -> Self::V {
        self.0.neg(a)
    }
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V {
        self.0.mul(a, b)
    }
    fn div(&self, a: &Self::V, b: &Self::V, pos: usize) -> Result<Self::V> {
        let c = match b.deg() {
            Some(0) => &b.coeffs()[0],
            Some(_) => return Err(Error::parse(pos, "division by a non-constant polynomial")),
            None => return Err(Error::parse(pos, "division by zero")),
        };
        let inv = self.0.field().inv(c).expect("nonzero constant");
        Ok(self.0.mul_const_right(a, &inv))
    }
}

/// A skew polynomial in `X` over the ring's coefficient field.
pub fn parse_skew<T: Twist>(ring: &SkewRing<T>, src: &str) -> Result<SkewPoly<Coef<T>>>
where
    T::F: Named,
{
    SkewEval(ring).parse(src)
}

/// A central polynomial in `z` over the invariant field.
pub fn parse_central<T: Twist>(ring: &SkewRing<T>, src: &str) -> Result<ComPoly<<T::K as Field>::Elem>>
where
    T::K: Named,
{
    PolyEval { k: ring.center(), var: "z" }.parse(src)
}

/// A field element in the field's generator.
pub fn parse_element<F: Named>(k: &F, src: &str) -> Result<F::Elem> {
    FieldEval(k).parse(src)
}

/// Splits `s` at top-level occurrences of `sep`.
fn split_top(s: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

fn is_ident(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(x) if x.is_ascii_alphabetic() || x == '_')
        && c.all(|x| x.is_ascii_alphanumeric() || x == '_')
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = crate::arith::prime_divisors(q).into_iter().next()?;
    let (mut r, mut m) = (q, 0);
    while r % p == 0 {
        r /= p;
        m += 1;
    }
    (r == 1).then_some((p, m))
}

/// Parses `GF(p^m; modulus=<poly in x>; var=a)` at the start of `src` and
/// returns the field with the number of bytes consumed.
pub fn parse_field_prefix(src: &str) -> Result<(FieldDesc, usize)> {
    let lead = src.len() - src.trim_start().len();
    let s = &src[lead..];
    if !s.starts_with("GF") {
        return Err(Error::parse(lead, "expected GF(...)"));
    }
    let open = lead + 2 + (s[2..].len() - s[2..].trim_start().len());
    if !src[open..].starts_with('(') {
        return Err(Error::parse(open, "expected '(' after GF"));
    }
    let mut depth = 0;
    let mut close = None;
    for (i, c) in src[open..].char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    close = Some(open + i);
                    break;
                }
            }
            _ => {}
        }
    }
    let close = close.ok_or_else(|| Error::parse(src.len(), "unbalanced parentheses in field literal"))?;
    let inner_at = open + 1;
    let parts = split_top(&src[inner_at..close], ';');
    let (p, m) = {
        let (off, head) = parts[0];
        let at = inner_at + off;
        let nums: Vec<&str> = head.split('^').map(str::trim).collect();
        let num = |t: &str| t.parse::<u64>().map_err(|_| Error::parse(at, format!("expected an integer, found '{t}'")));
        match nums.as_slice() {
            [p, m] => {
                let m = num(m)?;
                let m = u32::try_from(m).map_err(|_| Error::InvalidField("extension degree too large".into()))?;
                (num(p)?, m)
            }
            [q] => prime_power(num(q)?).ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?,
            _ => return Err(Error::parse(at, "expected p^m")),
        }
    };
    if !crate::arith::is_prime(p) {
        return Err(Error::InvalidField(format!("{p} is not prime")));
    }
    let mut modulus = None;
    let mut opts = FieldOptions::default();
    for &(off, part) in &parts[1..] {
        let at = inner_at + off;
        let (key, value) = part.split_once('=').ok_or_else(|| Error::parse(at, "expected key=value"))?;
        let vat = at + key.len() + 1;
        match key.trim() {
            "modulus" => {
                let fp = FieldDesc::prime(p)?;
                let expr = parse_expr_at(value, vat)?;
                let poly = PolyEval { k: &fp, var: "x" }.eval(&expr)?;
                modulus = Some(poly.coeffs().iter().map(|c| c.0).collect::<Vec<u64>>());
            }
            "var" => {
                let v = value.trim();
                if !is_ident(v) || v == "X" {
                    return Err(Error::parse(vat, format!("invalid generator name '{v}'")));
                }
                opts.gen_name = Some(v.to_string());
            }
            k => return Err(Error::parse(at, format!("unknown field option '{k}'"))),
        }
    }
    let field = FieldDesc::with_options(p, m, modulus.as_deref(), opts)?;
    Ok((field, close + 1))
}

pub fn parse_field(src: &str) -> Result<FieldDesc> {
    let (f, used) = parse_field_prefix(src)?;
    if !src[used..].trim().is_empty() {
        return Err(Error::parse(used, "trailing input after field literal"));
    }
    Ok(f)
}

/// A skew polynomial ring of either supported kind.
#[derive(Clone, Debug)]
pub enum AnyRing {
    /// `F_q[X; x -> x^(p^s)]`.
    Frobenius(FiniteSkewRing),
    /// `F_q(t)[X; t -> c t]`.
    Scaling(SkewRing<ScalingTwist>),
}

impl AnyRing {
    pub fn literal(&self) -> String {
        match self {
            AnyRing::Frobenius(r) => r.twist().literal(),
            AnyRing::Scaling(r) => r.twist().literal(),
        }
    }
}

/// Parses `<field>; frobenius=s` or `<field>(t); sigma: t -> c*t`.
pub fn parse_ring(src: &str) -> Result<AnyRing> {
    let (field, mut used) = parse_field_prefix(src)?;
    let rest = &src[used..];
    let trimmed = rest.trim_start();
    let mut rational = false;
    if trimmed.starts_with('(') {
        let at = used + rest.len() - trimmed.len();
        let end = trimmed.find(')').ok_or_else(|| Error::parse(at, "expected ')'"))?;
        let var = trimmed[1..end].trim();
        if var != "t" {
            return Err(Error::Unsupported(format!("rational function variable '{var}'; use t")));
        }
        rational = true;
        used = at + end + 1;
    }
    let rest = &src[used..];
    let trimmed = rest.trim_start();
    let at = used + rest.len() - trimmed.len();
    let Some(body) = trimmed.strip_prefix(';') else {
        return Err(Error::parse(at, "expected '; frobenius=s' or '; sigma: t -> c*t'"));
    };
    let body_at = at + 1;
    let twist_src = body.trim();
    let twist_at = body_at + body.len() - body.trim_start().len();
    if rational {
        let tail = twist_src
            .strip_prefix("sigma")
            .map(str::trim_start)
            .and_then(|s| s.strip_prefix(':'))
            .map(str::trim_start)
            .and_then(|s| s.strip_prefix('t'))
            .map(str::trim_start)
            .and_then(|s| s.strip_prefix("->"))
            .ok_or_else(|| Error::parse(twist_at, "expected 'sigma: t -> c*t'"))?;
        let img_at = twist_at + twist_src.len() - tail.len();
        let rf = RationalFunctionField::new(&field, "t");
        let img = FieldEval(&rf).eval(&parse_expr_at(tail, img_at)?)?;
        let k = &field;
        let is_scaling = crate::ffield::cpoly::is_one(k, img.den())
            && img.num().deg() == Some(1)
            && k.is_zero(&img.num().coeffs()[0]);
        if !is_scaling {
            return Err(Error::Unsupported("sigma must map t to c*t with c a nonzero constant".into()));
        }
        let c = img.num().coeffs()[1];
        Ok(AnyRing::Scaling(SkewRing::new(ScalingTwist::new(&field, c)?)))
    } else {
        let value = twist_src
            .strip_prefix("frobenius")
            .map(str::trim_start)
            .and_then(|s| s.strip_prefix('='))
            .ok_or_else(|| Error::parse(twist_at, "expected 'frobenius=s'"))?;
        let s: u32 = value
            .trim()
            .parse()
            .map_err(|_| Error::parse(twist_at, format!("invalid frobenius exponent '{}'", value.trim())))?;
        Ok(AnyRing::Frobenius(SkewRing::new(FrobeniusTwist::new(&field, s)?)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        let k = FieldDesc::new(2, 8).unwrap();
        let e = parse_element(&k, "a^7+a^5+a^3+a^2+a+1").unwrap();
        assert_eq!(k.format(&e), "a^7 + a^5 + a^3 + a^2 + a + 1");
        assert_eq!(parse_element(&k, "(a+1)(a+1)").unwrap(), parse_element(&k, "a^2+1").unwrap());
        assert_eq!(parse_element(&k, "a/a").unwrap(), k.one());
        assert_eq!(parse_element(&k, "3").unwrap(), k.one());
        assert!(matches!(parse_element(&k, "a + b"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_element(&k, "a +"), Err(Error::Parse { .. })));
        assert!(matches!(parse_element(&k, "a/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_element(&k, "a $"), Err(Error::Parse { pos: 2, .. })));
        let f9 = FieldDesc::new(3, 2).unwrap();
        assert_eq!(parse_element(&f9, "-a - 1").unwrap(), parse_element(&f9, "2a+2").unwrap());
    }

    #[test]
    fn field_literals() {
        assert_eq!(parse_field("GF(2^2)").unwrap().modulus(), &[1, 1, 1]);
        let f = parse_field("GF(2^8; modulus=x^8 + x^4 + x^3 + x^2 + 1; var=a)").unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1, 1, 1, 0, 0, 0, 1]);
        assert_eq!(parse_field(&f.literal()).unwrap(), f);
        assert_eq!(parse_field("GF(9)").unwrap().q(), 9);
        assert!(matches!(parse_field("GF(6)"), Err(Error::InvalidField(_))));
        assert!(matches!(parse_field("GF(4^2)"), Err(Error::InvalidField(_))));
        assert!(matches!(parse_field("GF(2^2; modulus=x^2+1)"), Err(Error::InvalidField(_))));
        assert!(matches!(parse_field("GF(2^2; colour=red)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_field("GF(2^2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn ring_literals() {
        let AnyRing::Frobenius(r) = parse_ring("GF(2^2) ; frobenius=1").unwrap() else { panic!() };
        let f = parse_skew(&r, "X^2 + 1").unwrap();
        assert_eq!(r.format(&f), "X^2 + 1");
        let g = parse_skew(&r, "X a").unwrap();
        assert_eq!(g, r.monomial(r.field().pow(&r.field().gen(), 2), 1));
        assert_eq!(parse_ring(&AnyRing::Frobenius(r).literal()).unwrap().literal(), "GF(2^2; modulus=x^2 + x + 1; var=a); frobenius=1");
        let lit = "GF(2^4; modulus=x^4+x+1)(t); sigma: t -> a^5*t";
        let AnyRing::Scaling(rs) = parse_ring(lit).unwrap() else { panic!() };
        assert_eq!(rs.mu(), 3);
        let again = parse_ring(&rs.twist().literal()).unwrap();
        assert_eq!(again.literal(), rs.twist().literal());
        let h = parse_skew(&rs, "((t^2 + 1)/(a t)) X + t").unwrap();
        assert_eq!(parse_skew(&rs, &rs.format(&h)).unwrap(), h);
        assert!(matches!(parse_ring("GF(2^4)(t); sigma: t -> t^2"), Err(Error::Unsupported(_))));
        assert!(parse_ring("GF(2^4); frobenius=x").is_err());
        let z = parse_central(&rs, "z^2 + s z + a").unwrap();
        assert_eq!(z.deg(), Some(2));
    }
}
