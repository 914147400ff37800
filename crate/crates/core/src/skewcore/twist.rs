//! Automorphism descriptors: how `sigma` acts on coefficients and how the
//! fixed field `K` sits inside the coefficient field.

use std::fmt::Debug;

use crate::error::Result;
use crate::ffield::{FFElem, FieldDesc, SubfieldMap};
use crate::field::{Field, FiniteField};

/// Coefficient type of a twisted ring.
pub type Coef<T> = <<T as Twist>::F as Field>::Elem;
/// Element type of the fixed field `K`.
pub type Cen<T> = <<T as Twist>::K as Field>::Elem;

/// An automorphism `sigma` of finite order `mu` on a commutative field `D`.
/// The center of `D[X; sigma]` is `K[z]` with `K = D^sigma` and `z = X^mu`.
pub trait Twist: Clone + Debug + Send + Sync {
    type F: Field;
    type K: Field;

    fn field(&self) -> &Self::F;
    fn center(&self) -> &Self::K;
    fn mu(&self) -> usize;

    /// `sigma^e(x)`, with `e` read modulo `mu`.
    fn sigma_pow(&self, x: &Coef<Self>, e: usize) -> Coef<Self>;

    /// The preimage of `x` in `K`, `None` when `x` is not fixed.
    fn to_center(&self, x: &Coef<Self>) -> Option<Cen<Self>>;
    fn from_center(&self, k: &Cen<Self>) -> Coef<Self>;

    /// Coefficients `d` such that `{d, X}` generates the ring as an algebra
    /// over its center.
    fn algebra_generators(&self) -> Vec<Coef<Self>>;

    /// Coefficients `c_i` such that `{c_i X^j : i, j < mu}` generates the
    /// ring as a module over its center.
    fn module_coefficients(&self) -> Vec<Coef<Self>>;

    /// Ring literal accepted by the parser.
    fn literal(&self) -> String;

    /// Display name of the central variable of `K`, if any.
    fn center_var(&self) -> &str;
}

/// `sigma(x) = x^(p^s)` on `F_{p^m}`.
#[derive(Clone, Debug)]
pub struct FrobeniusTwist {
    map: SubfieldMap,
    /// `s * e mod m` for `e < mu`.
    exps: Vec<u32>,
}

impl FrobeniusTwist {
    pub fn new(field: &FieldDesc, s: u32) -> Result<Self> {
        let s = s % field.m();
        let map = SubfieldMap::new(field, s)?;
        let exps = (0..map.mu() as u32).map(|e| (s * e) % field.m()).collect();
        Ok(FrobeniusTwist { map, exps })
    }

    pub fn subfield(&self) -> &SubfieldMap {
        &self.map
    }

    pub fn s(&self) -> u32 {
        self.map.s()
    }
}

impl Twist for FrobeniusTwist {
    type F = FieldDesc;
    type K = FieldDesc;

    fn field(&self) -> &FieldDesc {
        self.map.field()
    }

    fn center(&self) -> &FieldDesc {
        self.map.k_field()
    }

    fn mu(&self) -> usize {
        self.map.mu()
    }

    fn sigma_pow(&self, x: &FFElem, e: usize) -> FFElem {
        let e = self.exps[e % self.exps.len()];
        if e == 0 {
            *x
        } else {
            self.map.field().frobenius(x, e)
        }
    }

    fn to_center(&self, x: &FFElem) -> Option<FFElem> {
        self.map.section(x)
    }

    fn from_center(&self, k: &FFElem) -> FFElem {
        self.map.embed(k)
    }

    fn algebra_generators(&self) -> Vec<FFElem> {
        vec![self.map.field().gen()]
    }

    fn module_coefficients(&self) -> Vec<FFElem> {
        self.map.a_powers().to_vec()
    }

    fn literal(&self) -> String {
        format!("{}; frobenius={}", self.map.field().literal(), self.map.s())
    }

    fn center_var(&self) -> &str {
        self.map.k_field().gen_name()
    }
}
