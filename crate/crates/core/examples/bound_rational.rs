//! Bound over F_16(t) with sigma(t) = a^5 t, an automorphism of order 3.

use orepoly::bound;
use orepoly::parse::{self, AnyRing};
use orepoly::skewcore::Twist;
use orepoly::Field;

fn main() -> orepoly::Result<()> {
    let AnyRing::Scaling(r) = parse::parse_ring("GF(2^4; modulus=x^4 + x + 1)(t); sigma: t -> a^5*t")? else {
        unreachable!()
    };
    println!("{}", r.twist().literal());
    let f = parse::parse_skew(&r, include_str!("../data/ratfun_bound_f.txt"))?;
    println!("f = {}", r.format(&f));
    let b = bound::bound_v2(&r, &f)?;
    println!("deg f* = {:?}", b.deg());
    for (i, c) in b.coeffs().iter().enumerate().rev() {
        if !r.field().is_zero(c) {
            println!("  X^{i}: {}", r.field().format(c));
        }
    }
    let cf = bound::centralize(&r, &b)?;
    println!("f* in the center: {}", orepoly::ffield::cpoly::format(r.center(), &cf.fhat, "z"));
    Ok(())
}
