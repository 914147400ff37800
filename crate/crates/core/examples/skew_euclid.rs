//! Products, left division and the extended Euclidean algorithm in F_4[X; Frobenius].

use orepoly::parse::{self, AnyRing};

fn main() -> orepoly::Result<()> {
    let AnyRing::Frobenius(r) = parse::parse_ring("GF(2^2); frobenius=1")? else { unreachable!() };
    let p = |s: &str| parse::parse_skew(&r, s);

    // X a = a^2 X: coefficients do not commute with X.
    println!("X * a = {}", r.format(&p("X a")?));
    println!("(X + 1)^2 = {}", r.format(&r.pow(&p("X + 1")?, 2)));

    let f = p("X^4 + a X^3 + X + a + 1")?;
    let g = p("X^2 + (a + 1) X + a")?;
    let (q, rem) = r.ldivrem(&f, &g)?;
    println!("f = ({}) g + ({})", r.format(&q), r.format(&rem));

    let e = r.leea(&f, &g)?;
    println!("rgcd = {}", r.format(&e.rgcd));
    println!("u = {}, v = {}", r.format(&e.u), r.format(&e.v));
    println!("llcm = {}", r.format(&e.llcm));
    assert_eq!(r.add(&r.mul(&e.u, &f), &r.mul(&e.v, &g)), e.rgcd);
    Ok(())
}
