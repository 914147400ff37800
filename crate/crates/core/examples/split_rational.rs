//! Splitting a polynomial over F_16(t) by a known central factor of its bound.

use orepoly::factor;
use orepoly::parse::{self, AnyRing};

fn main() -> orepoly::Result<()> {
    let AnyRing::Scaling(r) = parse::parse_ring("GF(2^4)(t); sigma: t -> a^5*t")? else { unreachable!() };
    let f = parse::parse_skew(&r, include_str!("../data/ratfun_split_f.txt"))?;
    let pi = parse::parse_central(&r, include_str!("../data/ratfun_split_p2.txt"))?;
    let (g, p) = factor::split_by_central(&r, &f, &pi)?;
    println!("g = {}", r.format(&g));
    println!("p = {}", r.format(&p));
    assert_eq!(r.mul(&g, &p), f);
    for h in [&g, &p] {
        let b = orepoly::bound::bound_v2(&r, h)?;
        println!("deg {} -> deg bound {}", h.deg().unwrap(), b.deg().unwrap());
    }
    Ok(())
}
