//! Bound of a degree-100 polynomial over F_256 with sigma(x) = x^4.

use std::time::Instant;

use orepoly::bound::{self, Algorithm};
use orepoly::ffield::cpoly;
use orepoly::parse::{self, AnyRing};

const RING: &str = "GF(2^8; modulus=x^8 + x^4 + x^3 + x^2 + 1; var=a); frobenius=2";

fn main() -> orepoly::Result<()> {
    let AnyRing::Frobenius(r) = parse::parse_ring(RING)? else { unreachable!() };
    let f = parse::parse_skew(&r, include_str!("../data/f256_f.txt"))?;
    for alg in [Algorithm::V1, Algorithm::V2] {
        let t = Instant::now();
        let b = bound::bound(&r, &f, alg)?;
        println!("{alg:?}: deg f* = {:?} in {:.1?}", b.deg(), t.elapsed());
    }
    let (_, cf) = bound::central_bound(&r, &f, Algorithm::V2)?;
    println!("f* = fhat(X^4) with fhat =\n{}", cpoly::format(r.center(), &cf.fhat, "z"));
    let oracle = bound::oracle_min_central(&r, &f)?;
    println!("linear algebra agrees: {}", oracle == cf.fhat);
    Ok(())
}
