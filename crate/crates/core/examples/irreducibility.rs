//! Irreducibility test and factor counts from the bound.

use orepoly::factor;
use orepoly::parse::{self, AnyRing};

const RING: &str = "GF(2^8; modulus=x^8 + x^4 + x^3 + x^2 + 1; var=a); frobenius=2";

fn main() -> orepoly::Result<()> {
    let AnyRing::Frobenius(r) = parse::parse_ring(RING)? else { unreachable!() };
    let cases = [
        ("X + a^7 + a^5 + a^3 + a^2 + a + 1", "linear"),
        ("X^2", "power of X"),
        (include_str!("../data/f256_f4.txt"), "central, degree 20"),
        (include_str!("../data/f256_f6.txt"), "degree 42"),
    ];
    for (src, what) in cases {
        let f = parse::parse_skew(&r, src)?;
        let irr = factor::is_irreducible(&r, &f)?;
        match factor::num_factors(&r, &f) {
            Ok(t) => println!("{what}: irreducible = {irr}, factors = {t}"),
            Err(_) => println!("{what}: irreducible = {irr}"),
        }
    }
    Ok(())
}
