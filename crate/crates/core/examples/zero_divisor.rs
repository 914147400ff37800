//! The simple algebra R / R f4 and a zero divisor that splits f4.

use orepoly::csimple;
use orepoly::parse::{self, AnyRing};

const RING: &str = "GF(2^8; modulus=x^8 + x^4 + x^3 + x^2 + 1; var=a); frobenius=2";

fn main() -> orepoly::Result<()> {
    let AnyRing::Frobenius(r) = parse::parse_ring(RING)? else { unreachable!() };
    let pi = parse::parse_central(&r, "z^5 + (b + 1) z^4 + b z^3 + (b + 1) z + b")?;
    let f4 = r.lift_central(&pi);
    let sa = csimple::alg_build(&r, &pi)?;
    let alg = sa.algebra();
    println!("dim A = {} over a field of {} elements", alg.dim(), 4u64.pow(5));

    let (zeta, eta) = csimple::find_zero_divisor(alg, 42, csimple::MAX_TRIALS)?.expect("A is a matrix algebra");
    println!("zeta eta = 0: {}", alg.is_zero(&alg.mul(&zeta, &eta)));
    let p = r.rgcd(&sa.lift(&zeta), &f4)?;
    println!("rgcd with f4 has degree {} of 20", p.deg().unwrap());

    // The proper factor p generates an idempotent; its corner is a smaller simple algebra.
    let e = csimple::idempotent(alg, &sa.project(&p)?)?;
    let c = csimple::corner(alg, &e)?;
    println!("corner dimension {}", c.dim());
    Ok(())
}
