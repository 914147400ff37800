//! Complete factorization of the degree-100 polynomial over F_256.

use std::time::Instant;

use orepoly::factor::{self, FactorOptions};
use orepoly::ffield::cpoly;
use orepoly::parse::{self, AnyRing};

const RING: &str = "GF(2^8; modulus=x^8 + x^4 + x^3 + x^2 + 1; var=a); frobenius=2";

fn main() -> orepoly::Result<()> {
    let AnyRing::Frobenius(r) = parse::parse_ring(RING)? else { unreachable!() };
    let f = parse::parse_skew(&r, include_str!("../data/f256_f.txt"))?;
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);

    let t = Instant::now();
    let fz = factor::factorize(&r, &f, &FactorOptions::with_seed(seed))?;
    println!("{} factors in {:.1?} (seed {seed})", fz.factors.len(), t.elapsed());
    for (q, cf) in fz.factors.iter().zip(&fz.certificates) {
        let fhat = cpoly::format(r.center(), &cf.fhat, "z");
        let fhat = if fhat.len() > 40 { format!("{}...", &fhat[..40]) } else { fhat };
        println!("  degree {:>2}, bound {fhat}", q.deg().unwrap());
    }
    println!("verified: {}", factor::verify_factorization(&r, &f, &fz));
    Ok(())
}
