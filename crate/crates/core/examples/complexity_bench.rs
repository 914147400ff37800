//! Timing of bound and factor over F_256 and the fitted log-log slope.

use orepoly::bound::Algorithm;
use orepoly::cli::bench::{self, BenchOp};
use orepoly::parse::{self, AnyRing};

fn main() -> orepoly::Result<()> {
    let AnyRing::Frobenius(r) = parse::parse_ring(orepoly::cli::DEFAULT_BENCH_RING)? else { unreachable!() };
    for op in [BenchOp::Bound, BenchOp::Factor] {
        let rep = bench::run(&r, op, &[50, 100, 200, 400], 3, 7, Algorithm::V2, 1)?;
        println!("{op:?}");
        print!("{}", rep.table());
    }
    Ok(())
}
