//! Wall-clock scaling of `bound` and `factor` on random inputs.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::derive_seed;
use crate::bound::{self, Algorithm};
use crate::error::{Error, Result};
use crate::factor::{self, FactorOptions};
use crate::skewcore::FiniteSkewRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BenchOp {
    Bound,
    Factor,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub degree: usize,
    pub trials: usize,
    pub median_seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub op: BenchOp,
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of `log t` against `log n`; undefined below two degrees.
    pub slope: Option<f64>,
}

impl BenchReport {
    pub fn table(&self) -> String {
        let mut s = format!("{:>8} {:>7} {:>14}\n", "degree", "trials", "median_s");
        for r in &self.rows {
            s += &format!("{:>8} {:>7} {:>14.6}\n", r.degree, r.trials, r.median_seconds);
        }
        match self.slope {
            Some(v) => s += &format!("slope {v:.3}\n"),
            None => s += "slope undefined\n",
        }
        s
    }
}

/// Least-squares slope through `(x, y)`, `None` with fewer than two distinct `x`.
pub fn fit_slope(points: &[(f64, f64)]) -> Option<f64> {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if points.len() < 2 || sxx == 0.0 {
        return None;
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

fn median(mut v: Vec<Duration>) -> Duration {
    v.sort();
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2
    }
}

fn one_trial(ring: &FiniteSkewRing, op: BenchOp, n: usize, seed: u64, alg: Algorithm) -> Result<Duration> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = ring.random(&mut rng, n, true, true);
    let start = Instant::now();
    match op {
        BenchOp::Bound => {
            bound::bound(ring, &f, alg)?;
        }
        BenchOp::Factor => {
            let fz = factor::factorize(ring, &f, &FactorOptions { seed, algorithm: alg, ..FactorOptions::default() })?;
            if fz.factors.is_empty() {
                return Err(Error::Internal("empty factorization".into()));
            }
        }
    }
    Ok(start.elapsed())
}

/// Times `op` on `trials` random monic inputs per degree. With `jobs > 1`
/// the trials of one degree run concurrently.
pub fn run(
    ring: &FiniteSkewRing,
    op: BenchOp,
    degrees: &[usize],
    trials: usize,
    seed: u64,
    alg: Algorithm,
    jobs: usize,
) -> Result<BenchReport> {
    if trials == 0 || degrees.iter().any(|&d| d == 0) {
        return Err(Error::Precondition("bench needs positive degrees and trials".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let mut rows = Vec::new();
    for &n in degrees {
        let seeds: Vec<u64> = (0..trials).map(|t| derive_seed(seed, (n * 1_000_003 + t) as u64)).collect();
        let times: Vec<Duration> = if jobs > 1 {
            pool.install(|| seeds.par_iter().map(|&s| one_trial(ring, op, n, s, alg)).collect::<Result<_>>())?
        } else {
            seeds.iter().map(|&s| one_trial(ring, op, n, s, alg)).collect::<Result<_>>()?
        };
        rows.push(BenchRow { degree: n, trials, median_seconds: median(times).as_secs_f64() });
    }
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| ((r.degree as f64).ln(), r.median_seconds.max(1e-9).ln()))
        .collect();
    Ok(BenchReport { op, rows, slope: fit_slope(&pts) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_fit() {
        let pts: Vec<(f64, f64)> = [1.0f64, 2.0, 4.0].iter().map(|x| (x.ln(), (3.0 * x.powi(3)).ln())).collect();
        assert!((fit_slope(&pts).unwrap() - 3.0).abs() < 1e-9);
        assert_eq!(fit_slope(&pts[..1]), None);
    }
}
