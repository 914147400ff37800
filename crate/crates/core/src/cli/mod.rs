//! Command-line front end.

pub mod bench;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bound::{self, Algorithm, CentralForm};
use crate::error::{Error, Result};
use crate::factor::{self, FactorOptions};
use crate::ffield::cpoly;
use crate::field::Field;
use crate::parse::{self, AnyRing, Named};
use crate::skewcore::{Cen, Coef, FiniteSkewRing, SkewPoly, SkewRing, Twist};

/// Ring used by `bench` when `--ring` is absent.
pub const DEFAULT_BENCH_RING: &str = "GF(2^8; modulus=x^8 + x^4 + x^3 + x^2 + 1; var=a); frobenius=2";

#[derive(Parser, Debug)]
#[command(name = "orepoly", version, about = "Bounds and factorization of skew polynomials")]
pub struct Cli {
    /// Ring literal, e.g. `GF(2^2); frobenius=1` or `GF(2^4)(t); sigma: t -> a^5*t`.
    #[arg(long, global = true)]
    pub ring: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub json: bool,
    /// Re-check the result and exit with status 1 if the check fails.
    #[arg(long, global = true)]
    pub verify: bool,
    #[arg(long, global = true, value_enum, default_value_t = AlgArg::V2)]
    pub algorithm: AlgArg,
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AlgArg {
    V1,
    V2,
}

impl From<AlgArg> for Algorithm {
    fn from(a: AlgArg) -> Self {
        match a {
            AlgArg::V1 => Algorithm::V1,
            AlgArg::V2 => Algorithm::V2,
        }
    }
}

/// Polynomial arguments are literals, or `@path` to read one from a file.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// The bound f* and its central form.
    Bound { f: String },
    /// Irreducibility test (finite fields only).
    Irreducible { f: String },
    /// Complete factorization into monic irreducibles (finite fields only).
    Factor { f: String },
    /// Greatest common right divisor, with its Bezout cofactors.
    Rgcd { f: String, g: String },
    /// Least common left multiple.
    Llcm { f: String, g: String },
    /// Product f g.
    Mul { f: String, g: String },
    /// Left division f = q g + r.
    Ldiv { f: String, g: String },
    /// Splits f = g p with p = rgcd(f, pi(X^mu)); pi is a polynomial in z.
    Split { f: String, pi: String },
    /// Least central multiple by linear algebra (finite fields only).
    OracleBound { f: String },
    /// Median timings over random inputs and the fitted log-log slope.
    Bench {
        #[arg(long, value_enum, default_value_t = bench::BenchOp::Factor)]
        op: bench::BenchOp,
        #[arg(long, value_delimiter = ',', default_values_t = [50, 100, 200, 400])]
        degrees: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
}

#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub ring: String,
    pub input: Vec<String>,
    pub result: Vec<String>,
    pub certificates: Vec<String>,
    pub seed: u64,
    #[serde(skip)]
    text: Vec<String>,
}

fn read_arg(s: &str) -> Result<String> {
    match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|t| t.trim().to_string())
            .map_err(|e| Error::Precondition(format!("cannot read {path}: {e}"))),
        None => Ok(s.to_string()),
    }
}

fn central_text<T: Twist>(ring: &SkewRing<T>, cf: &CentralForm<Coef<T>, Cen<T>>) -> String {
    let fhat = cpoly::format(ring.center(), &cf.fhat, "z");
    let d = ring.field();
    let mut s = String::new();
    if !d.is_one(&cf.d) {
        s += &format!("({}) ", d.format(&cf.d));
    }
    if cf.m > 0 {
        s += &format!("X^{} ", cf.m);
    }
    s + &format!("[{fhat}]")
}

fn verify(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Verification(what.into()))
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    report: Report,
}

impl Ctx<'_> {
    fn push(&mut self, label: &str, value: String) {
        self.report.text.push(if label.is_empty() { value.clone() } else { format!("{label} = {value}") });
        self.report.result.push(value);
    }
}

fn run_common<T: Twist>(ring: &SkewRing<T>, finite: Option<&FiniteSkewRing>, ctx: &mut Ctx<'_>) -> Result<()>
where
    T::F: Named,
    T::K: Named,
{
    let cli = ctx.cli;
    let alg: Algorithm = cli.algorithm.into();
    let poly = |s: &str| -> Result<SkewPoly<Coef<T>>> { parse::parse_skew(ring, &read_arg(s)?) };
    let fmt = |f: &SkewPoly<Coef<T>>| ring.format(f);
    let unsupported = |what: &str| Error::Unsupported(format!("{what} needs a finite coefficient field"));
    match &cli.command {
        Command::Bound { f } => {
            let f = poly(f)?;
            ctx.report.input.push(fmt(&f));
            let b = bound::bound(ring, &f, alg)?;
            let cf = bound::centralize(ring, &b)?;
            ctx.push("f*", fmt(&b));
            ctx.report.text.push(format!("central = {}", central_text(ring, &cf)));
            ctx.report.certificates.push(central_text(ring, &cf));
            if cli.verify {
                let other = bound::bound(ring, &f, if alg == Algorithm::V1 { Algorithm::V2 } else { Algorithm::V1 })?;
                verify(other == b, "the two bound algorithms disagree")?;
                verify(bound::is_twosided(ring, &b)?, "bound is not twosided")?;
                verify(ring.right_divides(&f, &b)?, "f does not right-divide its bound")?;
                verify(b.deg() <= Some(ring.mu() * f.deg().unwrap_or(0)), "bound degree exceeds mu deg f")?;
            }
        }
        Command::Rgcd { f, g } | Command::Llcm { f, g } | Command::Mul { f, g } | Command::Ldiv { f, g } => {
            let (f, g) = (poly(f)?, poly(g)?);
            ctx.report.input.extend([fmt(&f), fmt(&g)]);
            match &cli.command {
                Command::Rgcd { .. } => {
                    let d = ring.rgcd(&f, &g)?;
                    ctx.push("", fmt(&d));
                    if cli.verify {
                        verify(ring.right_divides(&d, &f)? && ring.right_divides(&d, &g)?, "rgcd does not divide both")?;
                    }
                }
                Command::Llcm { .. } => {
                    let l = ring.llcm(&f, &g)?;
                    ctx.push("", fmt(&l));
                    if cli.verify {
                        verify(ring.right_divides(&f, &l)? && ring.right_divides(&g, &l)?, "llcm is not a common multiple")?;
                    }
                }
                Command::Mul { .. } => {
                    let p = ring.mul(&f, &g);
                    ctx.push("", fmt(&p));
                    if cli.verify && !f.is_zero() && !g.is_zero() {
                        verify(p.deg() == Some(f.deg().unwrap() + g.deg().unwrap()), "degree law fails")?;
                    }
                }
                _ => {
                    let (q, r) = ring.ldivrem(&f, &g)?;
                    ctx.push("q", fmt(&q));
                    ctx.push("r", fmt(&r));
                    if cli.verify {
                        verify(ring.add(&ring.mul(&q, &g), &r) == f && r.deg() < g.deg(), "f != q g + r")?;
                    }
                }
            }
        }
        Command::Split { f, pi } => {
            let f = poly(f)?;
            let pi = parse::parse_central(ring, &read_arg(pi)?)?;
            ctx.report.input.extend([fmt(&f), cpoly::format(ring.center(), &pi, "z")]);
            let (g, p) = factor::split_by_central(ring, &f, &pi)?;
            ctx.push("g", fmt(&g));
            ctx.push("p", fmt(&p));
            if cli.verify {
                verify(ring.mul(&g, &p) == f, "f != g p")?;
                let lifted = ring.lift_central(&cpoly::monic(ring.center(), &pi));
                verify(bound::bound_v2(ring, &p)? == lifted, "bound of p differs from pi")?;
            }
        }
        Command::Irreducible { f } => {
            let r = finite.ok_or_else(|| unsupported("irreducible"))?;
            let f = parse::parse_skew(r, &read_arg(f)?)?;
            ctx.report.input.push(r.format(&f));
            let ans = factor::is_irreducible_with(r, &f, alg)?;
            ctx.push("", ans.to_string());
            if cli.verify {
                let fz = factor::factorize(r, &f, &factor_opts(cli))?;
                verify((fz.factors.len() == 1) == ans, "factorization length disagrees")?;
            }
        }
        Command::Factor { f } => {
            let r = finite.ok_or_else(|| unsupported("factor"))?;
            let f = parse::parse_skew(r, &read_arg(f)?)?;
            ctx.report.input.push(r.format(&f));
            let fz = factor::factorize(r, &f, &factor_opts(cli))?;
            ctx.report.text.push(format!("unit = {}", r.field().format(&fz.unit)));
            ctx.report.result.push(r.field().format(&fz.unit));
            for (i, (q, cf)) in fz.factors.iter().zip(&fz.certificates).enumerate() {
                ctx.report.text.push(format!("p{} = {}", i + 1, r.format(q)));
                ctx.report.result.push(r.format(q));
                ctx.report.certificates.push(central_text(r, cf));
            }
            if cli.verify {
                verify(factor::verify_factorization(r, &f, &fz), "factorization check failed")?;
            }
        }
        Command::OracleBound { f } => {
            let r = finite.ok_or_else(|| unsupported("oracle-bound"))?;
            let f = parse::parse_skew(r, &read_arg(f)?)?;
            ctx.report.input.push(r.format(&f));
            let m = bound::oracle_min_central(r, &f)?;
            ctx.push("fhat", cpoly::format(r.center(), &m, "z"));
            if cli.verify {
                let b = bound::bound(r, &f, alg)?;
                verify(r.lift_central(&m) == b, "oracle disagrees with the bound")?;
            }
        }
        Command::Bench { op, degrees, trials } => {
            let r = finite.ok_or_else(|| unsupported("bench"))?;
            let rep = bench::run(r, *op, degrees, *trials, cli.seed, alg, cli.jobs)?;
            if cli.json {
                println!("{}", serde_json::to_string(&rep).expect("serializable"));
            } else {
                print!("{}", rep.table());
            }
            ctx.report.text.clear();
            return Ok(());
        }
    }
    Ok(())
}

fn factor_opts(cli: &Cli) -> FactorOptions {
    FactorOptions { seed: cli.seed, algorithm: cli.algorithm.into(), jobs: cli.jobs.max(1), ..FactorOptions::default() }
}

/// Exit status for an error: 2 for malformed input, 3 for unsupported
/// operations, 1 otherwise.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::InvalidField(_) => 2,
        Error::Unsupported(_) => 3,
        _ => 1,
    }
}

/// Runs a parsed invocation, printing to stdout and stderr.
pub fn run(cli: &Cli) -> Result<()> {
    let lit = match (&cli.ring, &cli.command) {
        (Some(r), _) => r.clone(),
        (None, Command::Bench { .. }) => DEFAULT_BENCH_RING.to_string(),
        (None, _) => return Err(Error::Parse { pos: 0, msg: "--ring is required".into() }),
    };
    let ring = parse::parse_ring(&lit)?;
    let mut ctx = Ctx { cli, report: Report { ring: ring.literal(), seed: cli.seed, ..Report::default() } };
    let outcome = match &ring {
        AnyRing::Frobenius(r) => run_common(r, Some(r), &mut ctx),
        AnyRing::Scaling(r) => run_common(r, None, &mut ctx),
    };
    let printable = matches!(&outcome, Ok(()) | Err(Error::Verification(_)));
    if printable && !matches!(cli.command, Command::Bench { .. }) {
        if cli.json {
            println!("{}", serde_json::to_string(&ctx.report).expect("serializable"));
        } else {
            for line in &ctx.report.text {
                println!("{line}");
            }
        }
    }
    outcome
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

