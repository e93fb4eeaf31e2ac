//! Command-line front end.
//!
//! [`run`] parses the arguments, executes one verb and returns the exit code
//! with everything that should go to standard output. Exit codes: `0` when
//! every check passes, `1` when any check fails, `2` on a usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{
    parse_rational, rational_short, FormalSum, Index, Letter, QuasiShuffle, RatPoly, Word, Q,
};
use crate::error::{Error, Result};
use crate::identities::{
    alt_sum, cyclic_c, cyclic_sigma, two_one_lhs_index, two_one_rhs_word, SumFamily,
};
use crate::interpolation::{s_t, zeta_t_expansion};
use crate::numeric::{self, IdentityReport, NumResult, ZetaCache, DEFAULT_M};
use crate::reduction::{
    csf_words, verify_csf_reduction, verify_sf_reduction, CertificateRecord, ReductionReport,
};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "tzeta", version, about = "Interpolated multiple zeta values")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Expand ζ^t(index) as a polynomial in t over ζ values.
    Expand {
        #[arg(long)]
        index: String,
    },
    /// Apply S^t to a word.
    St {
        #[arg(long)]
        word: String,
    },
    /// Multiply two words.
    Product {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Evaluate ζ^t(index) numerically at an exact rational t.
    Eval {
        #[arg(long)]
        index: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        t: String,
        #[arg(long = "M", default_value_t = DEFAULT_M)]
        m: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Harmonic,
    Star,
    T,
}

#[derive(Debug, Subcommand)]
enum Suite {
    /// Sum-formula reduction certificates, optionally with numeric checks.
    SumFormula {
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Cyclic-sum-formula reduction certificates, optionally with numeric checks.
    Cyclic {
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Exact vanishing of the alternating sum for a letter sequence.
    AltSum {
        #[arg(long)]
        word: String,
    },
    /// Numeric two-one check ζ⋆({2}^{j_1},1,…) = 2^n ζ^{1/2}(2j_1+1,…).
    TwoOne {
        #[arg(long)]
        j: String,
        #[arg(long = "M", default_value_t = DEFAULT_M)]
        m: u64,
    },
}

#[derive(Debug, Args)]
struct NumericArgs {
    /// Also check the identity numerically.
    #[arg(long)]
    numeric: bool,
    /// Sample points, comma separated exact rationals; default 0,1/2,1.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    t: Vec<String>,
    #[arg(long = "M", default_value_t = DEFAULT_M)]
    m: u64,
}

/// One line of a verification report.
#[derive(Debug, Serialize)]
struct Check {
    name: String,
    pass: bool,
    detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateRecord>,
}

/// Runs the command line `argv` (program name first).
pub fn run<I, S>(argv: I) -> (u8, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            return (code, e.render().to_string());
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => {
            let out = if cli.json {
                json!({ "error": e.to_string() }).to_string() + "\n"
            } else {
                format!("error: {e}\n")
            };
            (EXIT_USAGE, out)
        }
    }
}

fn parse_index(s: &str) -> Result<Index> {
    s.trim().parse()
}

fn parse_word(s: &str) -> Result<Word> {
    Word::parse_index_text(s.trim())
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("expected a list of integers: {s:?}")))
        })
        .collect()
}

fn sum_output(json: bool, input: &str, e: &FormalSum) -> (u8, String) {
    let out = if json {
        json!({ "input": input, "result": e.to_text(), "display": e.to_string() }).to_string()
    } else {
        e.to_string()
    };
    (EXIT_PASS, out + "\n")
}

fn execute(cli: &Cli) -> Result<(u8, String)> {
    match &cli.verb {
        Verb::Expand { index } => {
            let idx = parse_index(index)?;
            Ok(sum_output(cli.json, index, &zeta_t_expansion(&idx)))
        }
        Verb::St { word } => {
            let w = parse_word(word)?;
            Ok(sum_output(cli.json, word, &s_t(&FormalSum::word(w))))
        }
        Verb::Product { mode, left, right } => {
            let u = FormalSum::word(parse_word(left)?);
            let v = FormalSum::word(parse_word(right)?);
            let engine = match mode {
                Mode::Harmonic => QuasiShuffle::harmonic(),
                Mode::Star => QuasiShuffle::star(),
                Mode::T => QuasiShuffle::t_harmonic(),
            };
            let input = format!("{left} | {right}");
            Ok(sum_output(cli.json, &input, &engine.apply(&u, &v)))
        }
        Verb::Eval { index, t, m } => {
            let idx = parse_index(index)?;
            let alpha = parse_rational(t)?;
            let r = numeric::zeta_t(&idx, &alpha, *m)?;
            let out = if cli.json { r.to_json() } else { r.to_string() };
            Ok((EXIT_PASS, out + "\n"))
        }
        Verb::Verify { suite } => {
            let (name, checks) = run_suite(suite)?;
            Ok(report(cli.json, name, &checks))
        }
    }
}

fn report(json: bool, suite: &str, checks: &[Check]) -> (u8, String) {
    let failed = checks.iter().filter(|c| !c.pass).count();
    let pass = failed == 0;
    let code = if pass { EXIT_PASS } else { EXIT_FAIL };
    let out = if json {
        json!({ "suite": suite, "pass": pass, "checks": checks }).to_string() + "\n"
    } else {
        let mut out = String::new();
        for c in checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            out += &format!("{mark} {}: {}\n", c.name, c.detail);
        }
        out += &format!("{suite}: {} checks, {failed} failed\n", checks.len());
        out
    };
    (code, out)
}

fn samples(args: &NumericArgs) -> Result<Vec<Q>> {
    if args.t.is_empty() {
        return Ok(vec![Q::zero(), Q::new(1.into(), 2.into()), Q::one()]);
    }
    args.t.iter().map(|s| parse_rational(s)).collect()
}

fn run_suite(suite: &Suite) -> Result<(&'static str, Vec<Check>)> {
    match suite {
        Suite::SumFormula { k, numeric } => {
            let mut checks = certificate_checks(&verify_sf_reduction(*k)?);
            if numeric.numeric {
                let ts = samples(numeric)?;
                for n in 1..*k {
                    let family = SumFamily::new(*k, n)?;
                    let lhs = s_t(&family.sum());
                    let rhs = FormalSum::term(Word::from_subscripts(&[*k]), family.poly());
                    let r = numeric::verify_identity(&lhs, &rhs, &ts, numeric.m)?;
                    checks.extend(numeric_checks(
                        &format!("numeric sum-formula k={k} n={n}"),
                        &r,
                    ));
                }
            }
            Ok(("sum-formula", checks))
        }
        Suite::Cyclic { k, numeric } => {
            let mut checks = certificate_checks(&verify_csf_reduction(*k)?);
            if numeric.numeric {
                let ts = samples(numeric)?;
                for w in csf_words(*k) {
                    let (lhs, rhs) = csf_sides(&w)?;
                    let r = numeric::verify_identity(&lhs, &rhs, &ts, numeric.m)?;
                    let name = format!("numeric cyclic w={}", w.to_index_text());
                    checks.extend(numeric_checks(&name, &r));
                }
            }
            Ok(("cyclic", checks))
        }
        Suite::AltSum { word } => {
            let w = parse_word(word)?;
            if w.is_empty() {
                return Err(Error::EmptySequence);
            }
            let letters: Vec<Letter> = w.letters().to_vec();
            let residual = alt_sum(&letters)?;
            Ok((
                "alt-sum",
                vec![Check {
                    name: format!("alt-sum w={}", w.to_index_text()),
                    pass: residual.is_zero(),
                    detail: format!("residual {residual}"),
                    certificate: None,
                }],
            ))
        }
        Suite::TwoOne { j, m } => {
            let j = parse_list(j)?;
            Ok(("two-one", vec![two_one_check(&j, *m)?]))
        }
    }
}

/// Left and right sides of the interpolated cyclic sum formula for `w`:
/// `S^t(Σ(w)) + (t - 1) S^t(C(w))` and `k t^n z_{k+1}`.
pub fn csf_sides(w: &Word) -> Result<(FormalSum, FormalSum)> {
    let k = w.weight();
    let n = w.len() as u32;
    if k <= n {
        return Err(Error::AllOnes);
    }
    let mut lhs = s_t(&cyclic_sigma(w)?);
    lhs.add_scaled(
        &s_t(&cyclic_c(w)?),
        &RatPoly::from_coeffs([-Q::one(), Q::one()]),
    );
    let rhs = FormalSum::term(
        Word::from_subscripts(&[k + 1]),
        RatPoly::monomial(Q::from_integer(k.into()), n),
    );
    Ok((lhs, rhs))
}

/// `ζ⋆({2}^{j_1},1,…)` against `2^n ζ^{1/2}(2j_1+1,…)`.
fn two_one_check(j: &[u32], m: u64) -> Result<Check> {
    let lhs_idx = two_one_lhs_index(j)?;
    let (rhs_word, scale) = two_one_rhs_word(j)?;
    let lhs = numeric::mzsv(&lhs_idx, m)?;
    let half = Q::new(1.into(), 2.into());
    let rhs_sum = s_t(&FormalSum::word(rhs_word.clone())).scale_q(&scale);
    let rhs = ZetaCache::new(m).element(&rhs_sum, &half)?;
    let rhs_idx = Index::new(rhs_word.subscripts())?;
    Ok(numeric_detail(
        format!("two-one zeta*{lhs_idx} = {scale}·zeta^(1/2){rhs_idx}"),
        &lhs,
        &rhs,
    ))
}

fn numeric_detail(name: String, lhs: &NumResult, rhs: &NumResult) -> Check {
    let residual = (lhs.value - rhs.value).abs();
    let tolerance = lhs.err + rhs.err;
    Check {
        name,
        pass: residual <= tolerance,
        detail: format!(
            "lhs={:.12} rhs={:.12} residual={residual:.3e} tolerance={tolerance:.3e} M={}",
            lhs.value, rhs.value, lhs.m
        ),
        certificate: None,
    }
}

fn numeric_checks(name: &str, r: &IdentityReport) -> Vec<Check> {
    r.samples
        .iter()
        .map(|s| numeric_detail(format!("{name} t={}", s.t), &s.lhs, &s.rhs))
        .collect()
}

fn certificate_checks(r: &ReductionReport) -> Vec<Check> {
    r.entries
        .iter()
        .map(|(label, cert)| {
            let pass = cert.verify();
            let detail = match (&cert.coefficients, cert.residual()) {
                (Some(cs), Some(res)) if res.is_zero() => format!(
                    "certificate [{}] at t={}",
                    cs.iter().map(rational_short).collect::<Vec<_>>().join(", "),
                    rational_short(&r.alpha)
                ),
                (Some(_), Some(res)) => format!("residual {res}"),
                _ => "no certificate: target outside the span".into(),
            };
            Check {
                name: label.to_string(),
                pass,
                detail,
                certificate: Some(cert.to_record()),
            }
        })
        .collect()
}
