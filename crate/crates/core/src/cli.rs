//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification fails or a computation
//! hits an internal inconsistency, 2 on a usage error. In structured mode
//! each command prints one JSON document; rationals are always strings.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bench::{run_bench, BenchRow, TIMING_NOTE};
use crate::bernoulli::{bernoulli_numbers, Convention, FixedTables};
use crate::error::Error;
use crate::exactnum::Rational;
use crate::faulhaber::{
    bernoulli_polynomial, faulhaber_poly, faulhaber_variant_eval, sum_powers_closed,
    sum_powers_naive,
};
use crate::feqsolver::{
    extract_bernoulli, solve_monomial, solve_shifted, DrivingTerm, Normalization,
};
use crate::identities::{Ranges, Suite, VerificationReport, Verifier};
use crate::poly::Polynomial;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "bernoulli-feq",
    version,
    about = "Exact Bernoulli numbers, sums of powers and the difference equation f(x) + x^k = f(x+1)"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Plain)]
    pub output: OutputMode,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Plain,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Minus,
    Plus,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Minus => Convention::Minus,
            ConventionArg::Plus => Convention::Plus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Naive,
    Eq2,
    Eq7,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolyKind {
    FaulhaberMinus,
    FaulhaberPlus,
    Bernoulli,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Lemma1,
    Faulhaber,
    Differences,
    BinomialIdentity,
    Extraction,
    Series,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Lemma1 => Suite::Lemma1,
            SuiteArg::Faulhaber => Suite::Faulhaber,
            SuiteArg::Differences => Suite::Differences,
            SuiteArg::BinomialIdentity => Suite::BinomialIdentity,
            SuiteArg::Extraction => Suite::Extraction,
            SuiteArg::Series => Suite::Series,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print B_0..B_upto in one convention.
    Bern {
        convention: ConventionArg,
        upto: usize,
    },
    /// Compute F(n, p) = 1^p + ... + n^p.
    Sum {
        #[arg(value_parser = parse_natural)]
        n: BigUint,
        p: usize,
        #[arg(long, value_enum, default_value_t = Method::Eq2)]
        method: Method,
    },
    /// Print f_k (faulhaber-minus), g_k (faulhaber-plus) or B_k(x) (bernoulli).
    Poly { kind: PolyKind, k: usize },
    /// Solve f(x) + x^k = f(x+1) (or with (x+1)^k) and read off Bernoulli numbers.
    Solve {
        k: usize,
        /// Use the right-hand side (x+1)^k.
        #[arg(long)]
        shifted: bool,
    },
    /// Run identity checks; exits 1 if any fails.
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long)]
        p_max: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        /// JSON file {"minus": [...], "plus": [...]} overriding Bernoulli
        /// values; used to confirm that the checks detect bad tables.
        #[arg(long)]
        bernoulli_table: Option<PathBuf>,
    },
    /// Time naive summation against the closed form.
    Bench {
        #[arg(long = "n", value_delimiter = ',', required = true, value_parser = parse_natural)]
        n: Vec<BigUint>,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 3)]
        repetitions: usize,
    },
}

fn parse_natural(s: &str) -> Result<BigUint, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("{s:?} is not a nonnegative decimal integer"));
    }
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexedValue {
    pub index: usize,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BernDoc {
    pub convention: Convention,
    pub values: Vec<IndexedValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumDoc {
    pub n: String,
    pub p: usize,
    pub method: Method,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub kind: PolyKind,
    pub k: usize,
    pub coefficients: Polynomial,
    pub human: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveDoc {
    pub k: usize,
    pub driving: DrivingTerm,
    pub coefficients: Vec<Rational>,
    pub normalization: Normalization,
    pub convention: Convention,
    pub extracted: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub all_passed: bool,
    pub reports: Vec<VerificationReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchDoc {
    pub p: usize,
    pub repetitions: usize,
    pub note: String,
    pub rows: Vec<BenchRow>,
}

/// Canonical rendering of a structured document.
pub fn render_structured<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn list(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let structured = cli.output == OutputMode::Structured;
    let mut text = String::new();
    let code = match &cli.command {
        Command::Bern { convention, upto } => {
            let conv = Convention::from(*convention);
            let values = bernoulli_numbers(conv, *upto);
            if structured {
                text = render_structured(&BernDoc {
                    convention: conv,
                    values: values
                        .into_iter()
                        .enumerate()
                        .map(|(index, value)| IndexedValue { index, value })
                        .collect(),
                });
            } else {
                for (j, b) in values.iter().enumerate() {
                    text += &format!("{j}: {b}\n");
                }
            }
            EXIT_OK
        }
        Command::Sum { n, p, method } => {
            let value = match method {
                Method::Naive => sum_powers_naive(n, *p),
                Method::Eq2 => sum_powers_closed(n, *p)?,
                Method::Eq7 => faulhaber_variant_eval(n, *p).map_err(|e| match e {
                    Error::VariantNeedsPositivePower(_) => {
                        Failure::Usage(format!("{e}; use --method eq2 or naive for p = 0"))
                    }
                    other => other.into(),
                })?,
            };
            text = if structured {
                render_structured(&SumDoc {
                    n: n.to_string(),
                    p: *p,
                    method: *method,
                    value: value.to_string(),
                })
            } else {
                format!("{value}\n")
            };
            EXIT_OK
        }
        Command::Poly { kind, k } => {
            let poly = match kind {
                PolyKind::FaulhaberMinus => faulhaber_poly(*k, Convention::Minus),
                PolyKind::FaulhaberPlus => faulhaber_poly(*k, Convention::Plus),
                PolyKind::Bernoulli => bernoulli_polynomial(*k, Convention::Minus),
            };
            text = if structured {
                render_structured(&PolyDoc {
                    kind: *kind,
                    k: *k,
                    human: poly.to_string(),
                    coefficients: poly,
                })
            } else {
                format!("{poly}\n")
            };
            EXIT_OK
        }
        Command::Solve { k, shifted } => {
            let sol = if *shifted {
                solve_shifted(*k)
            } else {
                solve_monomial(*k)
            };
            let conv = sol.driving.convention();
            let extracted = extract_bernoulli(&sol, conv)?;
            text = if structured {
                render_structured(&SolveDoc {
                    k: *k,
                    driving: sol.driving,
                    coefficients: sol.coeffs.clone(),
                    normalization: sol.normalization,
                    convention: conv,
                    extracted,
                })
            } else {
                format!(
                    "coefficients: {}\nnormalization: {}\nextracted ({conv}): {}\n",
                    list(&sol.coeffs),
                    sol.normalization.describe(),
                    list(&extracted)
                )
            };
            EXIT_OK
        }
        Command::Verify {
            suite,
            m_max,
            k_max,
            n_max,
            p_max,
            order,
            bernoulli_table,
        } => {
            let defaults = Ranges::default();
            let ranges = Ranges {
                m_max: m_max.unwrap_or(defaults.m_max),
                k_max: k_max.unwrap_or(defaults.k_max),
                n_max: n_max.unwrap_or(defaults.n_max),
                p_max: p_max.unwrap_or(defaults.p_max),
                series_order: order.unwrap_or(defaults.series_order),
            };
            let reports = match bernoulli_table {
                Some(path) => {
                    let tables = load_tables(path)?;
                    Verifier::new(&tables).run_suite((*suite).into(), &ranges)
                }
                None => Verifier::default().run_suite((*suite).into(), &ranges),
            };
            let all_passed = reports.iter().all(VerificationReport::passed);
            if structured {
                text = render_structured(&VerifyDoc {
                    all_passed,
                    reports,
                });
            } else {
                for r in &reports {
                    text += &format!("{r}\n");
                }
            }
            if all_passed {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Command::Bench { n, p, repetitions } => {
            if *p == 0 || *repetitions == 0 {
                return Err(Failure::Usage(
                    "bench needs --p >= 1 and --repetitions >= 1".into(),
                ));
            }
            let rows = run_bench(n, *p, *repetitions)?;
            let note = format!("{TIMING_NOTE} ({repetitions})");
            if structured {
                text = render_structured(&BenchDoc {
                    p: *p,
                    repetitions: *repetitions,
                    note,
                    rows,
                });
            } else {
                text += &format!("# {note}\n");
                text += &format!(
                    "{:>14} {:>13} {:>13} {:>11}  {}\n",
                    "n", "naive_s", "closed_s", "ratio", "value"
                );
                for r in &rows {
                    text += &format!(
                        "{:>14} {:>13.3e} {:>13.3e} {:>11.1}  {}\n",
                        r.n, r.naive_seconds, r.closed_seconds, r.ratio, r.value
                    );
                }
            }
            EXIT_OK
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Runtime(format!("writing output: {e}")))?;
    Ok(code)
}

fn load_tables(path: &PathBuf) -> Result<FixedTables, Failure> {
    let raw = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&raw)
        .map_err(|e| Failure::Usage(format!("bad Bernoulli table {}: {e}", path.display())))
}
