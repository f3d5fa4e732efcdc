//! Deterministic sweeps that check the Bernoulli/Faulhaber identities
//! exactly and report the first failing parameter set.
//!
//! Every check reads Bernoulli numbers through a [`BernoulliSource`], so
//! the same sweeps can be pointed at a tampered table to confirm that they
//! catch it.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bernoulli::{bernoulli_series, BernoulliSource, Convention, Memoized};
use crate::exactnum::{choose, Rational};
use crate::faulhaber::{
    bernoulli_polynomial_with, faulhaber_poly_with, faulhaber_variant_eval_with,
    sum_powers_closed_with, sum_powers_naive,
};
use crate::feqsolver::{extract_bernoulli, solve_monomial, solve_shifted};
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// Where an identity broke, with both sides in canonical text form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub parameters: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub range: String,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn pass(identity: &str, range: String) -> Self {
        Self {
            identity: identity.to_string(),
            range,
            status: Status::Pass,
            counterexample: None,
        }
    }

    pub fn fail(identity: &str, range: String, counterexample: Counterexample) -> Self {
        Self {
            identity: identity.to_string(),
            range,
            status: Status::Fail,
            counterexample: Some(counterexample),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn from_sweep(identity: &str, range: String, first_failure: Option<Counterexample>) -> Self {
        match first_failure {
            None => Self::pass(identity, range),
            Some(c) => Self::fail(identity, range, c),
        }
    }
}

/// `PASS <name> <range>`, followed by an indented counterexample line on failure.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.status, self.identity, self.range)?;
        if let Some(c) = &self.counterexample {
            write!(
                f,
                "\n  counterexample at {}: lhs = {}, rhs = {}",
                c.parameters, c.lhs, c.rhs
            )?;
        }
        Ok(())
    }
}

fn mismatch(parameters: String, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Counterexample {
    Counterexample {
        parameters,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

/// Which closed form `check_faulhaber` compares against the naive sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaulhaberVariant {
    /// `B+` polynomial evaluated at `n`.
    Eq2,
    /// `B-` polynomial evaluated at `n + 1`, `p >= 1`.
    Eq7,
}

/// Sweep bounds for the whole suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ranges {
    pub m_max: usize,
    pub k_max: usize,
    pub n_max: u64,
    pub p_max: usize,
    pub series_order: usize,
}

impl Default for Ranges {
    fn default() -> Self {
        Self {
            m_max: 60,
            k_max: 50,
            n_max: 200,
            p_max: 25,
            series_order: 60,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Lemma1,
    Faulhaber,
    Differences,
    BinomialIdentity,
    Extraction,
    Series,
}

pub struct Verifier<'a> {
    source: &'a dyn BernoulliSource,
}

impl Default for Verifier<'static> {
    fn default() -> Self {
        Self { source: &Memoized }
    }
}

impl<'a> Verifier<'a> {
    pub fn new(source: &'a dyn BernoulliSource) -> Self {
        Self { source }
    }

    fn b(&self, conv: Convention, j: usize) -> Rational {
        self.source.bernoulli(conv, j)
    }

    /// `sum_{k<=m} C(m+1,k) B-_k = [m = 0]` and `sum_{k<=m} C(m+1,k) B+_k = m + 1`.
    pub fn check_lemma1(&self, m_max: usize) -> VerificationReport {
        let failure = (0..=m_max).find_map(|m| {
            Convention::ALL.into_iter().find_map(|conv| {
                let lhs: Rational = (0..=m)
                    .map(|k| Rational::from(choose(m as u64 + 1, k as u64)) * self.b(conv, k))
                    .sum();
                let rhs = match conv {
                    Convention::Minus => Rational::from(u64::from(m == 0)),
                    Convention::Plus => Rational::from(m + 1),
                };
                (lhs != rhs).then(|| mismatch(format!("{conv} m={m}"), lhs, rhs))
            })
        });
        VerificationReport::from_sweep("lemma1-recurrence", format!("m=0..={m_max}"), failure)
    }

    /// Closed form against direct summation on the `(n, p)` grid.
    pub fn check_faulhaber(
        &self,
        n_max: u64,
        p_max: usize,
        variant: FaulhaberVariant,
    ) -> VerificationReport {
        let (name, p_min) = match variant {
            FaulhaberVariant::Eq2 => ("faulhaber-eq2", 0),
            FaulhaberVariant::Eq7 => ("faulhaber-eq7", 1),
        };
        let failure = (p_min..=p_max).find_map(|p| {
            (0..=n_max).find_map(|n| {
                let n_big = BigUint::from(n);
                let naive = sum_powers_naive(&n_big, p);
                let closed = match variant {
                    FaulhaberVariant::Eq2 => sum_powers_closed_with(self.source, &n_big, p),
                    FaulhaberVariant::Eq7 => faulhaber_variant_eval_with(self.source, &n_big, p),
                };
                let params = format!("n={n} p={p}");
                match closed {
                    Ok(v) if v == naive => None,
                    Ok(v) => Some(mismatch(params, v, naive)),
                    Err(e) => Some(mismatch(params, e, naive)),
                }
            })
        });
        VerificationReport::from_sweep(name, format!("n=0..={n_max} p={p_min}..={p_max}"), failure)
    }

    /// `Δf_k = x^k`, `Δg_k = (x+1)^k` and `B_k(x+1) - B_k(x) = k x^{k-1}`,
    /// as polynomial identities.
    pub fn check_difference_properties(&self, k_max: usize) -> VerificationReport {
        let one = Rational::one();
        let failure = (0..=k_max).find_map(|k| {
            let xk = Polynomial::monomial(k);
            let df = faulhaber_poly_with(self.source, k, Convention::Minus).forward_difference();
            if df != xk {
                return Some(mismatch(
                    format!("f_k k={k}"),
                    df.to_coeff_list(),
                    xk.to_coeff_list(),
                ));
            }
            let dg = faulhaber_poly_with(self.source, k, Convention::Plus).forward_difference();
            let shifted = xk.shift(&one);
            if dg != shifted {
                return Some(mismatch(
                    format!("g k={k}"),
                    dg.to_coeff_list(),
                    shifted.to_coeff_list(),
                ));
            }
            if k >= 1 {
                let db = bernoulli_polynomial_with(self.source, k, Convention::Minus)
                    .forward_difference();
                let rhs = Polynomial::term(Rational::from(k), k - 1);
                if db != rhs {
                    return Some(mismatch(
                        format!("B_k k={k}"),
                        db.to_coeff_list(),
                        rhs.to_coeff_list(),
                    ));
                }
            }
            None
        });
        VerificationReport::from_sweep("difference-properties", format!("k=0..={k_max}"), failure)
    }

    /// `sum_{i=0}^{k-1} C(k, i) f_i(x) = x^k`.
    pub fn check_binomial_f_identity(&self, k_max: usize) -> VerificationReport {
        let f: Vec<Polynomial> = (0..k_max)
            .map(|i| faulhaber_poly_with(self.source, i, Convention::Minus))
            .collect();
        let failure = (1..=k_max).find_map(|k| {
            let lhs: Polynomial = (0..k)
                .map(|i| f[i].scale(&Rational::from(choose(k as u64, i as u64))))
                .sum();
            let rhs = Polynomial::monomial(k);
            (lhs != rhs)
                .then(|| mismatch(format!("k={k}"), lhs.to_coeff_list(), rhs.to_coeff_list()))
        });
        VerificationReport::from_sweep("binomial-f-identity", format!("k=1..={k_max}"), failure)
    }

    /// `B_k'(x) = k B_{k-1}(x)` and `(k+1) f_k(x) = B_{k+1}(x) - B-_{k+1}`.
    ///
    /// The second relation only holds up to the constant term of
    /// `B_{k+1}(x)`, because `f_k(0) = 0`.
    pub fn check_bernoulli_polynomial_relations(&self, k_max: usize) -> VerificationReport {
        let conv = Convention::Minus;
        let failure = (0..=k_max + 1).find_map(|k| {
            let bk = bernoulli_polynomial_with(self.source, k, conv);
            if k >= 1 {
                let lhs = bk.derivative();
                let rhs =
                    bernoulli_polynomial_with(self.source, k - 1, conv).scale(&Rational::from(k));
                if lhs != rhs {
                    return Some(mismatch(
                        format!("derivative k={k}"),
                        lhs.to_coeff_list(),
                        rhs.to_coeff_list(),
                    ));
                }
            }
            if k <= k_max {
                let lhs = faulhaber_poly_with(self.source, k, conv).scale(&Rational::from(k + 1));
                let bk1 = bernoulli_polynomial_with(self.source, k + 1, conv);
                let rhs = &bk1 - &Polynomial::constant(self.b(conv, k + 1));
                if lhs != rhs {
                    return Some(mismatch(
                        format!("f_k vs B_(k+1) k={k}"),
                        lhs.to_coeff_list(),
                        rhs.to_coeff_list(),
                    ));
                }
            }
            None
        });
        VerificationReport::from_sweep(
            "bernoulli-polynomial-relations",
            format!("k=0..={k_max}"),
            failure,
        )
    }

    /// Bernoulli prefixes read off both solvers against the table.
    pub fn check_extraction_props(&self, k_max: usize) -> VerificationReport {
        let failure = (0..=k_max).find_map(|k| {
            [
                (solve_monomial(k), Convention::Minus),
                (solve_shifted(k), Convention::Plus),
            ]
            .into_iter()
            .find_map(|(sol, conv)| {
                let got = extract_bernoulli(&sol, conv).expect("solver matches its own convention");
                let expected: Vec<Rational> = (0..=k).map(|j| self.b(conv, j)).collect();
                (got != expected).then(|| {
                    let j = (0..=k).find(|&j| got[j] != expected[j]).unwrap_or(k);
                    mismatch(format!("{conv} k={k} j={j}"), &got[j], &expected[j])
                })
            })
        });
        VerificationReport::from_sweep("extraction-propositions", format!("k=0..={k_max}"), failure)
    }

    /// Generating-function coefficients against the table.
    pub fn check_series_vs_recursion(&self, order: usize) -> VerificationReport {
        let failure = Convention::ALL.into_iter().find_map(|conv| {
            bernoulli_series(conv, order)
                .into_iter()
                .enumerate()
                .find_map(|(j, s)| {
                    let t = self.b(conv, j);
                    (s != t).then(|| mismatch(format!("{conv} j={j}"), s, t))
                })
        });
        VerificationReport::from_sweep("series-vs-recursion", format!("j=0..={order}"), failure)
    }

    /// Runs the selected checks, one thread each, and returns the reports
    /// in a fixed order.
    pub fn run_suite(&self, suite: Suite, ranges: &Ranges) -> Vec<VerificationReport> {
        type Check<'s> = Box<dyn Fn() -> VerificationReport + Send + Sync + 's>;
        let r = *ranges;
        let mut checks: Vec<Check<'_>> = Vec::new();
        let want = |s: Suite| suite == Suite::All || suite == s;
        if want(Suite::Lemma1) {
            checks.push(Box::new(move || self.check_lemma1(r.m_max)));
        }
        if want(Suite::Faulhaber) {
            checks.push(Box::new(move || {
                self.check_faulhaber(r.n_max, r.p_max, FaulhaberVariant::Eq2)
            }));
            checks.push(Box::new(move || {
                self.check_faulhaber(r.n_max, r.p_max, FaulhaberVariant::Eq7)
            }));
        }
        if want(Suite::Differences) {
            checks.push(Box::new(move || self.check_difference_properties(r.k_max)));
            checks.push(Box::new(move || {
                self.check_bernoulli_polynomial_relations(r.k_max)
            }));
        }
        if want(Suite::BinomialIdentity) {
            checks.push(Box::new(move || {
                self.check_binomial_f_identity(r.k_max.max(1))
            }));
        }
        if want(Suite::Extraction) {
            checks.push(Box::new(move || self.check_extraction_props(r.k_max)));
        }
        if want(Suite::Series) {
            checks.push(Box::new(move || {
                self.check_series_vs_recursion(r.series_order)
            }));
        }
        std::thread::scope(|s| {
            let handles: Vec<_> = checks.iter().map(|c| s.spawn(c)).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("verification check panicked"))
                .collect()
        })
    }
}

pub fn check_lemma1(m_max: usize) -> VerificationReport {
    Verifier::default().check_lemma1(m_max)
}

pub fn check_faulhaber(n_max: u64, p_max: usize, variant: FaulhaberVariant) -> VerificationReport {
    Verifier::default().check_faulhaber(n_max, p_max, variant)
}

pub fn check_difference_properties(k_max: usize) -> VerificationReport {
    Verifier::default().check_difference_properties(k_max)
}

pub fn check_binomial_f_identity(k_max: usize) -> VerificationReport {
    Verifier::default().check_binomial_f_identity(k_max)
}

pub fn check_bernoulli_polynomial_relations(k_max: usize) -> VerificationReport {
    Verifier::default().check_bernoulli_polynomial_relations(k_max)
}

pub fn check_extraction_props(k_max: usize) -> VerificationReport {
    Verifier::default().check_extraction_props(k_max)
}

pub fn check_series_vs_recursion(order: usize) -> VerificationReport {
    Verifier::default().check_series_vs_recursion(order)
}
