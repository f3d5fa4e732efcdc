//! Bernoulli numbers in both sign conventions.
//!
//! The production path solves the classical recurrences
//!
//! ```text
//! sum_{k=0}^{m} C(m+1, k) B-_k = [m = 0]
//! sum_{k=0}^{m} C(m+1, k) B+_k = m + 1
//! ```
//!
//! for their top term and memoizes the result per convention. The
//! generating-function expansions `x/(e^x - 1)` and `x/(1 - e^{-x})` are
//! available through [`bernoulli_series`] as an independent route.

use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::exactnum::{choose, Rational};
use crate::series::PowerSeries;

/// Which value `B_1` takes; every other index agrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `B_1 = -1/2`, the numbers of the first kind.
    Minus,
    /// `B_1 = +1/2`, the numbers of the second kind.
    Plus,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::Minus, Convention::Plus];

    /// Right-hand side of the defining recurrence at `m`.
    fn recurrence_rhs(self, m: usize) -> Rational {
        match self {
            Convention::Minus => Rational::from(u64::from(m == 0)),
            Convention::Plus => Rational::from(m + 1),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Minus => "minus",
            Convention::Plus => "plus",
        })
    }
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "minus" => Ok(Convention::Minus),
            "plus" => Ok(Convention::Plus),
            other => Err(format!(
                "unknown convention {other:?} (expected minus or plus)"
            )),
        }
    }
}

/// Densely filled prefix `B_0, B_1, ...` for one convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliTable {
    convention: Convention,
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn new(convention: Convention) -> Self {
        Self {
            convention,
            values: Vec::new(),
        }
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Grows the table until it holds `B_m`.
    pub fn extend_to(&mut self, m: usize) {
        while self.values.len() <= m {
            let top = self.values.len();
            let lower: Rational = self
                .values
                .iter()
                .enumerate()
                .map(|(k, b)| b * &Rational::from(choose(top as u64 + 1, k as u64)))
                .sum();
            let next = (self.convention.recurrence_rhs(top) - lower) / Rational::from(top + 1);
            self.values.push(next);
        }
    }

    pub fn get(&mut self, m: usize) -> Rational {
        self.extend_to(m);
        self.values[m].clone()
    }
}

fn memo(conv: Convention) -> &'static Mutex<BernoulliTable> {
    static MINUS: OnceLock<Mutex<BernoulliTable>> = OnceLock::new();
    static PLUS: OnceLock<Mutex<BernoulliTable>> = OnceLock::new();
    let cell = match conv {
        Convention::Minus => &MINUS,
        Convention::Plus => &PLUS,
    };
    cell.get_or_init(|| Mutex::new(BernoulliTable::new(conv)))
}

/// `B_m` in the given convention, from the shared memo table.
pub fn bernoulli_number(conv: Convention, m: usize) -> Rational {
    let mut table = memo(conv).lock().unwrap_or_else(|e| e.into_inner());
    table.get(m)
}

/// `[B_0, ..., B_upto]` from the shared memo table.
pub fn bernoulli_numbers(conv: Convention, upto: usize) -> Vec<Rational> {
    let mut table = memo(conv).lock().unwrap_or_else(|e| e.into_inner());
    table.extend_to(upto);
    table.values()[..=upto].to_vec()
}

/// `[B_0, ..., B_order]` read off the exponential generating function.
///
/// `(e^x - 1)/x` has coefficients `1/(i+1)!` and `(1 - e^{-x})/x` has
/// `(-1)^i/(i+1)!`; their reciprocals times `j!` give the numbers.
pub fn bernoulli_series(conv: Convention, order: usize) -> Vec<Rational> {
    let mut inv_fact = Rational::one();
    let denominator = PowerSeries::from_fn(order, |i| {
        inv_fact = &inv_fact / &Rational::from(i + 1);
        match conv {
            Convention::Plus if i % 2 == 1 => -&inv_fact,
            _ => inv_fact.clone(),
        }
    });
    let egf = denominator
        .reciprocal()
        .expect("constant term of (e^x - 1)/x is 1");
    let mut fact = Rational::one();
    egf.coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            if j > 0 {
                fact = &fact * &Rational::from(j);
            }
            c * &fact
        })
        .collect()
}

/// Anything that can hand out Bernoulli numbers.
///
/// Downstream formulas take a source so that verification can be run
/// against a deliberately altered table.
pub trait BernoulliSource: Send + Sync {
    fn bernoulli(&self, conv: Convention, m: usize) -> Rational;
}

/// The shared memoized recurrence tables.
#[derive(Clone, Copy, Debug, Default)]
pub struct Memoized;

impl BernoulliSource for Memoized {
    fn bernoulli(&self, conv: Convention, m: usize) -> Rational {
        bernoulli_number(conv, m)
    }
}

/// Explicit prefixes for each convention; indices past a prefix fall back
/// to [`Memoized`]. Used to load fixture tables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedTables {
    #[serde(default)]
    pub minus: Vec<Rational>,
    #[serde(default)]
    pub plus: Vec<Rational>,
}

impl FixedTables {
    /// Exact prefixes `B_0..=B_upto` from the recurrence.
    pub fn computed(upto: usize) -> Self {
        Self {
            minus: bernoulli_numbers(Convention::Minus, upto),
            plus: bernoulli_numbers(Convention::Plus, upto),
        }
    }

    pub fn table_mut(&mut self, conv: Convention) -> &mut Vec<Rational> {
        match conv {
            Convention::Minus => &mut self.minus,
            Convention::Plus => &mut self.plus,
        }
    }
}

impl BernoulliSource for FixedTables {
    fn bernoulli(&self, conv: Convention, m: usize) -> Rational {
        let table = match conv {
            Convention::Minus => &self.minus,
            Convention::Plus => &self.plus,
        };
        table
            .get(m)
            .cloned()
            .unwrap_or_else(|| bernoulli_number(conv, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    /// Akiyama–Tanigawa transform; yields B+ without touching the
    /// recurrence or series code above.
    fn akiyama_tanigawa(upto: usize) -> Vec<Rational> {
        let mut row = vec![Rational::zero(); upto + 1];
        let mut out = Vec::with_capacity(upto + 1);
        for m in 0..=upto {
            row[m] = q(1, m as i64 + 1);
            for j in (1..=m).rev() {
                row[j - 1] = Rational::from(j) * (&row[j - 1] - &row[j]);
            }
            out.push(row[0].clone());
        }
        out
    }

    #[test]
    fn first_values() {
        assert_eq!(bernoulli_number(Convention::Minus, 0), Rational::one());
        assert_eq!(bernoulli_number(Convention::Minus, 1), q(-1, 2));
        assert_eq!(bernoulli_number(Convention::Plus, 1), q(1, 2));
        assert_eq!(bernoulli_number(Convention::Plus, 0), Rational::one());
        assert_eq!(bernoulli_number(Convention::Minus, 2), q(1, 6));
        assert_eq!(bernoulli_number(Convention::Minus, 4), q(-1, 30));
    }

    #[test]
    fn frozen_values_from_independent_oracle() {
        let at = akiyama_tanigawa(60);
        // Frozen from the transform above.
        assert_eq!(at[12], q(-691, 2730));
        assert_eq!(at[20], q(-174611, 330));
        assert_eq!(at[30].to_string(), "8615841276005/14322");
        assert_eq!(
            at[60].to_string(),
            "-1215233140483755572040304994079820246041491/56786730"
        );
        assert_eq!(bernoulli_number(Convention::Minus, 12), q(-691, 2730));
        assert_eq!(bernoulli_numbers(Convention::Plus, 60), at);
    }

    #[test]
    fn conventions_differ_only_at_one() {
        for j in 0..=60 {
            let (m, p) = (
                bernoulli_number(Convention::Minus, j),
                bernoulli_number(Convention::Plus, j),
            );
            if j == 1 {
                assert_eq!(m, -p);
            } else {
                assert_eq!(m, p, "index {j}");
            }
        }
    }

    #[test]
    fn odd_indices_vanish() {
        for conv in Convention::ALL {
            for j in (3..=59).step_by(2) {
                assert!(bernoulli_number(conv, j).is_zero(), "{conv} B_{j}");
            }
        }
    }

    #[test]
    fn recurrence_residual_is_exact() {
        for conv in Convention::ALL {
            let b = bernoulli_numbers(conv, 60);
            for m in 0..=60usize {
                let lhs: Rational = (0..=m)
                    .map(|k| &b[k] * &Rational::from(choose(m as u64 + 1, k as u64)))
                    .sum();
                assert_eq!(lhs, conv.recurrence_rhs(m), "{conv} m={m}");
            }
        }
    }

    #[test]
    fn series_small_orders() {
        assert_eq!(
            bernoulli_series(Convention::Minus, 0),
            vec![Rational::one()]
        );
        let minus = bernoulli_series(Convention::Minus, 4);
        let plus = bernoulli_series(Convention::Plus, 4);
        assert_eq!(minus, bernoulli_numbers(Convention::Minus, 4));
        assert_eq!(plus[1], q(1, 2));
        for j in [0, 2, 3, 4] {
            assert_eq!(minus[j], plus[j]);
        }
    }

    #[test]
    fn series_matches_recurrence_to_60() {
        for conv in Convention::ALL {
            assert_eq!(
                bernoulli_series(conv, 60),
                bernoulli_numbers(conv, 60),
                "{conv}"
            );
        }
    }

    #[test]
    fn fresh_table_invariants() {
        let mut t = BernoulliTable::new(Convention::Plus);
        assert!(t.values().is_empty());
        t.extend_to(7);
        assert_eq!(t.values().len(), 8);
        assert_eq!(t.values()[0], Rational::one());
        assert_eq!(t.values()[1], q(1, 2));
        assert_eq!(t.get(3), Rational::zero());
    }

    #[test]
    fn concurrent_readers_agree() {
        let expected = akiyama_tanigawa(40);
        std::thread::scope(|s| {
            for t in 0..8 {
                let expected = &expected;
                s.spawn(move || {
                    for j in (0..=40).rev().skip(t) {
                        assert_eq!(&bernoulli_number(Convention::Plus, j), &expected[j]);
                    }
                });
            }
        });
    }

    #[test]
    fn fixed_tables_fall_back() {
        let mut t = FixedTables::computed(3);
        t.table_mut(Convention::Minus)[2] = q(1, 7);
        assert_eq!(t.bernoulli(Convention::Minus, 2), q(1, 7));
        assert_eq!(t.bernoulli(Convention::Plus, 2), q(1, 6));
        assert_eq!(t.bernoulli(Convention::Minus, 12), q(-691, 2730));
    }

    #[test]
    fn convention_parsing() {
        assert_eq!("minus".parse::<Convention>(), Ok(Convention::Minus));
        assert_eq!("plus".parse::<Convention>(), Ok(Convention::Plus));
        assert!("PLUS".parse::<Convention>().is_err());
        assert_eq!(Convention::Plus.to_string(), "plus");
    }
}
