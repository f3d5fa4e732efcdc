//! Wall-clock comparison of naive summation against the closed form.

use std::hint::black_box;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::faulhaber::{sum_powers_closed, sum_powers_naive};

pub const TIMING_NOTE: &str = "timings are wall-clock, machine-dependent, best of the repetitions";

/// Closed-form evaluations are batched until one batch takes at least this long.
const MIN_BATCH: Duration = Duration::from_millis(2);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: String,
    /// `F(n, p)`, identical for both methods.
    pub value: String,
    pub naive_seconds: f64,
    pub closed_seconds: f64,
    /// `naive_seconds / closed_seconds`.
    pub ratio: f64,
}

/// Times both methods for every `n`. The exact results are compared before
/// any timing happens; a disagreement aborts with [`Error::BenchMismatch`].
pub fn run_bench(ns: &[BigUint], p: usize, repetitions: usize) -> Result<Vec<BenchRow>> {
    if p == 0 {
        return Err(Error::BenchArgument("p >= 1"));
    }
    if repetitions == 0 {
        return Err(Error::BenchArgument("at least one repetition"));
    }
    let mut values = Vec::with_capacity(ns.len());
    for n in ns {
        let naive = sum_powers_naive(n, p);
        let closed = sum_powers_closed(n, p)?;
        if naive != closed {
            return Err(Error::BenchMismatch {
                n: n.to_string(),
                naive: naive.to_string(),
                closed: closed.to_string(),
            });
        }
        values.push(closed);
    }

    Ok(ns
        .iter()
        .zip(values)
        .map(|(n, value)| {
            let naive = best_of(repetitions, || {
                let start = Instant::now();
                black_box(sum_powers_naive(black_box(n), p));
                start.elapsed().as_secs_f64()
            });
            let closed = best_of(repetitions, || time_closed_per_call(n, p));
            BenchRow {
                n: n.to_string(),
                value: value.to_string(),
                naive_seconds: naive,
                closed_seconds: closed,
                ratio: naive / closed,
            }
        })
        .collect())
}

fn best_of(repetitions: usize, mut f: impl FnMut() -> f64) -> f64 {
    (0..repetitions).map(|_| f()).fold(f64::INFINITY, f64::min)
}

fn time_closed_per_call(n: &BigUint, p: usize) -> f64 {
    let mut batch = 1u32;
    loop {
        let start = Instant::now();
        for _ in 0..batch {
            black_box(sum_powers_closed(black_box(n), p).expect("checked above"));
        }
        let elapsed = start.elapsed();
        if elapsed >= MIN_BATCH || batch >= 1 << 20 {
            return elapsed.as_secs_f64() / f64::from(batch);
        }
        batch *= 2;
    }
}
