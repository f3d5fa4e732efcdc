//! Naive summation against the closed form as n grows.
//!
//! ```bash
//! cargo run --release -p bernoulli-feq --example closed_form_speedup
//! ```

use bernoulli_feq::bench::{run_bench, TIMING_NOTE};
use num_bigint::BigUint;

fn main() -> bernoulli_feq::Result<()> {
    let ns: Vec<BigUint> = [1_000u64, 10_000, 100_000, 1_000_000]
        .into_iter()
        .map(BigUint::from)
        .collect();
    for p in [1, 3, 10] {
        println!("p = {p} ({TIMING_NOTE})");
        for row in run_bench(&ns, p, 3)? {
            println!(
                "  n = {:>8}: naive {:.3e}s, closed {:.3e}s, ratio {:>9.1}",
                row.n, row.naive_seconds, row.closed_seconds, row.ratio
            );
        }
    }
    Ok(())
}
