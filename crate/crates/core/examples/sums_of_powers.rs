//! F(n, p) = 1^p + ... + n^p three ways: direct summation, the B+ closed
//! form at n, and the B- closed form at n + 1.
//!
//! ```bash
//! cargo run -p bernoulli-feq --example sums_of_powers
//! ```

use bernoulli_feq::faulhaber::{faulhaber_variant_eval, sum_powers_closed, sum_powers_naive};
use num_bigint::BigUint;

fn main() -> bernoulli_feq::Result<()> {
    for (n, p) in [(3u64, 2usize), (100, 1), (10, 3), (200, 25)] {
        let n = BigUint::from(n);
        let naive = sum_powers_naive(&n, p);
        let closed = sum_powers_closed(&n, p)?;
        let variant = faulhaber_variant_eval(&n, p)?;
        assert!(naive == closed && closed == variant);
        println!("F({n}, {p}) = {closed}");
    }

    // Only the closed forms are practical here.
    let huge: BigUint = "1000000000000000000000000000000".parse().unwrap();
    println!("F(10^30, 5) = {}", sum_powers_closed(&huge, 5)?);

    // The variant formula needs p > 0.
    if let Err(e) = faulhaber_variant_eval(&BigUint::from(5u32), 0) {
        println!("variant at p = 0: {e}");
    }
    Ok(())
}
