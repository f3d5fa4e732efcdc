//! Exact rationals, binomials and truncated power series.
//!
//! ```bash
//! cargo run -p bernoulli-feq --example exact_arithmetic
//! ```

use bernoulli_feq::exactnum::{binomial, Rational};
use bernoulli_feq::series::PowerSeries;

fn main() -> bernoulli_feq::Result<()> {
    let half: Rational = "1/2".parse()?;
    let third = Rational::new(1, 3)?;
    println!("1/2 + 1/3 = {}", &half + &third);
    println!("-691/2730 reduced stays {}", Rational::new(-1382, 5460)?);

    match half.checked_div(&Rational::zero()) {
        Ok(v) => println!("unexpected: {v}"),
        Err(e) => println!("1/2 / 0 -> error: {e}"),
    }

    println!("C(101, 50) = {}", binomial(101, 50)?);

    // 1/(1 + x) = 1 - x + x^2 - x^3 + O(x^4)
    let s = PowerSeries::new(vec![Rational::one(), Rational::one()], 3);
    let r = s.reciprocal()?;
    let shown: Vec<String> = r.coeffs().iter().map(ToString::to_string).collect();
    println!("1/(1 + x) to order 3: [{}]", shown.join(", "));
    Ok(())
}
