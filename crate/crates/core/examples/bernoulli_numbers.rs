//! Bernoulli numbers in both conventions, by recurrence and by generating function.
//!
//! ```bash
//! cargo run -p bernoulli-feq --example bernoulli_numbers -- 20
//! ```

use bernoulli_feq::bernoulli::{bernoulli_numbers, bernoulli_series, Convention};

fn main() {
    let upto: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(16);

    let minus = bernoulli_numbers(Convention::Minus, upto);
    let plus = bernoulli_numbers(Convention::Plus, upto);
    println!("{:>4}  {:>24}  {:>24}", "j", "B-_j", "B+_j");
    for j in 0..=upto {
        println!(
            "{j:>4}  {:>24}  {:>24}",
            minus[j].to_string(),
            plus[j].to_string()
        );
    }

    for conv in Convention::ALL {
        let series = bernoulli_series(conv, upto);
        let table = bernoulli_numbers(conv, upto);
        println!(
            "{conv}: generating function agrees with recurrence up to {upto}: {}",
            series == table
        );
    }
}
