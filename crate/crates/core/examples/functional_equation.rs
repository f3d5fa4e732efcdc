//! Solving f(x) + x^k = f(x+1) (and the (x+1)^k variant) by back-substitution,
//! then reading Bernoulli numbers off the solution's coefficients.
//!
//! ```bash
//! cargo run -p bernoulli-feq --example functional_equation -- 8
//! ```

use bernoulli_feq::bernoulli::Convention;
use bernoulli_feq::feqsolver::{
    extract_bernoulli, solve_by_elimination, solve_monomial, solve_shifted,
};
use bernoulli_feq::Polynomial;

fn show(values: &[bernoulli_feq::Rational]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn main() -> bernoulli_feq::Result<()> {
    let k: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);

    for sol in [solve_monomial(k), solve_shifted(k)] {
        let conv = sol.driving.convention();
        println!("right-hand side {}:", sol.rhs());
        println!("  f(x) = {}", sol.polynomial());
        println!("  a_0..a_{} = {}", k + 1, show(&sol.coeffs));
        println!("  {}", sol.normalization.describe());
        println!("  residual exact: {}", sol.satisfies_equation());
        let sign = match conv {
            Convention::Minus => '-',
            Convention::Plus => '+',
        };
        println!(
            "  B{sign}_0..B{sign}_{k} = {}",
            show(&extract_bernoulli(&sol, conv)?)
        );
    }

    // The solution cannot have degree <= k.
    let rhs = Polynomial::monomial(k);
    for d in 0..=k + 1 {
        let found = solve_by_elimination(&rhs, d);
        println!(
            "degree <= {d}: {}",
            if found.is_some() {
                "solvable"
            } else {
                "no solution"
            }
        );
    }
    Ok(())
}
