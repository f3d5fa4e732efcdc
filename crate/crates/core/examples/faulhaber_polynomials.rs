//! The polynomials f_k (from B-), g_k (from B+) and the Bernoulli
//! polynomials B_k(x), with their difference and derivative identities.
//!
//! ```bash
//! cargo run -p bernoulli-feq --example faulhaber_polynomials -- 6
//! ```

use bernoulli_feq::bernoulli::{bernoulli_number, Convention};
use bernoulli_feq::faulhaber::{bernoulli_polynomial, faulhaber_poly};
use bernoulli_feq::{Polynomial, Rational};

fn main() {
    let k: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let one = Rational::one();

    let f = faulhaber_poly(k, Convention::Minus);
    let g = faulhaber_poly(k, Convention::Plus);
    let b = bernoulli_polynomial(k, Convention::Minus);
    println!("f_{k}(x) = {f}");
    println!("g_{k}(x) = {g}");
    println!("B_{k}(x) = {b}");
    println!("coefficients of f_{k}: {}", f.to_coeff_list());

    let xk = Polynomial::monomial(k);
    println!("f_{k}(x+1) - f_{k}(x) = {}", f.forward_difference());
    assert_eq!(f.forward_difference(), xk);
    println!("g_{k}(x+1) - g_{k}(x) = {}", g.forward_difference());
    assert_eq!(g.forward_difference(), xk.shift(&one));

    if k >= 1 {
        println!("B_{k}(x+1) - B_{k}(x) = {}", b.forward_difference());
        println!("d/dx B_{k}(x) = {}", b.derivative());
    }

    // (k+1) f_k(x) matches B_{k+1}(x) except for its constant term B_{k+1}.
    let scaled = f.scale(&Rational::from(k + 1));
    let next = bernoulli_polynomial(k + 1, Convention::Minus);
    println!("(k+1) f_{k}(x) = {scaled}");
    println!("B_{}(x)     = {next}", k + 1);
    println!("difference  = {}", &next - &scaled);
    assert_eq!(
        &next - &scaled,
        Polynomial::constant(bernoulli_number(Convention::Minus, k + 1))
    );
}
