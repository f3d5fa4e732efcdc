//! Sums of powers `F(n, p) = 1^p + 2^p + ... + n^p`.
//!
//! The closed form is the degree `p + 1` polynomial
//! `(1/(p+1)) sum_{j=0}^{p} C(p+1, j) B_j x^{p+1-j}`. With `B+` it gives
//! `F(n, p)` at `x = n`; with `B-` it is the polynomial `f_p` satisfying
//! `f_p(x + 1) - f_p(x) = x^p`, and `F(n, p) = f_p(n + 1)` for `p > 0`.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::bernoulli::{BernoulliSource, Convention, Memoized};
use crate::error::{Error, Result};
use crate::exactnum::{choose, Integer, Rational};
use crate::poly::Polynomial;

/// Direct accumulation of `sum_{i=1}^{n} i^p`.
pub fn sum_powers_naive(n: &BigUint, p: usize) -> Integer {
    let exp = u32::try_from(p).expect("exponent fits in u32");
    let mut total = Integer::zero();
    if let Some(n) = n.to_u64() {
        for i in 1..=n {
            total += BigInt::from(i).pow(exp);
        }
    } else {
        let mut i = BigUint::from(1u32);
        while &i <= n {
            total += BigInt::from(i.pow(exp));
            i += 1u32;
        }
    }
    total
}

/// Closed-form polynomial for power `p` in the given convention.
pub fn faulhaber_poly(p: usize, conv: Convention) -> Polynomial {
    faulhaber_poly_with(&Memoized, p, conv)
}

pub fn faulhaber_poly_with(source: &dyn BernoulliSource, p: usize, conv: Convention) -> Polynomial {
    let scale = Rational::from(p + 1);
    let mut coeffs = vec![Rational::zero(); p + 2];
    for j in 0..=p {
        let c = Rational::from(choose(p as u64 + 1, j as u64)) * source.bernoulli(conv, j);
        coeffs[p + 1 - j] = c / &scale;
    }
    Polynomial::new(coeffs)
}

/// `F(n, p)` by evaluating the `B+` closed form at `n`.
pub fn sum_powers_closed(n: &BigUint, p: usize) -> Result<Integer> {
    sum_powers_closed_with(&Memoized, n, p)
}

pub fn sum_powers_closed_with(
    source: &dyn BernoulliSource,
    n: &BigUint,
    p: usize,
) -> Result<Integer> {
    let value = faulhaber_poly_with(source, p, Convention::Plus).eval(&Rational::from(n));
    integral(value, n, p)
}

/// `F(n, p)` by evaluating the `B-` closed form at `n + 1`. Only valid for
/// `p > 0`: at `p = 0` the expression gives `n + 1`.
pub fn faulhaber_variant_eval(n: &BigUint, p: usize) -> Result<Integer> {
    faulhaber_variant_eval_with(&Memoized, n, p)
}

pub fn faulhaber_variant_eval_with(
    source: &dyn BernoulliSource,
    n: &BigUint,
    p: usize,
) -> Result<Integer> {
    if p == 0 {
        return Err(Error::VariantNeedsPositivePower(p));
    }
    let at = Rational::from(n) + Rational::one();
    let value = faulhaber_poly_with(source, p, Convention::Minus).eval(&at);
    integral(value, n, p)
}

fn integral(value: Rational, n: &BigUint, p: usize) -> Result<Integer> {
    value.to_integer().ok_or_else(|| Error::NonIntegralSum {
        n: n.to_string(),
        p,
        value: value.to_string(),
    })
}

/// `B_k(x) = sum_{j=0}^{k} C(k, j) B_j x^{k-j}`, constant term included.
pub fn bernoulli_polynomial(k: usize, conv: Convention) -> Polynomial {
    bernoulli_polynomial_with(&Memoized, k, conv)
}

pub fn bernoulli_polynomial_with(
    source: &dyn BernoulliSource,
    k: usize,
    conv: Convention,
) -> Polynomial {
    let mut coeffs = vec![Rational::zero(); k + 1];
    for j in 0..=k {
        coeffs[k - j] = Rational::from(choose(k as u64, j as u64)) * source.bernoulli(conv, j);
    }
    Polynomial::new(coeffs)
}
