//! Truncated formal power series with exact coefficients.

use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// `c_0 + c_1 x + ... + c_order x^order + O(x^{order+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Series of the given truncation order; missing coefficients are zero
    /// and extra ones are discarded.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    /// Builds the series from a coefficient function `i -> c_i`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Truncated product; the result carries the smaller of the two orders.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        PowerSeries::from_fn(order, |n| {
            (0..=n)
                .map(|i| &self.coeffs[i] * &other.coeffs[n - i])
                .sum()
        })
    }

    /// `r` with `self * r = 1 + O(x^{order+1})`:
    /// `r_0 = 1/s_0`, `r_n = -(sum_{i=1..n} s_i r_{n-i}) / s_0`.
    pub fn reciprocal(&self) -> Result<PowerSeries> {
        let s0 = &self.coeffs[0];
        if s0.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let mut r: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        r.push(s0.recip()?);
        for n in 1..self.coeffs.len() {
            let acc: Rational = (1..=n).map(|i| &self.coeffs[i] * &r[n - i]).sum();
            r.push(-(acc / s0));
        }
        Ok(PowerSeries { coeffs: r })
    }
}
