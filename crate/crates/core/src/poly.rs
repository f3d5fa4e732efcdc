//! Dense univariate polynomials over [`Rational`].
//!
//! Coefficients are stored in ascending order and the highest stored
//! coefficient is never zero, so two polynomials are equal exactly when
//! their coefficient vectors are equal. The zero polynomial has no
//! coefficients and degree `-1`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactnum::{choose, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x^d`.
    pub fn monomial(d: usize) -> Self {
        Self::term(Rational::one(), d)
    }

    /// `c * x^d`.
    pub fn term(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(acc * x) + c)
    }

    /// `q(x) = p(x + c)`, by expanding each `(x + c)^j` binomially.
    pub fn shift(&self, c: &Rational) -> Polynomial {
        let n = self.coeffs.len();
        let mut c_pows = Vec::with_capacity(n);
        let mut cur = Rational::one();
        for _ in 0..n {
            c_pows.push(cur.clone());
            cur *= c;
        }
        let mut out = vec![Rational::zero(); n];
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate().take(j + 1) {
                let b = Rational::from(choose(j as u64, i as u64));
                *slot += &(&(a * &b) * &c_pows[j - i]);
            }
        }
        Polynomial::new(out)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from(i))
                .collect(),
        )
    }

    /// `Δp(x) = p(x + 1) - p(x)`.
    pub fn forward_difference(&self) -> Polynomial {
        &self.shift(&Rational::one()) - self
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Ascending coefficient list, e.g. `[0, -1/2, 1/2]`.
    pub fn to_coeff_list(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        format!("[{}]", parts.join(", "))
    }

    fn zip_with(
        &self,
        other: &Polynomial,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|i| f(&self.coeff(i), &other.coeff(i))).collect())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

/// Highest degree first: `1/2*x^2 - 1/2*x`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{d}")?,
                (_, false) => write!(f, "{mag}*x^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_coeff_list())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<Rational>::deserialize(deserializer).map(Polynomial::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn poly(cs: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let p = poly(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(p.coeffs().len(), 1);
        assert_eq!(p.degree(), 0);
        assert_eq!(Polynomial::new(vec![Rational::zero()]), Polynomial::zero());
        assert_eq!(Polynomial::zero().degree(), -1);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(Polynomial::zero().eval(&q(7, 3)), Rational::zero());
        // (x^2 - x)/2 at 3 is 1 + 2.
        let tri = poly(&[(0, 1), (-1, 2), (1, 2)]);
        assert_eq!(tri.eval(&Rational::from(3)), Rational::from(1 + 2));
        let p = poly(&[(1, 6), (-1, 2), (1, 3)]);
        assert_eq!(p.eval(&Rational::zero()), q(1, 6));
    }

    #[test]
    fn shift_examples() {
        let sq = Polynomial::monomial(2);
        assert_eq!(sq.shift(&Rational::one()), poly(&[(1, 1), (2, 1), (1, 1)]));
        let p = poly(&[(3, 1), (-1, 7), (0, 1), (5, 2)]);
        assert_eq!(p.shift(&Rational::zero()), p);
        assert_eq!(Polynomial::zero().shift(&q(3, 2)), Polynomial::zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            Polynomial::constant(q(5, 3)).derivative(),
            Polynomial::zero()
        );
        assert_eq!(
            Polynomial::monomial(3).derivative(),
            Polynomial::term(Rational::from(3), 2)
        );
    }

    #[test]
    fn forward_difference_examples() {
        assert_eq!(
            Polynomial::constant(q(-4, 9)).forward_difference(),
            Polynomial::zero()
        );
        let tri = poly(&[(0, 1), (-1, 2), (1, 2)]);
        assert_eq!(tri.forward_difference(), Polynomial::monomial(1));
        assert_eq!(
            Polynomial::monomial(2).forward_difference(),
            poly(&[(1, 1), (2, 1)])
        );
    }

    #[test]
    fn arithmetic_examples() {
        let p = poly(&[(1, 3), (0, 1), (-2, 5)]);
        assert_eq!(&p + &Polynomial::zero(), p);
        assert_eq!(&p - &p, Polynomial::zero());
        let xx = poly(&[(0, 1), (1, 1), (1, 1)]);
        assert_eq!(xx.scale(&q(1, 2)), poly(&[(0, 1), (1, 2), (1, 2)]));
        assert_eq!(xx.scale(&Rational::zero()), Polynomial::zero());
        // cancellation of the leading term renormalizes
        assert_eq!((&xx - &Polynomial::monomial(2)).degree(), 1);
    }

    #[test]
    fn human_rendering() {
        assert_eq!(
            poly(&[(0, 1), (-1, 2), (1, 2)]).to_string(),
            "1/2*x^2 - 1/2*x"
        );
        assert_eq!(
            poly(&[(0, 1), (1, 2), (1, 2)]).to_string(),
            "1/2*x^2 + 1/2*x"
        );
        assert_eq!(
            poly(&[(1, 6), (-1, 1), (1, 1)]).to_string(),
            "x^2 - x + 1/6"
        );
        assert_eq!(poly(&[(-1, 2), (1, 1)]).to_string(), "x - 1/2");
        assert_eq!(poly(&[(0, 1), (0, 1), (-3, 1)]).to_string(), "-3*x^2");
        assert_eq!(poly(&[(0, 1), (-1, 1)]).to_string(), "-x");
        assert_eq!(Polynomial::constant(Rational::one()).to_string(), "1");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn coefficient_list_rendering() {
        assert_eq!(
            poly(&[(0, 1), (-1, 2), (1, 2)]).to_coeff_list(),
            "[0, -1/2, 1/2]"
        );
        assert_eq!(Polynomial::zero().to_coeff_list(), "[]");
        let json = serde_json::to_string(&poly(&[(0, 1), (-1, 2), (1, 2)])).unwrap();
        assert_eq!(json, r#"["0","-1/2","1/2"]"#);
        let back: Polynomial = serde_json::from_str(r#"["1","0","0"]"#).unwrap();
        assert_eq!(back, Polynomial::constant(Rational::one()));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..=1000, 1i64..=60).prop_map(|(n, d)| q(n, d))
    }

    fn arb_poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(arb_rational(), 0..=max_degree + 1).prop_map(Polynomial::new)
    }

    proptest! {
        #[test]
        fn shift_round_trip(p in arb_poly(12)) {
            prop_assert_eq!(p.shift(&Rational::one()).shift(&-Rational::one()), p);
        }

        #[test]
        fn shift_is_evaluation_homomorphism(p in arb_poly(15), c in arb_rational(), x in arb_rational()) {
            prop_assert_eq!(p.shift(&c).eval(&x), p.eval(&(&x + &c)));
        }

        #[test]
        fn difference_lowers_degree(p in arb_poly(20)) {
            prop_assume!(p.degree() >= 1);
            prop_assert_eq!(p.forward_difference().degree(), p.degree() - 1);
        }

        #[test]
        fn difference_is_linear(p in arb_poly(12), r in arb_poly(12), a in arb_rational(), b in arb_rational()) {
            let lhs = (&p.scale(&a) + &r.scale(&b)).forward_difference();
            let rhs = &p.forward_difference().scale(&a) + &r.forward_difference().scale(&b);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn derivative_commutes_with_shift(p in arb_poly(15), c in arb_rational()) {
            prop_assert_eq!(p.shift(&c).derivative(), p.derivative().shift(&c));
        }

        #[test]
        fn difference_matches_pointwise(p in arb_poly(10), x in arb_rational()) {
            let expected = &p.eval(&(&x + &Rational::one())) - &p.eval(&x);
            prop_assert_eq!(p.forward_difference().eval(&x), expected);
        }
    }
}
