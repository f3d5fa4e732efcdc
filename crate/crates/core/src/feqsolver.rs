//! Polynomial solutions of `f(x) + r(x) = f(x + 1)`.
//!
//! For `r(x) = x^k`, writing `f(x) = sum_{j=0}^{k+1} a_j x^j` and matching
//! coefficients gives a triangular system. Its top equation forces
//! `a_{k+1} = 1/(k+1)`, and the rest are solved downward by
//!
//! ```text
//! a_j = -(sum_{l=j+1}^{k+1} a_l C(l, j-1)) / j        (j = k, ..., 1)
//! ```
//!
//! The constant `a_0` cancels out of `f(x + 1) - f(x)` and is free. Every
//! solution produced here fixes `a_0 = 0`, i.e. `f(0) = 0`.
//!
//! The rescaled coefficients `b_j = (k+1) a_{k+1-j} / C(k+1, j)` are the
//! Bernoulli numbers `B-_0..B-_k`; for `r(x) = (x+1)^k` they are `B+_0..B+_k`.
//! `b_{k+1}` would be `(k+1) a_0` and is therefore not determined.

use serde::{Deserialize, Serialize};

use crate::bernoulli::Convention;
use crate::error::{Error, Result};
use crate::exactnum::{choose, Rational};
use crate::poly::Polynomial;

/// Which right-hand side a solution was computed for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DrivingTerm {
    /// `x^k`
    Monomial,
    /// `(x + 1)^k`
    Shifted,
}

impl DrivingTerm {
    /// The convention whose numbers the solution encodes.
    pub fn convention(self) -> Convention {
        match self {
            DrivingTerm::Monomial => Convention::Minus,
            DrivingTerm::Shifted => Convention::Plus,
        }
    }

    pub fn polynomial(self, k: usize) -> Polynomial {
        match self {
            DrivingTerm::Monomial => Polynomial::monomial(k),
            DrivingTerm::Shifted => Polynomial::monomial(k).shift(&Rational::one()),
        }
    }
}

/// How the free constant term was fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// `a_0 = 0`, so `f(0) = 0`.
    ZeroConstant,
}

impl Normalization {
    pub fn describe(self) -> &'static str {
        match self {
            Normalization::ZeroConstant => "a_0 = 0 (free constant fixed so that f(0) = 0)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeqSolution {
    pub k: usize,
    pub driving: DrivingTerm,
    /// `a_0..a_{k+1}`, always `k + 2` entries.
    pub coeffs: Vec<Rational>,
    pub normalization: Normalization,
}

impl FeqSolution {
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::new(self.coeffs.clone())
    }

    pub fn rhs(&self) -> Polynomial {
        self.driving.polynomial(self.k)
    }

    /// Whether `f(x + 1) - f(x)` reproduces the driving term exactly.
    pub fn satisfies_equation(&self) -> bool {
        self.polynomial().forward_difference() == self.rhs()
    }
}

/// Minimal-degree solution of `f(x) + x^k = f(x + 1)` by back-substitution.
pub fn solve_monomial(k: usize) -> FeqSolution {
    let mut a = vec![Rational::zero(); k + 2];
    a[k + 1] = Rational::from(k + 1).recip().expect("k + 1 > 0");
    for j in (1..=k).rev() {
        let acc: Rational = (j + 1..=k + 1)
            .map(|l| &a[l] * &Rational::from(choose(l as u64, j as u64 - 1)))
            .sum();
        a[j] = -(acc / Rational::from(j));
    }
    FeqSolution {
        k,
        driving: DrivingTerm::Monomial,
        coeffs: a,
        normalization: Normalization::ZeroConstant,
    }
}

/// The unique `f` with `f(x + 1) - f(x) = rhs(x)` and `f(0) = 0`, by
/// linearity over the monomials of `rhs`.
pub fn solve_difference(rhs: &Polynomial) -> Polynomial {
    rhs.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(d, c)| solve_monomial(d).polynomial().scale(c))
        .sum()
}

/// Minimal-degree solution of `f(x) + (x + 1)^k = f(x + 1)`.
pub fn solve_shifted(k: usize) -> FeqSolution {
    let driving = DrivingTerm::Shifted;
    let mut coeffs = solve_difference(&driving.polynomial(k)).into_coeffs();
    coeffs.resize(k + 2, Rational::zero());
    FeqSolution {
        k,
        driving,
        coeffs,
        normalization: Normalization::ZeroConstant,
    }
}

/// `[b_0, ..., b_k]` with `b_j = (k+1) a_{k+1-j} / C(k+1, j)`.
pub fn extract_bernoulli(sol: &FeqSolution, flavor: Convention) -> Result<Vec<Rational>> {
    let solved = sol.driving.convention();
    if solved != flavor {
        return Err(Error::ConventionMismatch {
            solved,
            requested: flavor,
        });
    }
    let k = sol.k;
    let scale = Rational::from(k + 1);
    Ok((0..=k)
        .map(|j| {
            let binom = Rational::from(choose(k as u64 + 1, j as u64));
            &(&scale * &sol.coeffs[k + 1 - j]) / &binom
        })
        .collect())
}

/// Searches for `f` of degree at most `max_degree` with
/// `f(x + 1) - f(x) = rhs(x)` by Gaussian elimination on the full
/// coefficient-matching system. Returns `None` if the system is
/// inconsistent; otherwise a solution with every free unknown (including
/// `a_0`) set to zero.
pub fn solve_by_elimination(rhs: &Polynomial, max_degree: usize) -> Option<Polynomial> {
    let unknowns = max_degree + 1;
    let rows = unknowns.max(rhs.coeffs().len());
    // Row j: coefficient of x^j in f(x+1) - f(x) = sum_{l>j} C(l, j) a_l.
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|j| {
            let mut row: Vec<Rational> = (0..unknowns)
                .map(|l| {
                    if l > j {
                        Rational::from(choose(l as u64, j as u64))
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            row.push(rhs.coeff(j));
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip().expect("pivot is nonzero");
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *v -= &(&factor * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); unknowns];
    for (i, &col) in pivots.iter().enumerate() {
        sol[col] = m[i][unknowns].clone();
    }
    Some(Polynomial::new(sol))
}
