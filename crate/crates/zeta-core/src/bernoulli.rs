//! Bernoulli numbers and polynomials, exact up to index 64.
//!
//! The numbers are generated once by the recurrence
//! `b_n = -1/(n+1) * sum_{k<n} C(n+1, k) b_k`
//! in arbitrary-precision rational arithmetic (convention `b_1 = -1/2`), then
//! viewed as f64 on demand. Polynomial coefficients `C(n, k) b_{n-k}` are
//! likewise formed exactly and rounded once, so the f64 evaluation error is
//! Horner rounding only.

use std::sync::LazyLock;

use num::rational::BigRational;
use num::traits::{One, ToPrimitive, Zero};
use num::BigInt;

use crate::error::{Error, Result};

/// Largest index held by the shared table.
pub const MAX_INDEX: usize = 64;

pub struct BernoulliTable {
    exact: Vec<BigRational>,
    /// poly[n][k] is the x^k coefficient of the n-th Bernoulli polynomial.
    poly: Vec<Vec<f64>>,
}

static TABLE: LazyLock<BernoulliTable> = LazyLock::new(|| BernoulliTable::build(MAX_INDEX));

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    for k in 0..=n {
        row.push(c.clone());
        if k < n {
            c = c * BigInt::from(n - k) / BigInt::from(k + 1);
        }
    }
    row
}

impl BernoulliTable {
    fn build(max: usize) -> Self {
        let mut exact: Vec<BigRational> = Vec::with_capacity(max + 1);
        exact.push(BigRational::one());
        for n in 1..=max {
            let binom = binomial_row(n + 1);
            let mut acc = BigRational::zero();
            for (k, b) in exact.iter().enumerate() {
                acc += BigRational::from(binom[k].clone()) * b;
            }
            let next = -acc / BigRational::from(BigInt::from(n + 1));
            exact.push(next);
        }

        let mut poly = Vec::with_capacity(max + 1);
        for n in 0..=max {
            let binom = binomial_row(n);
            let coeffs: Vec<f64> = (0..=n)
                .map(|k| {
                    let c = BigRational::from(binom[k].clone()) * &exact[n - k];
                    rational_to_f64(&c)
                })
                .collect();
            poly.push(coeffs);
        }

        BernoulliTable { exact, poly }
    }

    pub fn shared() -> &'static Self {
        &TABLE
    }

    pub fn exact(&self, n: usize) -> Result<&BigRational> {
        self.exact
            .get(n)
            .ok_or(Error::TableRange { n, max: MAX_INDEX })
    }

    pub fn number(&self, n: usize) -> Result<f64> {
        Ok(rational_to_f64(self.exact(n)?))
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64()
        .unwrap_or_else(|| r.numer().to_f64().unwrap() / r.denom().to_f64().unwrap())
}

/// The n-th Bernoulli number as f64 (`b_1 = -1/2` convention).
pub fn bernoulli_number(n: usize) -> Result<f64> {
    BernoulliTable::shared().number(n)
}

/// `b_n / n!` formed in exact arithmetic before the single rounding to f64.
/// These are the natural coefficients of the Euler-Maclaurin correction
/// terms, where forming the quotient in f64 would waste accuracy once n!
/// exceeds 2^53.
pub fn bernoulli_over_factorial(n: usize) -> Result<f64> {
    let b = BernoulliTable::shared().exact(n)?;
    let mut fact = BigInt::one();
    for k in 2..=n.max(1) {
        fact *= BigInt::from(k);
    }
    Ok(rational_to_f64(&(b / BigRational::from(fact))))
}

/// Evaluates the n-th Bernoulli polynomial at x by Horner's rule.
pub fn bernoulli_polynomial(n: usize, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    let table = BernoulliTable::shared();
    let coeffs = table
        .poly
        .get(n)
        .ok_or(Error::TableRange { n, max: MAX_INDEX })?;
    let mut v = 0.0;
    for &c in coeffs.iter().rev() {
        v = v * x + c;
    }
    Ok(v)
}

/// The 1-periodic extension `B*_n(x) = B_n(x - floor(x))`.
pub fn periodic_bernoulli(n: usize, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    bernoulli_polynomial(n, x - x.floor())
}

/// Sign-free magnitude bound for `|B_n|` on `[0, 1]`, by dense sampling with
/// ten percent headroom. Used to bound quadrature tails over the periodic
/// extension.
pub fn periodic_bound(n: usize) -> Result<f64> {
    let mut max = 0.0f64;
    for i in 0..=2048 {
        let x = i as f64 / 2048.0;
        max = max.max(bernoulli_polynomial(n, x)?.abs());
    }
    Ok(max * 1.1)
}


#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn periodicity(n in 2usize..12, x in -10.0f64..10.0) {
            let a = periodic_bernoulli(n, x).unwrap();
            let b = periodic_bernoulli(n, x + 1.0).unwrap();
            // x + 1.0 may round, so equality holds only to a few ulps of the
            // polynomial's scale.
            prop_assert!((a - b).abs() < 1e-11, "n={n} x={x}: {a} vs {b}");
        }

        #[test]
        fn stays_inside_sampled_bound(n in 2usize..16, x in 0.0f64..1.0) {
            let bound = periodic_bound(n).unwrap();
            let v = bernoulli_polynomial(n, x).unwrap();
            prop_assert!(v.abs() <= bound);
        }
    }
}
