//! Jacobi theta sums on the positive real axis.
//!
//! `psi(u) = sum_{n>=1} exp(-pi u n^2)` is the tail of the full theta sum
//! `theta(u) = 1 + 2 psi(u)`. The series converges brutally fast for u of
//! order one but degrades as u -> 0; below a small threshold psi reroutes
//! once through the modular relation
//! `psi(u) = psi(1/u)/sqrt(u) + 1/(2 sqrt(u)) - 1/2`
//! so every sum actually evaluated has an argument >= 0.05.

use crate::error::{Error, Result};

/// Threshold below which [`psi`] reroutes through the modular relation.
pub const DIRECT_SUM_MIN: f64 = 0.05;

const REL_CUTOFF: f64 = 1e-18;

/// A theta-type sum together with the number of series terms it consumed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaValue {
    pub value: f64,
    pub terms_used: usize,
}

fn direct_sum(u: f64) -> ThetaValue {
    let pi = std::f64::consts::PI;
    // Always take the n = 1 term; for huge u it may underflow to zero but
    // the count invariant terms_used >= 1 is kept.
    let mut sum = (-pi * u).exp();
    let mut terms = 1usize;
    loop {
        let n = (terms + 1) as f64;
        let term = (-pi * u * n * n).exp();
        if term < REL_CUTOFF * (sum + 1e-300) {
            break;
        }
        sum += term;
        terms += 1;
    }
    ThetaValue { value: sum, terms_used: terms }
}

/// `psi(u)` for finite u > 0. Arguments below [`DIRECT_SUM_MIN`] are folded
/// through the modular relation so the sum runs at 1/u instead.
pub fn psi(u: f64) -> Result<ThetaValue> {
    if !u.is_finite() || u <= 0.0 {
        return Err(Error::ThetaDomain);
    }
    if u < DIRECT_SUM_MIN {
        let inner = direct_sum(1.0 / u);
        let rs = u.sqrt().recip();
        return Ok(ThetaValue {
            value: inner.value * rs + 0.5 * rs - 0.5,
            terms_used: inner.terms_used,
        });
    }
    Ok(direct_sum(u))
}

/// The full sum `theta(u) = 1 + 2 psi(u)`.
pub fn theta_full(u: f64) -> Result<f64> {
    Ok(1.0 + 2.0 * psi(u)?.value)
}

/// Defect in the modular relation,
/// `psi(u) - [psi(1/u)/sqrt(u) + 1/(2 sqrt(u)) - 1/2]`.
/// For u in `[0.05, 20]` both psi calls run the direct sum at different
/// arguments, so the two sides are genuinely independent evaluations.
pub fn psi_functional_residual(u: f64) -> Result<f64> {
    let lhs = psi(u)?.value;
    let rs = u.sqrt().recip();
    let rhs = psi(1.0 / u)?.value * rs + 0.5 * rs - 0.5;
    Ok(lhs - rhs)
}


#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn decreasing_in_u(a in 0.05f64..20.0, delta in 0.01f64..5.0) {
            let lo = psi(a).unwrap().value;
            let hi = psi(a + delta).unwrap().value;
            prop_assert!(lo > hi, "psi({a}) = {lo} <= psi({}) = {hi}", a + delta);
        }

        #[test]
        fn modular_relation_holds(u in 0.05f64..20.0) {
            let r = psi_functional_residual(u).unwrap();
            prop_assert!(r.abs() < 1e-13, "residual {r:e} at u = {u}");
        }

        #[test]
        fn poisson_identity(u in 0.05f64..20.0) {
            let lhs = theta_full(u).unwrap() * u.sqrt();
            let rhs = theta_full(1.0 / u).unwrap();
            prop_assert!((lhs - rhs).abs() < 1e-12 * rhs.abs().max(1.0),
                "theta({u}) sqrt(u) = {lhs} vs theta(1/u) = {rhs}");
        }

        #[test]
        fn term_count_obeys_bound(u in 0.05f64..50.0) {
            let used = psi(u).unwrap().terms_used;
            let bound = 1 + (18.0 * std::f64::consts::LN_10
                / (std::f64::consts::PI * u))
                .sqrt()
                .ceil() as usize;
            prop_assert!(used <= bound, "{used} terms at u = {u}, bound {bound}");
        }
    }
}
