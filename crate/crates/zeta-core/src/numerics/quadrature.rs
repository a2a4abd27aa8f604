//! Romberg quadrature and the truncated improper integrals built on it.
//!
//! The integrator is a trapezoid refinement with Richardson extrapolation,
//! capped at a fixed number of extrapolation columns. With `order` columns the
//! scheme is exact for polynomials of degree `2*order - 1` and converges like
//! `h^(2*order)` on smooth integrands.

use crate::error::{Error, Result};

const EPS: f64 = f64::EPSILON;

/// Refinement levels always performed before the stopping rule is consulted.
/// Coarse grids can alias an oscillatory integrand into spuriously small
/// corrections; 2^8 panels puts every integrand used here past that regime.
const MIN_LEVELS: usize = 8;

/// Settings for [`romberg`] and [`improper_integral`].
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureConfig {
    /// Number of extrapolation columns kept in the Romberg tableau.
    pub order: usize,
    /// Maximum number of interval halvings (2^max_iters panels at the last).
    pub max_iters: usize,
    /// Upper limit replacing infinity in [`improper_integral`].
    pub cutoff: f64,
    /// Absolute error target; iteration stops once the extrapolation
    /// correction falls below it (or below the roundoff floor of the sums).
    pub tol: f64,
}

impl QuadratureConfig {
    pub fn new(order: usize, max_iters: usize, cutoff: f64, tol: f64) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidConfig("order must be at least 2".into()));
        }
        if max_iters < 1 || max_iters > 30 {
            return Err(Error::InvalidConfig("max_iters must lie in 1..=30".into()));
        }
        if !(cutoff > 1.0) || !cutoff.is_finite() {
            return Err(Error::InvalidConfig("cutoff must be finite and > 1".into()));
        }
        if !(tol > 0.0) {
            return Err(Error::InvalidConfig("tol must be positive".into()));
        }
        Ok(QuadratureConfig { order, max_iters, cutoff, tol })
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { order: 5, max_iters: 20, cutoff: 60.0, tol: 1e-15 }
    }
}

/// Outcome of a quadrature run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    /// Magnitude of the last extrapolation correction, floored on converged
    /// runs at the roundoff level of the underlying sums.
    pub err_est: f64,
    /// Whether the correction fell below the tolerance (or the roundoff
    /// floor) before the iteration budget ran out.
    pub converged: bool,
}

/// Exponential decay envelope `|f(u)| <= coeff * u^power * exp(-pi u)` used to
/// bound the tail dropped by [`improper_integral`].
#[derive(Debug, Clone, Copy)]
pub struct DecayBound {
    pub coeff: f64,
    pub power: f64,
}

impl DecayBound {
    pub fn exponential(coeff: f64) -> Self {
        DecayBound { coeff, power: 0.0 }
    }

    /// Bound on `integral_u^inf |f|`. Uses `ln x <= ln u + (x - u)/u`, so the
    /// envelope beyond `u` is dominated by a pure exponential with rate
    /// `pi - power/u`; requires `power < pi * u`.
    pub fn tail_beyond(&self, u: f64) -> f64 {
        let p = self.power.max(0.0);
        let rate = std::f64::consts::PI - p / u;
        if rate <= 0.0 {
            return f64::INFINITY;
        }
        self.coeff.abs() * u.powf(p) * (-std::f64::consts::PI * u).exp() / rate
    }
}

/// Integrates `f` over `[a, b]`.
///
/// The returned [`Quadrature`] carries the last correction as `err_est`; a
/// run that exhausts `cfg.max_iters` comes back with `converged == false` and
/// the caller decides what that means. Non-finite integrand values are
/// rejected outright.
pub fn romberg<F>(mut f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<Quadrature>
where
    F: FnMut(f64) -> f64,
{
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    if !(a < b) {
        return Err(Error::InvalidConfig("integration interval is empty".into()));
    }

    let mut eval = |x: f64| -> Result<f64> {
        let y = f(x);
        if !y.is_finite() {
            return Err(Error::NonFiniteIntegrand);
        }
        Ok(y)
    };

    let span = b - a;
    let fa = eval(a)?;
    let fb = eval(b)?;
    // abs_sum tracks integral |f| as a scale for the roundoff floor.
    let mut abs_sum = 0.5 * span * (fa.abs() + fb.abs());
    let mut trapezoid = 0.5 * span * (fa + fb);

    // Rolling previous row of the tableau, at most `order` columns wide.
    let mut prev_row: Vec<f64> = vec![trapezoid];
    let mut prev_est = trapezoid;
    let mut err_est = f64::INFINITY;
    let mut small_streak = 0usize;

    for level in 1..=cfg.max_iters {
        let panels = 1u64 << level;
        let h = span / panels as f64;

        // New midpoints, summed with compensation so the roundoff floor of
        // deep refinements stays near eps * integral |f|.
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        let mut abs_part = 0.0f64;
        let mut i = 1u64;
        while i < panels {
            let y = eval(a + i as f64 * h)?;
            abs_part += y.abs();
            let t = sum + y;
            if sum.abs() >= y.abs() {
                comp += (sum - t) + y;
            } else {
                comp += (y - t) + sum;
            }
            sum = t;
            i += 2;
        }
        trapezoid = 0.5 * trapezoid + h * (sum + comp);
        abs_sum = 0.5 * abs_sum + h * abs_part;

        let cols = level.min(cfg.order - 1);
        let mut row = Vec::with_capacity(cols + 1);
        row.push(trapezoid);
        let mut pow4 = 1.0f64;
        for j in 1..=cols {
            pow4 *= 4.0;
            let better = row[j - 1] + (row[j - 1] - prev_row[j - 1]) / (pow4 - 1.0);
            row.push(better);
        }

        let est = *row.last().expect("row is never empty");
        err_est = (est - prev_est).abs();

        // Roundoff floor of the accumulated sums; corrections below it carry
        // no information, so they count as converged even above tol.
        let floor = 32.0 * EPS * abs_sum.abs();
        if err_est < cfg.tol.max(floor) {
            small_streak += 1;
        } else {
            small_streak = 0;
        }
        if level >= MIN_LEVELS.max(cfg.order) && small_streak >= 2 {
            // A saturated extrapolation can make the last correction
            // arbitrarily tiny; the reported estimate never goes below the
            // roundoff floor of the sums behind it.
            return Ok(Quadrature { value: est, err_est: err_est.max(floor), converged: true });
        }

        prev_row = row;
        prev_est = est;
    }

    Ok(Quadrature { value: prev_est, err_est, converged: false })
}

/// Integrates `f` over `[1, cfg.cutoff]` as a stand-in for `[1, inf)`.
///
/// The caller states the decay envelope of `f`; the neglected tail bound must
/// come in under `cfg.tol` or the cutoff is rejected. `err_est` includes that
/// tail bound.
pub fn improper_integral<F>(f: F, bound: DecayBound, cfg: &QuadratureConfig) -> Result<Quadrature>
where
    F: FnMut(f64) -> f64,
{
    let tail = bound.tail_beyond(cfg.cutoff);
    if !(tail <= cfg.tol) {
        return Err(Error::CutoffTooSmall { bound: tail, tol: cfg.tol });
    }
    let mut q = romberg(f, 1.0, cfg.cutoff, cfg)?;
    q.err_est += tail;
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn config_rejects_bad_values() {
        assert!(QuadratureConfig::new(1, 20, 60.0, 1e-12).is_err());
        assert!(QuadratureConfig::new(5, 0, 60.0, 1e-12).is_err());
        assert!(QuadratureConfig::new(5, 31, 60.0, 1e-12).is_err());
        assert!(QuadratureConfig::new(5, 20, 1.0, 1e-12).is_err());
        assert!(QuadratureConfig::new(5, 20, 60.0, 0.0).is_err());
        assert!(QuadratureConfig::new(5, 20, 60.0, f64::NAN).is_err());
        assert!(QuadratureConfig::new(2, 1, 1.5, 1e-3).is_ok());
    }

    #[test]
    fn integrates_square() {
        let q = romberg(|x| x * x, 0.0, 1.0, &cfg()).unwrap();
        assert!(q.converged);
        assert!((q.value - 1.0 / 3.0).abs() < 1e-12, "got {}", q.value);
    }

    #[test]
    fn integrates_sine_over_half_period() {
        let q = romberg(f64::sin, 0.0, std::f64::consts::PI, &cfg()).unwrap();
        assert!(q.converged);
        assert!((q.value - 2.0).abs() < 1e-10, "got {}", q.value);
    }

    #[test]
    fn zero_integrand_is_zero() {
        let q = romberg(|_| 0.0, 0.0, 1.0, &cfg()).unwrap();
        assert!(q.converged);
        assert_eq!(q.value, 0.0);
    }

    #[test]
    fn rejects_non_finite_integrand() {
        let err = romberg(|_| f64::NAN, 0.0, 1.0, &cfg()).unwrap_err();
        assert_eq!(err, Error::NonFiniteIntegrand);
        let err = romberg(|x| 1.0 / (x - 0.25), 0.0, 1.0, &cfg()).unwrap_err();
        assert_eq!(err, Error::NonFiniteIntegrand);
    }

    #[test]
    fn rejects_empty_interval() {
        assert!(romberg(|x| x, 1.0, 1.0, &cfg()).is_err());
        assert!(romberg(|x| x, 2.0, 1.0, &cfg()).is_err());
        assert!(romberg(|x| x, f64::NAN, 1.0, &cfg()).is_err());
    }

    // Brute-force trapezoid with a million panels, used as the independent
    // check on the Romberg machinery for the theta-kernel integrand.
    fn trapezoid_oracle<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: u64) -> f64 {
        let h = (b - a) / n as f64;
        let mut sum = 0.5 * (f(a) + f(b));
        let mut comp = 0.0f64;
        for i in 1..n {
            let y = f(a + i as f64 * h);
            let t = sum + y;
            comp += if sum.abs() >= y.abs() { (sum - t) + y } else { (y - t) + sum };
            sum = t;
        }
        (sum + comp) * h
    }

    fn theta_kernel(u: f64) -> f64 {
        u.powf(-0.75) * theta::psi(u).unwrap().value
    }

    // Value independently confirmed by the completed-function relation at
    // s = 1/2: integral = 2 (1 - xi(1/2)) = 0.011516887246743560...
    const THETA_KERNEL_INTEGRAL: f64 = 0.011516887246743560;

    #[test]
    fn theta_kernel_matches_brute_force() {
        let oracle = trapezoid_oracle(theta_kernel, 1.0, 60.0, 1_000_000);
        assert!(
            (oracle - THETA_KERNEL_INTEGRAL).abs() < 1e-9,
            "oracle drifted: {oracle}"
        );
        let q = romberg(theta_kernel, 1.0, 60.0, &cfg()).unwrap();
        assert!(q.converged);
        assert!((q.value - oracle).abs() < 1e-9, "romberg {} vs oracle {}", q.value, oracle);
        assert!((q.value - THETA_KERNEL_INTEGRAL).abs() < 1e-12);
    }

    #[test]
    fn improper_exponential_tail() {
        let pi = std::f64::consts::PI;
        let q = improper_integral(|u| (-pi * u).exp(), DecayBound::exponential(1.0), &cfg())
            .unwrap();
        // exp(-pi)/pi, from the antiderivative.
        assert!((q.value - 0.013755417404096978).abs() < 1e-10, "got {}", q.value);
    }

    #[test]
    fn improper_zero_integrand() {
        let q = improper_integral(|_| 0.0, DecayBound::exponential(0.0), &cfg()).unwrap();
        assert_eq!(q.value, 0.0);
    }

    #[test]
    fn improper_theta_kernel() {
        let q = improper_integral(
            theta_kernel,
            DecayBound { coeff: 1.001, power: -0.75 },
            &cfg(),
        )
        .unwrap();
        assert!((q.value - THETA_KERNEL_INTEGRAL).abs() < 1e-12, "got {}", q.value);
    }

    #[test]
    fn small_cutoff_is_rejected() {
        let small = QuadratureConfig { cutoff: 2.0, ..cfg() };
        let err = improper_integral(
            theta_kernel,
            DecayBound { coeff: 1.001, power: -0.75 },
            &small,
        )
        .unwrap_err();
        assert!(matches!(err, Error::CutoffTooSmall { .. }));
    }

    #[test]
    fn larger_cutoff_moves_less_than_tail_bound() {
        let bound = DecayBound { coeff: 1.001, power: -0.75 };
        let base = QuadratureConfig { cutoff: 30.0, ..cfg() };
        let wide = QuadratureConfig { cutoff: 60.0, ..cfg() };
        let a = improper_integral(theta_kernel, bound, &base).unwrap();
        let b = improper_integral(theta_kernel, bound, &wide).unwrap();
        assert!((a.value - b.value).abs() <= bound.tail_beyond(30.0));
    }

    #[test]
    fn unconverged_is_flagged() {
        // One level can never satisfy the stopping rule's minimum depth.
        let starved = QuadratureConfig { max_iters: 1, ..cfg() };
        let q = romberg(|x| (10.0 * x).sin().exp(), 0.0, 3.0, &starved).unwrap();
        assert!(!q.converged);
    }
}

#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        // With `order` columns the tableau integrates polynomials of degree
        // 2*order - 1 exactly (up to rounding).
        #[test]
        fn polynomial_exactness(
            coeffs in proptest::array::uniform10(-1.0f64..1.0),
            a in 0.0f64..0.4,
            len in 0.2f64..0.6,
        ) {
            let b = a + len;
            let cfg = QuadratureConfig::default();
            let p = |x: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
            let exact: f64 = (0..10)
                .map(|k| coeffs[k] * (b.powi(k as i32 + 1) - a.powi(k as i32 + 1)) / (k as f64 + 1.0))
                .sum();
            let q = romberg(p, a, b, &cfg).unwrap();
            prop_assert!(q.converged);
            prop_assert!((q.value - exact).abs() < 1e-12, "value {} exact {}", q.value, exact);
        }
    }
}
