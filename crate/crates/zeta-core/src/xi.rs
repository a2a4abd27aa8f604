//! The completed zeta function as a convergent theta-kernel integral.
//!
//! The completed function is
//!
//! ```text
//! xi(s) = 2 integral_1^inf s(s-1) u^(-3/4) psi(u) cosh((s - 1/2) ln(u)/2) du + 1
//! ```
//!
//! entire in s and manifestly symmetric under s -> 1 - s, since the kernel
//! depends on s only through s(s-1) and (s - 1/2)^2 and both are invariant.
//! Dividing out the meromorphic completion factor
//! `phi(s) = 2 pi^(-s/2) gamma(s/2 + 1)(s - 1)` recovers the zeta
//! continuation, giving a second route that shares no code with the
//! Euler-Maclaurin evaluation.

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{gamma, improper_integral, recip_gamma, DecayBound, QuadratureConfig};
use crate::theta;

fn check_finite(s: Complex64) -> Result<()> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    Ok(())
}

fn cpow_pi(e: Complex64) -> Complex64 {
    let pi = std::f64::consts::PI;
    if e.im == 0.0 {
        Complex64::new(pi.powf(e.re), 0.0)
    } else {
        (e * pi.ln()).exp()
    }
}

/// The meromorphic completion factor `2 pi^(-s/2) gamma(s/2 + 1)(s - 1)`.
/// Poles of the gamma factor sit exactly on the trivial-zero abscissas
/// s = -2, -4, ...
pub fn completion_factor(s: Complex64) -> Result<Complex64> {
    check_finite(s)?;
    let g = gamma(s / 2.0 + Complex64::new(1.0, 0.0)).map_err(|e| match e {
        Error::GammaPole => Error::CompletionPole,
        other => other,
    })?;
    Ok(2.0 * cpow_pi(-s / 2.0) * g * (s - Complex64::new(1.0, 0.0)))
}

pub(crate) fn theta_kernel(u: f64) -> f64 {
    u.powf(-0.75) * theta::psi(u).expect("integration range is positive").value
}

/// The completed function by direct quadrature of the theta-kernel integral.
///
/// The complex integrand is split into two real integrals through
/// `cosh(x + iy) = cosh x cos y + i sinh x sin y`. When s(s-1) = 0, i.e.
/// s = 0 or s = 1, the integral vanishes identically and the value is
/// exactly 1 with no quadrature at all.
pub fn completed_zeta(s: Complex64, cfg: &QuadratureConfig) -> Result<Complex64> {
    completed_zeta_with_error(s, cfg).map(|(value, _)| value)
}

/// Same as [`completed_zeta`], also reporting the summed quadrature error
/// estimate (truncation tail included) of the real and imaginary parts.
pub fn completed_zeta_with_error(
    s: Complex64,
    cfg: &QuadratureConfig,
) -> Result<(Complex64, f64)> {
    check_finite(s)?;
    let c = s * (s - Complex64::new(1.0, 0.0));
    if c.re == 0.0 && c.im == 0.0 {
        return Ok((Complex64::new(1.0, 0.0), 0.0));
    }
    let (cr, ci) = (c.re, c.im);
    let x = s.re - 0.5;
    let y = s.im;
    // |integrand| <= (|cr| + |ci|) u^(|x|/2 - 3/4) psi(u), and
    // psi(u) <= 1.001 exp(-pi u) on [1, inf).
    let bound = DecayBound {
        coeff: 1.001 * (cr.abs() + ci.abs()),
        power: x.abs() / 2.0 - 0.75,
    };

    let re_part = improper_integral(
        |u| {
            let l = u.ln() * 0.5;
            theta_kernel(u)
                * (cr * (x * l).cosh() * (y * l).cos() - ci * (x * l).sinh() * (y * l).sin())
        },
        bound,
        cfg,
    )?;
    if !re_part.converged {
        return Err(Error::Unconverged { err_est: re_part.err_est });
    }

    // The imaginary integrand vanishes identically on the real axis and on
    // the critical line (where s(s-1) is real and x = 0).
    let (im_value, im_err) = if ci == 0.0 && (x == 0.0 || y == 0.0) {
        (0.0, 0.0)
    } else {
        let im_part = improper_integral(
            |u| {
                let l = u.ln() * 0.5;
                theta_kernel(u)
                    * (ci * (x * l).cosh() * (y * l).cos() + cr * (x * l).sinh() * (y * l).sin())
            },
            bound,
            cfg,
        )?;
        if !im_part.converged {
            return Err(Error::Unconverged { err_est: im_part.err_est });
        }
        (im_part.value, im_part.err_est)
    };

    Ok((
        Complex64::new(2.0 * re_part.value + 1.0, 2.0 * im_value),
        2.0 * (re_part.err_est + im_err),
    ))
}

/// The zeta continuation recovered from the completed function,
/// `xi(s) pi^(s/2) / (2 gamma(s/2 + 1) (s - 1))`.
///
/// The gamma division goes through the entire reciprocal, so the trivial
/// zeros s = -2, -4, ... come out as exact complex zero rather than 0/inf.
pub fn zeta_from_integral(s: Complex64, cfg: &QuadratureConfig) -> Result<Complex64> {
    zeta_from_integral_with_error(s, cfg).map(|(value, _)| value)
}

/// Same as [`zeta_from_integral`], also reporting the quadrature error
/// estimate propagated through the completion-factor division.
pub fn zeta_from_integral_with_error(
    s: Complex64,
    cfg: &QuadratureConfig,
) -> Result<(Complex64, f64)> {
    check_finite(s)?;
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::PoleAtOne);
    }
    let (xi, xi_err) = completed_zeta_with_error(s, cfg)?;
    let rg = recip_gamma(s / 2.0 + Complex64::new(1.0, 0.0))?;
    let factor = cpow_pi(s / 2.0) * rg / (2.0 * (s - Complex64::new(1.0, 0.0)));
    Ok((xi * factor, xi_err * factor.norm()))
}

/// `|xi(s) - xi(1-s)|`, both sides evaluated by their own quadrature.
pub fn functional_residual(s: Complex64, cfg: &QuadratureConfig) -> Result<f64> {
    let lhs = completed_zeta(s, cfg)?;
    let rhs = completed_zeta(Complex64::new(1.0, 0.0) - s, cfg)?;
    Ok((lhs - rhs).norm())
}

/// The four amplitude coefficients of the integrand of the completed
/// function at s = a + ib, evaluated at abscissa u, written against the
/// phase `b ln(u)/2`:
///
/// ```text
/// Re = re_cos * cos(phase) + re_sin * sin(phase)
/// Im = im_cos * cos(phase) + im_sin * sin(phase)
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrandDecomposition {
    /// `(a(a-1) - b^2) cosh((a - 1/2) ln(u)/2)`
    pub re_cos: f64,
    /// `-b(2a-1) sinh((a - 1/2) ln(u)/2)`
    pub re_sin: f64,
    /// `b(2a-1) cosh((a - 1/2) ln(u)/2)`
    pub im_cos: f64,
    /// `(a(a-1) - b^2) sinh((a - 1/2) ln(u)/2)`
    pub im_sin: f64,
    /// `b ln(u)/2`
    pub phase: f64,
}

impl IntegrandDecomposition {
    /// Real part of `z(z-1) cosh((z - 1/2) ln(u)/2)` at z = a + ib.
    pub fn real_part(&self) -> f64 {
        self.re_cos * self.phase.cos() + self.re_sin * self.phase.sin()
    }

    /// Imaginary part of the same product. Identically zero at a = 1/2,
    /// where both coefficients vanish exactly.
    pub fn imag_part(&self) -> f64 {
        self.im_cos * self.phase.cos() + self.im_sin * self.phase.sin()
    }

    /// The amplitude-phase form of [`Self::real_part`],
    /// `sqrt(re_cos^2 + re_sin^2) sin(phase + (pi/2) sign(re_cos) - arctan(re_sin/re_cos))`,
    /// defined only when `re_cos != 0`.
    pub fn phase_form_real(&self) -> Option<f64> {
        if self.re_cos == 0.0 {
            return None;
        }
        let amp = self.re_cos.hypot(self.re_sin);
        let shift = std::f64::consts::FRAC_PI_2 * self.re_cos.signum()
            - (self.re_sin / self.re_cos).atan();
        Some(amp * (self.phase + shift).sin())
    }
}

/// Splits the completed-function integrand at s = a + ib, abscissa u >= 1,
/// into its four amplitude coefficients and common phase.
pub fn decompose(a: f64, b: f64, u: f64) -> Result<IntegrandDecomposition> {
    if !a.is_finite() || !b.is_finite() || !u.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    if u < 1.0 {
        return Err(Error::IntegrandDomain);
    }
    let l = u.ln() * 0.5;
    let x = a - 0.5;
    let cr = a * (a - 1.0) - b * b;
    let ci = b * (2.0 * a - 1.0);
    let ch = (x * l).cosh();
    let sh = (x * l).sinh();
    Ok(IntegrandDecomposition {
        re_cos: cr * ch,
        re_sin: -ci * sh,
        im_cos: ci * ch,
        im_sin: cr * sh,
        phase: b * l,
    })
}
