//! Zero location on the critical line, plus the trivial zeros and the
//! truncated symmetric-product experiment.
//!
//! On the critical line the completed function is real, so its zeros are
//! roots of the scalar equation
//!
//! ```text
//! g(b) = 2 (1/4 + b^2) integral_1^inf u^(-3/4) psi(u) cos(b ln(u)/2) du - 1
//! ```
//!
//! (g(b) is exactly -xi(1/2 + ib)). The scan evaluates g on a uniform grid,
//! brackets sign changes, and bisects each bracket to the requested width.
//! Everything is a pure function of its inputs, so results are identical for
//! any thread count and any partitioning of the range.

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{improper_integral, DecayBound, QuadratureConfig};
use crate::{xi, zeta_em};

/// Largest ordinate the quadrature is validated for.
pub const MAX_ORDINATE: f64 = 200.0;

/// Grid and refinement settings for [`scan_zeros`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    pub b_min: f64,
    pub b_max: f64,
    /// Grid spacing; capped at 0.5, half the smallest zero gap below 40.
    pub step: f64,
    /// Bisection stops once the bracket is narrower than this.
    pub refine_tol: f64,
}

impl ScanConfig {
    pub fn new(b_min: f64, b_max: f64, step: f64, refine_tol: f64) -> Result<Self> {
        if !b_min.is_finite() || !b_max.is_finite() || !step.is_finite() || !refine_tol.is_finite()
        {
            return Err(Error::InvalidConfig("scan settings must be finite".into()));
        }
        if b_min < 0.0 {
            return Err(Error::InvalidConfig("scan start must be nonnegative".into()));
        }
        if b_min >= b_max {
            return Err(Error::InvalidConfig("scan range is empty".into()));
        }
        if b_max > MAX_ORDINATE {
            return Err(Error::OrdinateRange);
        }
        if !(step > 0.0) || step > 0.5 {
            return Err(Error::InvalidConfig("step must lie in (0, 0.5]".into()));
        }
        if !(refine_tol > 0.0) {
            return Err(Error::InvalidConfig("refinement tolerance must be positive".into()));
        }
        Ok(ScanConfig { b_min, b_max, step, refine_tol })
    }
}

/// The window holding the first five zeros, oversampled tenfold.
impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig { b_min: 10.0, b_max: 35.0, step: 0.25, refine_tol: 1e-7 }
    }
}

/// A located critical-line zero with its cross-checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Zero {
    /// Real part; 1/2 by construction of the scan.
    pub re: f64,
    /// Ordinate of the zero.
    pub b: f64,
    /// `|xi(1/2 + ib)|` at the located ordinate.
    pub residual_integral: f64,
    /// `|zeta(1/2 + ib)|` by the Euler-Maclaurin route, which shares no
    /// code with the integral that located the zero.
    pub residual_em: f64,
    /// Final bisection bracket.
    pub bracket: (f64, f64),
}

/// Residual pair reported by [`verify_zero`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroResiduals {
    pub residual_integral: f64,
    pub residual_em: f64,
}

/// One trivial zero with its two evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrivialZeroCheck {
    /// The abscissa -2(k+1).
    pub s: f64,
    /// `|zeta(s)|` by Euler-Maclaurin.
    pub residual_em: f64,
    /// zeta(s) through the completed function; exactly zero by the
    /// reciprocal-gamma factor.
    pub integral_value: Complex64,
}

/// Left side minus one of the critical-line equation:
/// `2 (1/4 + b^2) integral_1^inf u^(-3/4) psi(u) cos(b ln(u)/2) du - 1`.
pub fn critical_line_equation(b: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if !b.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    if b.abs() > MAX_ORDINATE {
        return Err(Error::OrdinateRange);
    }
    let q = improper_integral(
        |u| xi::theta_kernel(u) * (b * (u.ln() * 0.5)).cos(),
        DecayBound { coeff: 1.001, power: -0.75 },
        cfg,
    )?;
    if !q.converged {
        return Err(Error::Unconverged { err_est: q.err_est });
    }
    Ok(2.0 * (0.25 + b * b) * q.value - 1.0)
}

/// Both residuals at 1/2 + ib: the completed function (integral route) and
/// the Euler-Maclaurin continuation, reported raw.
pub fn verify_zero(b: f64, cfg: &QuadratureConfig) -> Result<ZeroResiduals> {
    if !b.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    if b.abs() > MAX_ORDINATE {
        return Err(Error::OrdinateRange);
    }
    let s = Complex64::new(0.5, b);
    let integral = xi::completed_zeta(s, cfg)?.norm();
    let em = zeta_em::euler_maclaurin_auto(s)?.value.norm();
    Ok(ZeroResiduals { residual_integral: integral, residual_em: em })
}

fn grid_point(scan: &ScanConfig, last: usize, k: usize) -> f64 {
    if k == last {
        scan.b_max
    } else {
        scan.b_min + k as f64 * scan.step
    }
}

/// Scans `[b_min, b_max]` for sign changes of the critical-line equation and
/// bisects each bracket down to `refine_tol`. Grid points are split into
/// contiguous chunks across `threads` worker threads (at least one); the
/// merge is by grid index, so the result is a pure function of the configs.
pub fn scan_zeros(
    scan: &ScanConfig,
    cfg: &QuadratureConfig,
    threads: usize,
) -> Result<Vec<Zero>> {
    let last = ((scan.b_max - scan.b_min) / scan.step).ceil() as usize;
    let n_points = last + 1;
    let threads = threads.max(1).min(n_points);

    let mut g = Vec::with_capacity(n_points);
    let chunk = n_points.div_ceil(threads);
    std::thread::scope(|sc| -> Result<()> {
        let mut handles = Vec::new();
        for t in 0..threads {
            let lo = t * chunk;
            let hi = (lo + chunk).min(n_points);
            if lo >= hi {
                break;
            }
            handles.push(sc.spawn(move || -> Result<Vec<f64>> {
                (lo..hi)
                    .map(|k| critical_line_equation(grid_point(scan, last, k), cfg))
                    .collect()
            }));
        }
        for h in handles {
            let part = h.join().expect("grid worker panicked")?;
            g.extend(part);
        }
        Ok(())
    })?;

    let mut zeros = Vec::new();
    for i in 0..n_points - 1 {
        if (g[i] < 0.0) == (g[i + 1] < 0.0) {
            continue;
        }
        let mut lo = grid_point(scan, last, i);
        let mut hi = grid_point(scan, last, i + 1);
        let mut g_lo = g[i];
        while hi - lo > scan.refine_tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let gm = critical_line_equation(mid, cfg)?;
            if (g_lo < 0.0) == (gm < 0.0) {
                lo = mid;
                g_lo = gm;
            } else {
                hi = mid;
            }
        }
        let b = 0.5 * (lo + hi);
        let residuals = verify_zero(b, cfg)?;
        zeros.push(Zero {
            re: 0.5,
            b,
            residual_integral: residuals.residual_integral,
            residual_em: residuals.residual_em,
            bracket: (lo, hi),
        });
    }
    Ok(zeros)
}

/// The trivial zeros -2, -4, ..., -2(k_max+1).
pub fn trivial_zeros(k_max: usize) -> Vec<f64> {
    (0..=k_max).map(|k| -2.0 * (k as f64 + 1.0)).collect()
}

/// Evaluates both continuation routes at each trivial zero.
pub fn trivial_zero_residuals(
    k_max: usize,
    cfg: &QuadratureConfig,
) -> Result<Vec<TrivialZeroCheck>> {
    trivial_zeros(k_max)
        .into_iter()
        .map(|s| {
            let z = Complex64::new(s, 0.0);
            Ok(TrivialZeroCheck {
                s,
                residual_em: zeta_em::euler_maclaurin_auto(z)?.value.norm(),
                integral_value: xi::zeta_from_integral(z, cfg)?,
            })
        })
        .collect()
}

/// One factor of the symmetrized zero product, `1 - z(1-z)/|zk|^2`.
/// Invariant under z -> 1-z because it depends on z only through z(1-z).
pub fn weierstrass_factor(z: Complex64, zk: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() || !zk.re.is_finite() || !zk.im.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    let n = zk.norm_sqr();
    if n == 0.0 {
        return Err(Error::ZeroDivisor);
    }
    let one = Complex64::new(1.0, 0.0);
    Ok(one - z * (one - z) / n)
}

/// Product of the first `k` factors over the supplied zeros,
/// `prod_{j<k} (1 - z(1-z)/|1/2 + i b_j|^2)`.
pub fn truncated_product(z: Complex64, zeros: &[Zero], k: usize) -> Result<Complex64> {
    if k > zeros.len() {
        return Err(Error::InvalidConfig(format!(
            "product truncation {k} exceeds the {} available zeros",
            zeros.len()
        )));
    }
    let mut prod = Complex64::new(1.0, 0.0);
    for zero in &zeros[..k] {
        prod *= weierstrass_factor(z, Complex64::new(zero.re, zero.b))?;
    }
    Ok(prod)
}

/// Symmetric-perturbation defect: with y = zk + eps e^(i delta) and
/// y' = conj(zk) + eps e^(-i delta), returns |y + y' - 1|, which is
/// 2 eps |cos delta| in exact arithmetic.
pub fn perturbation_residual(zk: Complex64, eps: f64, delta: f64) -> Result<f64> {
    if !zk.re.is_finite() || !zk.im.is_finite() || !eps.is_finite() || !delta.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    if zk.re != 0.5 {
        return Err(Error::NotCriticalBase);
    }
    if !(0.0..0.5).contains(&eps) {
        return Err(Error::PerturbationRange);
    }
    let y = zk + Complex64::from_polar(eps, delta);
    let y_bar = zk.conj() + Complex64::from_polar(eps, -delta);
    Ok((y + y_bar - Complex64::new(1.0, 0.0)).norm())
}
