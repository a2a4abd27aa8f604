//! Numerical study of the Riemann zeta function in f64.
//!
//! Two independent routes to the analytic continuation are provided and kept
//! deliberately separate so they can check each other:
//!
//! * [`zeta_em`]: Euler-Maclaurin summation of the Dirichlet series, valid on
//!   a wide strip of the complex plane;
//! * [`xi`]: the completed function built from the Jacobi theta kernel as a
//!   convergent real integral, entire in s and symmetric under s -> 1 - s.
//!
//! [`zeros`] locates nontrivial zeros on the critical line by scanning the
//! completed function, and [`numerics`], [`bernoulli`], and [`theta`] supply
//! the supporting machinery.

pub mod bernoulli;
mod error;
pub mod numerics;
pub mod theta;
pub mod xi;
pub mod zeros;
pub mod zeta_em;

pub use error::{Error, Result};
pub use num::complex::Complex64;
pub use numerics::{Quadrature, QuadratureConfig};
pub use zeros::{ScanConfig, Zero};
