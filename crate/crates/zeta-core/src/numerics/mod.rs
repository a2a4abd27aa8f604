//! Shared numerical machinery: quadrature and the complex gamma function.

mod gamma;
mod quadrature;

pub use gamma::{gamma, log_gamma, recip_gamma, sin_pi, FACTORIALS};
pub use quadrature::{improper_integral, romberg, DecayBound, Quadrature, QuadratureConfig};
