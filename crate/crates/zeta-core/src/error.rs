use std::error;
use std::fmt;

/// Errors reported by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input (argument or configuration value) was NaN or infinite.
    NonFiniteInput,
    /// The integrand produced a NaN or infinite value inside the quadrature.
    NonFiniteIntegrand,
    /// A configuration value violated its documented range.
    InvalidConfig(String),
    /// The tail beyond the integration cutoff exceeds the requested tolerance.
    CutoffTooSmall { bound: f64, tol: f64 },
    /// The quadrature did not settle within the iteration budget.
    Unconverged { err_est: f64 },
    /// Gamma evaluated at a non-positive integer.
    GammaPole,
    /// The completion factor has a pole (s in {-2, -4, ...}).
    CompletionPole,
    /// The zeta continuation has its pole at s = 1.
    PoleAtOne,
    /// The Dirichlet series only converges for Re(s) > 1.
    SeriesDiverges,
    /// The remainder integral requires Re(s) > 1 - 2M.
    RemainderDomain { min_re: f64 },
    /// The theta sum requires u > 0.
    ThetaDomain,
    /// The integrand decomposition is defined for u >= 1.
    IntegrandDomain,
    /// The ordinate is outside the validated range |b| <= 200.
    OrdinateRange,
    /// The perturbation base must lie on the critical line (Re = 1/2).
    NotCriticalBase,
    /// The perturbation radius must satisfy 0 <= eps < 1/2.
    PerturbationRange,
    /// A factor base point of zero norm was supplied.
    ZeroDivisor,
    /// A Bernoulli index beyond the table size was requested.
    TableRange { n: usize, max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFiniteInput => write!(f, "non-finite input"),
            Error::NonFiniteIntegrand => write!(f, "non-finite integrand"),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Error::CutoffTooSmall { bound, tol } => {
                write!(f, "cutoff too small: tail bound {bound:e} exceeds tolerance {tol:e}")
            }
            Error::Unconverged { err_est } => {
                write!(f, "quadrature did not converge (err_est {err_est:e})")
            }
            Error::GammaPole => write!(f, "gamma pole at non-positive integer"),
            Error::CompletionPole => write!(f, "completion factor pole"),
            Error::PoleAtOne => write!(f, "pole at s = 1"),
            Error::SeriesDiverges => write!(f, "Dirichlet series diverges for Re(s) <= 1"),
            Error::RemainderDomain { min_re } => {
                write!(f, "remainder integral requires Re(s) > {min_re}")
            }
            Error::ThetaDomain => write!(f, "theta sum requires u > 0"),
            Error::IntegrandDomain => write!(f, "integrand decomposition requires u >= 1"),
            Error::OrdinateRange => write!(f, "ordinate outside validated range |b| <= 200"),
            Error::NotCriticalBase => write!(f, "base zero must lie on the critical line"),
            Error::PerturbationRange => write!(f, "perturbation radius must satisfy 0 <= eps < 1/2"),
            Error::ZeroDivisor => write!(f, "factor base point has zero norm"),
            Error::TableRange { n, max } => {
                write!(f, "Bernoulli index {n} beyond table size {max}")
            }
        }
    }
}

impl error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
