use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} is outside its domain ({expected})")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("{0} is undefined for an undeformed mode (beta = 0)")]
    Undeformed(&'static str),

    #[error("integration interval [{a}, {b}] is empty or reversed")]
    EmptyInterval { a: f64, b: f64 },

    #[error("integrand is not finite at x = {at}")]
    NonFinite { at: f64 },

    #[error(
        "quadrature did not converge: successive estimates differ by {difference:e} \
         (tolerance {tolerance:e}) at order {order}"
    )]
    NoConvergence {
        difference: f64,
        tolerance: f64,
        order: usize,
    },

    #[error("tridiagonal eigensolver failed at level {level}")]
    Eigensolver { level: usize },

    #[error("dispersion inversion did not converge for target frequency {target}")]
    RootFind { target: f64 },

    #[error("undeformed amplitude combination |p12c + i p12s| vanishes")]
    ZeroAmplitude,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Error {
    Error::Domain {
        name,
        value,
        expected,
    }
}
