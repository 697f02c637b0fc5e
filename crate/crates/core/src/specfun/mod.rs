//! Special functions and quadrature primitives.
//!
//! Everything here is a pure function of its arguments. Quadrature rules are
//! immutable once built and are cached process-wide behind an `Arc`.

pub(crate) mod gamma;
mod gegenbauer;
mod quadrature;

pub use gamma::{gamma_ratio, ln_gamma_ratio, ln_pochhammer, log_gamma};
pub use gegenbauer::{gegenbauer, gegenbauer_derivative};
pub use quadrature::{
    integrate, integrate_adaptive, AdaptiveQuadrature, Estimate, QuadratureRule,
    DEFAULT_QUADRATURE_ORDER,
};
