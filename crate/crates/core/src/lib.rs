//! Spontaneous emission from a field whose mode oscillators obey the
//! minimal-length commutator [Q̂, P̂] = iħ(1 + βP̂²).
//!
//! * [`specfun`]: log-gamma, gamma ratios, Gegenbauer polynomials, Gauss–Legendre quadrature.
//! * [`oscillator`]: one deformed mode, its spectrum and eigenfunctions.
//! * [`melem`]: matrix elements of q̂ and tan(p̄) between mode eigenstates.
//! * [`radiation`]: photon dispersion, the intensity kernel g(ω̄) and intensity ratios.
//! * [`oracle`]: finite-difference diagonalization used to cross-check the closed forms.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod melem;
pub mod oracle;
pub mod oscillator;
pub mod radiation;
pub mod specfun;

pub use error::{Error, Result};
pub use oscillator::{AlphaParam, DeformedMode, EigenState};
