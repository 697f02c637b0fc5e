//! Independent numerical checks of the closed-form results.
//!
//! The grid diagonalization builds the single-mode Hamiltonian
//!
//! H = −(ħ²ω²/2) d²/dp² + tan²(p√β)/(2β)
//!
//! directly on a uniform momentum grid over the open interval
//! (−π/(2√β), π/(2√β)) with second-order central differences and Dirichlet
//! walls, and never touches the eigenfunction or energy formulas of
//! [`crate::oscillator`] except in [`compare_spectra`].

mod tridiag;

pub use tridiag::SymTridiagonal;

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::oscillator::{energy_level, DeformedMode, EigenState};
use crate::specfun::{integrate, QuadratureRule};

/// Grid size used by acceptance runs.
pub const ACCEPTANCE_GRID_POINTS: usize = 20_001;
/// Grid size for quick checks; pair with a 1e-4 tolerance.
pub const QUICK_GRID_POINTS: usize = 2_001;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    npoints: usize,
    nlevels: usize,
}

impl GridSpec {
    /// `npoints` interior nodes (odd, >= 3) and `nlevels` <= npoints/4 levels.
    pub fn new(npoints: usize, nlevels: usize) -> Result<Self> {
        if npoints < 3 || npoints.is_multiple_of(2) {
            return Err(domain("npoints", npoints as f64, "odd and >= 3"));
        }
        if nlevels == 0 || nlevels > npoints / 4 {
            return Err(domain(
                "nlevels",
                nlevels as f64,
                "1 <= nlevels <= npoints/4",
            ));
        }
        Ok(Self { npoints, nlevels })
    }

    pub fn npoints(&self) -> usize {
        self.npoints
    }

    pub fn nlevels(&self) -> usize {
        self.nlevels
    }
}

/// The discretized Hamiltonian and its interior grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridHamiltonian {
    pub momenta: Vec<f64>,
    pub step: f64,
    pub matrix: SymTridiagonal,
}

pub fn momentum_grid_hamiltonian(mode: &DeformedMode, npoints: usize) -> Result<GridHamiltonian> {
    if !mode.is_deformed() {
        return Err(Error::Undeformed("momentum grid"));
    }
    let (omega, beta, hbar) = (mode.omega(), mode.beta(), mode.hbar());
    let root_beta = beta.sqrt();
    let half_width = PI / (2.0 * root_beta);
    let step = 2.0 * half_width / (npoints as f64 + 1.0);
    let kinetic = hbar * hbar * omega * omega / 2.0;
    let centre = (npoints / 2) as f64;
    let momenta: Vec<f64> = (0..npoints).map(|i| (i as f64 - centre) * step).collect();
    let diag = momenta
        .iter()
        .map(|&p| {
            let t = (p * root_beta).tan();
            2.0 * kinetic / (step * step) + t * t / (2.0 * beta)
        })
        .collect();
    let off = vec![-kinetic / (step * step); npoints - 1];
    Ok(GridHamiltonian {
        momenta,
        step,
        matrix: SymTridiagonal::new(diag, off),
    })
}

/// Lowest `spec.nlevels()` eigenvalues of the grid Hamiltonian, ascending.
pub fn diagonalize_momentum_grid(mode: &DeformedMode, spec: &GridSpec) -> Result<Vec<f64>> {
    momentum_grid_hamiltonian(mode, spec.npoints)?
        .matrix
        .lowest_eigenvalues(spec.nlevels)
}

/// max over n < nlevels of |E_grid − E_closed| / E_closed.
pub fn compare_spectra(mode: &DeformedMode, spec: &GridSpec) -> Result<f64> {
    let grid = diagonalize_momentum_grid(mode, spec)?;
    Ok(grid
        .iter()
        .enumerate()
        .map(|(n, &e)| {
            let closed = energy_level(mode, n as u32);
            (e - closed).abs() / closed
        })
        .fold(0.0, f64::max))
}

/// Richardson combination (4E(h/2) − E(h))/3 of two grids, the finer one
/// having `2·npoints + 1` interior nodes.
pub fn richardson_levels(mode: &DeformedMode, spec: &GridSpec) -> Result<Vec<f64>> {
    let coarse = diagonalize_momentum_grid(mode, spec)?;
    let fine_spec = GridSpec::new(2 * spec.npoints + 1, spec.nlevels)?;
    let fine = diagonalize_momentum_grid(mode, &fine_spec)?;
    Ok(coarse
        .iter()
        .zip(&fine)
        .map(|(c, f)| (4.0 * f - c) / 3.0)
        .collect())
}

fn momentum_rule(
    state: &EigenState,
    rule_order: usize,
) -> Result<(f64, std::sync::Arc<QuadratureRule>)> {
    let bound = state
        .mode
        .momentum_bound()
        .ok_or(Error::Undeformed("momentum-space norm"))?;
    Ok((bound, QuadratureRule::cached(rule_order)?))
}

/// ∫ |ψ_n(p)|² dp over the momentum domain.
pub fn numeric_norm(state: &EigenState, rule_order: usize) -> Result<f64> {
    numeric_overlap(state, state, rule_order)
}

/// ∫ ψ_a(p) ψ_b(p) dp over the momentum domain of `a`.
pub fn numeric_overlap(a: &EigenState, b: &EigenState, rule_order: usize) -> Result<f64> {
    let (bound, rule) = momentum_rule(a, rule_order)?;
    let fa = a.eigenfunction()?;
    let fb = b.eigenfunction()?;
    let root_beta = a.mode.beta().sqrt();
    let fourth = a.mode.beta().powf(0.25);
    let psi = |f: &crate::oscillator::Eigenfunction, p: f64| {
        let pbar = p * root_beta;
        fourth * f.at_angle(pbar) * pbar.cos().max(0.0).sqrt()
    };
    integrate(|p| psi(&fa, p) * psi(&fb, p), -bound, bound, &rule)
}
