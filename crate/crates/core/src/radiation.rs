//! Photon dispersion and spontaneous-emission intensity of the deformed field.
//!
//! All intensities are reported relative to the undeformed field with the
//! same atomic amplitudes, so the charge, mass, speed of light and the
//! quantization volume drop out. [`absolute_intensity`] restores the
//! e²ω²/(2πm²c³) prefactor when absolute numbers are wanted.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::melem::q10_closed;
use crate::oscillator::{alpha_of_mode, DeformedMode};
use crate::specfun::gamma::ln_gamma_ratio_unchecked;

/// Sign in front of the βħω_k term of the one-photon frequency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DispersionSign {
    /// Ω_k = (E₁ − E₀)/ħ = ω_k[√(1+s²) + 2s], s = βħω_k/2.
    #[default]
    EnergyConsistent,
    /// Ω_k = ω_k[√(1+s²) − 2s]; turns negative for s > 1/√3.
    AsPrinted,
}

impl DispersionSign {
    fn factor(self) -> f64 {
        match self {
            DispersionSign::EnergyConsistent => 1.0,
            DispersionSign::AsPrinted => -1.0,
        }
    }
}

pub fn photon_frequency(omega_k: f64, beta: f64, hbar: f64, sign: DispersionSign) -> f64 {
    let s = 0.5 * beta * hbar * omega_k;
    omega_k * (s.hypot(1.0) + sign.factor() * 2.0 * s)
}

/// dΩ_k/dω_k = √(1+s²) + s²/√(1+s²) ± 4s.
pub fn photon_frequency_slope(omega_k: f64, beta: f64, hbar: f64, sign: DispersionSign) -> f64 {
    let s = 0.5 * beta * hbar * omega_k;
    let root = s.hypot(1.0);
    root + s * s / root + sign.factor() * 4.0 * s
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionPoint {
    pub omega_k: f64,
    /// βħω_k/2.
    pub wbar_k: f64,
    pub photon_frequency: f64,
}

pub fn dispersion_point(
    omega_k: f64,
    beta: f64,
    hbar: f64,
    sign: DispersionSign,
) -> DispersionPoint {
    DispersionPoint {
        omega_k,
        wbar_k: 0.5 * beta * hbar * omega_k,
        photon_frequency: photon_frequency(omega_k, beta, hbar, sign),
    }
}

/// ᾱ(ω̄): the eigenfunction exponent of the mode resonant with an atomic
/// transition of dimensionless deformation ω̄.
///
/// The direct form 3ω̄/(1+4ω̄−√(1+8ω̄+4ω̄²)) − ½ is rationalized to
/// (1 + 2ω̄ + √(1+8ω̄+4ω̄²))/(4ω̄), which has no cancellation for any ω̄ > 0.
/// Returns +∞ at ω̄ = 0.
pub fn alpha_bar(wbar: f64) -> f64 {
    if wbar == 0.0 {
        return f64::INFINITY;
    }
    let root = (1.0 + wbar * (8.0 + 4.0 * wbar)).sqrt();
    (1.0 + 2.0 * wbar + root) / (4.0 * wbar)
}

/// ᾱ(ω̄) evaluated literally in its unrationalized form; loses all digits
/// as ω̄ → 0. Kept for cross-checks.
pub fn alpha_bar_unrationalized(wbar: f64) -> f64 {
    3.0 * wbar / (1.0 + 4.0 * wbar - (1.0 + 8.0 * wbar + 4.0 * wbar * wbar).sqrt()) - 0.5
}

/// g(ω̄), the deformed-to-undeformed ratio of the spontaneous dipole intensity.
///
/// g(ω̄) = 8(ᾱ+1)(2ᾱ−1)√ω̄ / ([2ᾱ+1+2ω̄(4ᾱ−1)](2ᾱ+1)^{5/2}) · [Γ(ᾱ+1)/Γ(ᾱ+½)]⁴,
/// with g(0) = 1 by continuity.
pub fn g_factor(wbar: f64) -> f64 {
    if wbar == 0.0 {
        return 1.0;
    }
    let a = alpha_bar(wbar);
    let ln_r4 = 4.0 * ln_gamma_ratio_unchecked(a);
    // (2ᾱ+1)^{5/2} and R⁴ both grow like powers of 1/ω̄; combine in log space.
    let ln_rest = ln_r4 - 2.5 * (2.0 * a + 1.0).ln() + 0.5 * wbar.ln();
    let rational =
        8.0 * (a + 1.0) * (2.0 * a - 1.0) / (2.0 * a + 1.0 + 2.0 * wbar * (4.0 * a - 1.0));
    rational * ln_rest.exp()
}

/// Large-ω̄ form of g: 128/(27π²) · 1/√(3ω̄). Infinite at ω̄ = 0.
pub fn g_asymptote(wbar: f64) -> f64 {
    128.0 / (27.0 * PI * PI) / (3.0 * wbar).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GCurvePoint {
    pub wbar: f64,
    pub g: f64,
    pub g_asymptote: f64,
}

impl GCurvePoint {
    pub fn at(wbar: f64) -> Self {
        Self {
            wbar,
            g: g_factor(wbar),
            g_asymptote: g_asymptote(wbar),
        }
    }
}

pub fn g_curve(grid: &[f64]) -> Vec<GCurvePoint> {
    grid.iter().copied().map(GCurvePoint::at).collect()
}

/// The dipole ratio plotted against ω̄; identical to g.
pub fn dipole_intensity_ratio(wbar: f64) -> f64 {
    g_factor(wbar)
}

/// Ingredients of the on-shell intensity for one atomic frequency, built from
/// the dispersion and the ⟨1|q̂|0⟩ closed form rather than from ᾱ(ω̄).
///
/// Units: ħ = 1 and atomic frequency ω = 1, so β = 2ω̄.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonantEmission {
    pub wbar: f64,
    /// Mode frequency with Ω_k = ω.
    pub omega_k: f64,
    /// α of the resonant mode.
    pub alpha: f64,
    /// |⟨1|q̂|0⟩|²/ħ² at the resonant mode.
    pub matrix_factor: f64,
    /// dΩ_k/dω_k at the resonant mode.
    pub slope: f64,
    /// Coefficient of p12s relative to p12c, 1/(βαħω_k).
    pub sin_coefficient: f64,
}

impl ResonantEmission {
    /// Solves Ω_k(ω_k) = ω by bisection on the monotone energy-consistent dispersion.
    pub fn solve(wbar: f64) -> Result<Self> {
        if !(wbar > 0.0 && wbar.is_finite()) {
            return Err(domain("wbar", wbar, "finite wbar > 0"));
        }
        let (omega, hbar) = (1.0, 1.0);
        let beta = 2.0 * wbar / (hbar * omega);
        let sign = DispersionSign::EnergyConsistent;
        // Ω_k >= ω_k, so the root lies in (0, ω].
        let (mut lo, mut hi) = (0.0_f64, omega);
        let mut converged = false;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if photon_frequency(mid, beta, hbar, sign) < omega {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= 1e-14 * hi {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::RootFind { target: omega });
        }
        let omega_k = 0.5 * (lo + hi);
        let mode = DeformedMode::new(omega_k, beta, hbar)?;
        let alpha = alpha_of_mode(&mode)?.value();
        let q = q10_closed(&mode)?;
        Ok(Self {
            wbar,
            omega_k,
            alpha,
            matrix_factor: q.norm_sqr() / (hbar * hbar),
            slope: photon_frequency_slope(omega_k, beta, hbar, sign),
            sin_coefficient: 1.0 / (beta * alpha * hbar * omega_k),
        })
    }

    /// Undeformed value of matrix_factor · ω_k² Ω_k dω_k/dΩ_k: (1/2ħω)·ω³.
    fn undeformed(&self) -> f64 {
        0.5
    }

    /// matrix_factor · ω_k² Ω_k · dω_k/dΩ_k, normalized to its undeformed value.
    pub fn g(&self) -> f64 {
        self.matrix_factor * self.omega_k * self.omega_k / self.slope / self.undeformed()
    }

    /// The same product with the dω_k/dΩ_k Jacobian left out.
    pub fn g_without_jacobian(&self) -> f64 {
        self.matrix_factor * self.omega_k * self.omega_k / self.undeformed()
    }
}

/// g(ω̄) reconstructed from the dispersion relation, the ⟨1|q̂|0⟩ closed form
/// and the on-shell Jacobian. Independent of [`alpha_bar`] and [`g_factor`].
pub fn g_first_principles(wbar: f64) -> Result<f64> {
    if wbar == 0.0 {
        return Ok(1.0);
    }
    ResonantEmission::solve(wbar).map(|r| r.g())
}

/// Atomic transition amplitudes of cos(kr)(e·p̂) and sin(kr)(e·p̂).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionAmplitudes {
    pub p12c: Complex64,
    pub p12s: Complex64,
}

impl TransitionAmplitudes {
    pub fn new(p12c: Complex64, p12s: Complex64) -> Self {
        Self { p12c, p12s }
    }

    /// Dipole approximation: p12s = 0.
    pub fn dipole(p12c: Complex64) -> Self {
        Self {
            p12c,
            p12s: Complex64::new(0.0, 0.0),
        }
    }

    /// |p12c + i p12s|², the undeformed combination ⟨1|e^{ikr}(e·p̂)|2⟩.
    pub fn undeformed_strength(&self) -> f64 {
        (self.p12c + Complex64::i() * self.p12s).norm_sqr()
    }

    /// |p12c − i p12s · c(ω̄)|² with c the sin-term coefficient.
    pub fn deformed_strength(&self, wbar: f64) -> f64 {
        (self.p12c - Complex64::i() * self.p12s * sin_term_coefficient(wbar)).norm_sqr()
    }
}

/// (1/ᾱ)√((2ᾱ+1)/(4ω̄)), the weight of p12s in the deformed intensity.
/// Tends to 1 as ω̄ → 0 and to √(3/(4ω̄)) as ω̄ → ∞.
pub fn sin_term_coefficient(wbar: f64) -> f64 {
    if wbar == 0.0 {
        return 1.0;
    }
    let a = alpha_bar(wbar);
    ((2.0 * a + 1.0) / (4.0 * wbar)).sqrt() / a
}

/// Deformed intensity divided by the undeformed intensity with the same amplitudes.
pub fn intensity_ratio(wbar: f64, amps: &TransitionAmplitudes) -> Result<f64> {
    if !(wbar >= 0.0) {
        return Err(domain("wbar", wbar, "wbar >= 0"));
    }
    let reference = amps.undeformed_strength();
    if reference == 0.0 {
        return Err(Error::ZeroAmplitude);
    }
    Ok(g_factor(wbar) * amps.deformed_strength(wbar) / reference)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub e: f64,
    pub m: f64,
    pub c: f64,
}

/// Absolute per-polarization intensity e²ω²/(2πm²c³) · g · |p12c − i p12s c(ω̄)|².
pub fn absolute_intensity(
    omega: f64,
    wbar: f64,
    amps: &TransitionAmplitudes,
    k: &PhysicalConstants,
) -> Result<f64> {
    if !(k.m > 0.0 && k.c > 0.0) {
        return Err(domain(
            "m, c",
            k.m.min(k.c),
            "positive mass and speed of light",
        ));
    }
    if !(wbar >= 0.0) {
        return Err(domain("wbar", wbar, "wbar >= 0"));
    }
    let pref = k.e * k.e * omega * omega / (2.0 * PI * k.m * k.m * k.c.powi(3));
    Ok(pref * g_factor(wbar) * amps.deformed_strength(wbar))
}

/// Large-deformation dipole prefactor, derived two ways:
/// (2/3)^{7/2}(4/π)², and 128/(27π²) · √(2/3) from the g asymptote with ω̄ = βħω/2.
/// Both equal 2^{15/2}/(3^{7/2}π²).
pub fn large_beta_prefactor_check() -> (f64, f64) {
    let from_dipole = (2.0_f64 / 3.0).powf(3.5) * (4.0 / PI).powi(2);
    let from_asymptote = 128.0 / (27.0 * PI * PI) * (2.0_f64 / 3.0).sqrt();
    (from_dipole, from_asymptote)
}
