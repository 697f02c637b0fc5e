//! A single deformed field mode.
//!
//! The mode Hamiltonian ω²q̂²/2 + tan²(p̂√β)/(2β) is solved exactly in the
//! momentum representation. Eigenfunctions are evaluated through the
//! Gegenbauer form in the variable x = sin(p√β):
//!
//! ψ̄_n(x) = N_n (1 − x²)^{α/2 − 1/4} C_n^α(x),
//!
//! orthonormal with the flat measure dx on [−1, 1]. The momentum-space
//! function is ψ_n(p) = β^{1/4} ψ̄_n(sin p̄) √(cos p̄), p̄ = p√β, normalized
//! with dp.
//!
//! The normalization N_n is assembled in log space. Using the duplication
//! formula for Γ(2α) it reduces to
//!
//! N_n² = π^{−1/2} · n!(α+n)/(2α)_n · Γ(α)/Γ(α+½),
//!
//! which avoids the O(α ln α) cancellation of the direct form when α is
//! large (α ≈ 1/(βħω) for weak deformation).

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::specfun::gamma::ln_gamma_ratio_unchecked;
use crate::specfun::{gegenbauer, ln_pochhammer};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformedMode {
    omega: f64,
    beta: f64,
    hbar: f64,
}

impl DeformedMode {
    pub fn new(omega: f64, beta: f64, hbar: f64) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(domain("omega", omega, "finite omega > 0"));
        }
        if !(beta >= 0.0 && beta.is_finite()) {
            return Err(domain("beta", beta, "finite beta >= 0"));
        }
        if !(hbar > 0.0 && hbar.is_finite()) {
            return Err(domain("hbar", hbar, "finite hbar > 0"));
        }
        Ok(Self { omega, beta, hbar })
    }

    /// Mode with ħ = ω = 1 and β equal to the dimensionless deformation βħω.
    pub fn from_deformation(deformation: f64) -> Result<Self> {
        Self::new(1.0, deformation, 1.0)
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// βħω.
    pub fn deformation(&self) -> f64 {
        self.beta * self.hbar * self.omega
    }

    /// ω̄ = βħω/2.
    pub fn wbar(&self) -> f64 {
        0.5 * self.deformation()
    }

    pub fn is_deformed(&self) -> bool {
        self.beta > 0.0
    }

    /// π/(2√β), or `None` for the undeformed (unbounded) case.
    pub fn momentum_bound(&self) -> Option<f64> {
        self.is_deformed().then(|| PI / (2.0 * self.beta.sqrt()))
    }

    /// ħ√β, the smallest attainable root-mean-square coordinate.
    pub fn minimal_length(&self) -> f64 {
        self.hbar * self.beta.sqrt()
    }

    pub fn alpha(&self) -> Result<AlphaParam> {
        alpha_of_mode(self)
    }

    pub fn energy_level(&self, n: u32) -> f64 {
        energy_level(self, n)
    }

    pub fn state(&self, n: u32) -> EigenState {
        EigenState { mode: *self, n }
    }
}

/// The eigenfunction exponent α, always > 1 for a deformed mode.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AlphaParam(f64);

impl AlphaParam {
    /// α = ½[1 + (2/x)√(1 + (x/2)²)] with x = βħω > 0.
    pub fn from_deformation(deformation: f64) -> Result<Self> {
        if deformation == 0.0 {
            return Err(Error::Undeformed("alpha"));
        }
        if !(deformation > 0.0) {
            return Err(domain("deformation", deformation, "beta*hbar*omega > 0"));
        }
        let x = deformation;
        let half = 0.5 * x;
        Ok(Self(0.5 * (1.0 + (2.0 / x) * half.hypot(1.0))))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Inverse map: βħω = 1/√(α(α−1)).
    pub fn deformation(self) -> f64 {
        1.0 / (self.0 * (self.0 - 1.0)).sqrt()
    }
}

pub fn alpha_of_mode(mode: &DeformedMode) -> Result<AlphaParam> {
    if !mode.is_deformed() {
        return Err(Error::Undeformed("alpha"));
    }
    AlphaParam::from_deformation(mode.deformation())
}

/// E_n = ħω[(n+½)√(1+ω̄²) + ω̄(n²+n+½)], ω̄ = βħω/2.
pub fn energy_level(mode: &DeformedMode, n: u32) -> f64 {
    let n = f64::from(n);
    let hw = mode.hbar * mode.omega;
    if !mode.is_deformed() {
        return hw * (n + 0.5);
    }
    let wbar = mode.wbar();
    hw * ((n + 0.5) * wbar.hypot(1.0) + wbar * (n * n + n + 0.5))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenState {
    pub mode: DeformedMode,
    pub n: u32,
}

impl EigenState {
    pub fn new(mode: DeformedMode, n: u32) -> Self {
        Self { mode, n }
    }

    pub fn energy(&self) -> f64 {
        energy_level(&self.mode, self.n)
    }

    /// Precomputed normalization for repeated evaluation.
    pub fn eigenfunction(&self) -> Result<Eigenfunction> {
        let alpha = alpha_of_mode(&self.mode)?.value();
        Ok(Eigenfunction::new(self.n, alpha))
    }
}

/// ψ̄_n for a fixed (n, α), with ln N_n cached.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenfunction {
    n: u32,
    alpha: f64,
    ln_norm: f64,
}

impl Eigenfunction {
    pub fn new(n: u32, alpha: f64) -> Self {
        Self {
            n,
            alpha,
            ln_norm: ln_normalization(n, alpha),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn ln_norm(&self) -> f64 {
        self.ln_norm
    }

    /// N_n (1−x²)^{α/2−1/4}, given ln(1−x²).
    fn envelope(&self, ln_one_minus_x2: f64) -> f64 {
        (self.ln_norm + (0.5 * self.alpha - 0.25) * ln_one_minus_x2).exp()
    }

    /// ψ̄_n(x) for |x| <= 1 (no range check).
    pub fn at_x(&self, x: f64) -> f64 {
        let one_minus = (1.0 - x) * (1.0 + x);
        if one_minus <= 0.0 {
            return 0.0;
        }
        self.envelope(one_minus.ln()) * gegenbauer(self.n, self.alpha, x)
    }

    /// ψ̄_n(sin u) for u in [−π/2, π/2], with 1 − x² taken as cos²u.
    pub fn at_angle(&self, u: f64) -> f64 {
        let c = u.cos();
        if c <= 0.0 {
            return 0.0;
        }
        self.envelope(2.0 * c.ln()) * gegenbauer(self.n, self.alpha, u.sin())
    }
}

fn ln_normalization(n: u32, alpha: f64) -> f64 {
    let ln_fact: f64 = (1..=n).map(|j| f64::from(j).ln()).sum();
    // Γ(α)/Γ(α+½) = R(α)/α with R(a) = Γ(a+1)/Γ(a+½)
    let ln_gamma_quot = ln_gamma_ratio_unchecked(alpha) - alpha.ln();
    -0.25 * PI.ln()
        + 0.5 * (ln_fact + (alpha + f64::from(n)).ln() - ln_pochhammer(2.0 * alpha, n))
        + 0.5 * ln_gamma_quot
}

/// ψ̄_n(x), the eigenfunction in the x = sin p̄ representation.
pub fn eval_psi_x(state: &EigenState, x: f64) -> Result<f64> {
    if !(x.abs() <= 1.0) {
        return Err(domain("x", x, "|x| <= 1"));
    }
    Ok(state.eigenfunction()?.at_x(x))
}

/// ψ_n(p) in the momentum representation, normalized with dp.
///
/// The undeformed mode delegates to the harmonic-oscillator function.
pub fn eval_psi_p(state: &EigenState, p: f64) -> Result<f64> {
    let mode = &state.mode;
    let Some(bound) = mode.momentum_bound() else {
        if !p.is_finite() {
            return Err(domain("p", p, "finite momentum"));
        }
        return Ok(ho_reference_psi(mode.omega, mode.hbar, state.n, p));
    };
    if !(p.abs() <= bound) {
        return Err(domain("p", p, "|p| <= pi / (2 sqrt(beta))"));
    }
    let pbar = p * mode.beta.sqrt();
    let psi = state.eigenfunction()?.at_angle(pbar);
    Ok(mode.beta.powf(0.25) * psi * pbar.cos().max(0.0).sqrt())
}

/// Harmonic-oscillator eigenfunction in momentum space, unit mass:
/// (πħω)^{−1/4} (n! 2ⁿ)^{−1/2} H_n(η) e^{−η²/2}, η = p/√(ħω).
///
/// Evaluated with the normalized Hermite-function recurrence, which never
/// forms H_n or n! separately.
pub fn ho_reference_psi(omega: f64, hbar: f64, n: u32, p: f64) -> f64 {
    let scale = hbar * omega;
    let eta = p / scale.sqrt();
    let mut prev = 0.0;
    let mut curr = PI.powf(-0.25) * (-0.5 * eta * eta).exp();
    for k in 1..=n {
        let k = f64::from(k);
        let next = (2.0 / k).sqrt() * eta * curr - ((k - 1.0) / k).sqrt() * prev;
        prev = curr;
        curr = next;
    }
    curr * scale.powf(-0.25)
}
