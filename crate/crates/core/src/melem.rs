//! Matrix elements of the field operators between deformed eigenstates.
//!
//! Both operators are evaluated on the eigenfunctions ψ̄_n(x) in the flat
//! x = sin p̄ representation, with every integral moved to u = p̄ ∈ [−π/2, π/2]:
//!
//! * position, q̂ = iħ√β (1−x²)^{1/4} d/dx (1−x²)^{1/4}. With the derivative
//!   taken analytically (product rule plus dC_n^α/dx = 2α C_{n−1}^{α+1}),
//!
//!   q_{n,n′} = iħ√β α ∫ ψ̄_n [−sin u ψ̄_{n′} + 2cos²u N_{n′} cos^{2α−1}u C_{n′−1}^{α+1}] du
//!
//!   where the endpoint terms vanish because (1−x²)^{α/2+1/4} → 0;
//! * tangent, the momentum-space element ⟨n|tan p̄|n′⟩ = ∫ ψ̄_n ψ̄_{n′} x/√(1−x²) dx,
//!   which in u becomes ∫ ψ̄_n ψ̄_{n′} sin u du.
//!
//! Both operators are odd under x → −x, so elements vanish unless n + n′ is odd.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::oscillator::{alpha_of_mode, DeformedMode, Eigenfunction};
use crate::specfun::{gamma_ratio, gegenbauer, integrate_adaptive, AdaptiveQuadrature, Estimate};

pub const DEFAULT_MAX_INDEX: u32 = 32;

/// Elements at or below this fraction of their row maximum count as zero.
pub const VANISHING_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operator {
    Position,
    Tangent,
}

impl Operator {
    pub fn name(self) -> &'static str {
        match self {
            Operator::Position => "q",
            Operator::Tangent => "tan",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixElementResult {
    /// Purely imaginary for `Position`, purely real for `Tangent`.
    pub value: Complex64,
    pub n: u32,
    pub nprime: u32,
    pub kind: Operator,
    pub estimated_error: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixElementConfig {
    pub max_index: u32,
    pub quadrature: AdaptiveQuadrature,
}

impl Default for MatrixElementConfig {
    fn default() -> Self {
        Self {
            max_index: DEFAULT_MAX_INDEX,
            quadrature: AdaptiveQuadrature::default(),
        }
    }
}

/// ⟨1|q̂|0⟩ = −iħ √(2β(α+1))/(2α+1) · [Γ(α+1)/Γ(α+½)]².
pub fn q10_closed(mode: &DeformedMode) -> Result<Complex64> {
    let alpha = alpha_of_mode(mode)?.value();
    let r = gamma_ratio(alpha)?;
    let magnitude =
        mode.hbar() * (2.0 * mode.beta() * (alpha + 1.0)).sqrt() / (2.0 * alpha + 1.0) * r * r;
    Ok(Complex64::new(0.0, -magnitude))
}

/// ⟨1|tan p̄|0⟩ = √(2(α+1))/(α(2α+1)) · [Γ(α+1)/Γ(α+½)]².
pub fn tan10_closed(mode: &DeformedMode) -> Result<f64> {
    let alpha = alpha_of_mode(mode)?.value();
    let r = gamma_ratio(alpha)?;
    Ok((2.0 * (alpha + 1.0)).sqrt() / (alpha * (2.0 * alpha + 1.0)) * r * r)
}

fn check_indices(n: u32, nprime: u32, cfg: &MatrixElementConfig) -> Result<()> {
    for (name, v) in [("n", n), ("nprime", nprime)] {
        if v > cfg.max_index {
            return Err(domain(name, f64::from(v), "index <= configured maximum"));
        }
    }
    Ok(())
}

fn position_integral(
    alpha: f64,
    n: u32,
    nprime: u32,
    cfg: &AdaptiveQuadrature,
) -> Result<Estimate> {
    let bra = Eigenfunction::new(n, alpha);
    let ket = Eigenfunction::new(nprime, alpha);
    let integrand = |u: f64| {
        let c = u.cos();
        if c <= 0.0 {
            return 0.0;
        }
        let s = u.sin();
        let deriv = if nprime == 0 {
            0.0
        } else {
            let env = (ket.ln_norm() + (alpha - 0.5) * c.ln()).exp();
            2.0 * c * c * env * gegenbauer(nprime - 1, alpha + 1.0, s)
        };
        alpha * bra.at_angle(u) * (deriv - s * ket.at_angle(u))
    };
    integrate_adaptive(integrand, -FRAC_PI_2, FRAC_PI_2, cfg)
}

fn tangent_integral(alpha: f64, n: u32, nprime: u32, cfg: &AdaptiveQuadrature) -> Result<Estimate> {
    let bra = Eigenfunction::new(n, alpha);
    let ket = Eigenfunction::new(nprime, alpha);
    integrate_adaptive(
        |u: f64| bra.at_angle(u) * ket.at_angle(u) * u.sin(),
        -FRAC_PI_2,
        FRAC_PI_2,
        cfg,
    )
}

pub fn q_nm(mode: &DeformedMode, n: u32, nprime: u32) -> Result<MatrixElementResult> {
    q_nm_with(mode, n, nprime, &MatrixElementConfig::default())
}

pub fn q_nm_with(
    mode: &DeformedMode,
    n: u32,
    nprime: u32,
    cfg: &MatrixElementConfig,
) -> Result<MatrixElementResult> {
    check_indices(n, nprime, cfg)?;
    let alpha = alpha_of_mode(mode)?.value();
    let scale = mode.hbar() * mode.beta().sqrt();
    let est = position_integral(alpha, n, nprime, &cfg.quadrature)?;
    Ok(MatrixElementResult {
        value: Complex64::new(0.0, scale * est.value),
        n,
        nprime,
        kind: Operator::Position,
        estimated_error: scale * est.error,
    })
}

pub fn tan_nm(mode: &DeformedMode, n: u32, nprime: u32) -> Result<MatrixElementResult> {
    tan_nm_with(mode, n, nprime, &MatrixElementConfig::default())
}

pub fn tan_nm_with(
    mode: &DeformedMode,
    n: u32,
    nprime: u32,
    cfg: &MatrixElementConfig,
) -> Result<MatrixElementResult> {
    check_indices(n, nprime, cfg)?;
    let alpha = alpha_of_mode(mode)?.value();
    let est = tangent_integral(alpha, n, nprime, &cfg.quadrature)?;
    Ok(MatrixElementResult {
        value: Complex64::new(est.value, 0.0),
        n,
        nprime,
        kind: Operator::Tangent,
        estimated_error: est.error,
    })
}

pub fn matrix_element(
    mode: &DeformedMode,
    op: Operator,
    n: u32,
    nprime: u32,
    cfg: &MatrixElementConfig,
) -> Result<MatrixElementResult> {
    match op {
        Operator::Position => q_nm_with(mode, n, nprime, cfg),
        Operator::Tangent => tan_nm_with(mode, n, nprime, cfg),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: u32) -> Self {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelectionRow {
    pub n: u32,
    pub nprime: u32,
    pub q_abs: f64,
    pub tan_abs: f64,
    /// Parity of n + n′.
    pub parity: Parity,
    pub q_vanishes: bool,
    pub tan_vanishes: bool,
}

/// Which parity class of n + n′ carries the nonzero elements of one operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectionRule {
    /// Nonzero exactly on this class, zero on the other.
    NonzeroOnlyOn(Parity),
    /// Neither class is uniformly zero or uniformly nonzero.
    Mixed,
}

impl std::fmt::Display for SelectionRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SelectionRule::NonzeroOnlyOn(p) => write!(f, "nonzero only at {} n+n'", p.name()),
            SelectionRule::Mixed => f.write_str("no parity selection rule"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelectionScan {
    pub nmax: u32,
    /// Row-major in (n, n′).
    pub rows: Vec<SelectionRow>,
    pub q_rule: SelectionRule,
    pub tan_rule: SelectionRule,
}

fn classify(rows: &[SelectionRow], vanishes: impl Fn(&SelectionRow) -> bool) -> SelectionRule {
    for parity in [Parity::Even, Parity::Odd] {
        let nonzero_here = rows
            .iter()
            .filter(|r| r.parity == parity)
            .all(|r| !vanishes(r));
        let zero_elsewhere = rows.iter().filter(|r| r.parity != parity).all(&vanishes);
        if nonzero_here && zero_elsewhere {
            return SelectionRule::NonzeroOnlyOn(parity);
        }
    }
    SelectionRule::Mixed
}

/// Tabulates |q_{n,n′}| and |(tan p̄)_{n,n′}| for 0 <= n, n′ <= nmax and
/// reports the parity rule the numbers actually follow.
pub fn selection_scan(mode: &DeformedMode, nmax: u32) -> Result<SelectionScan> {
    selection_scan_with(mode, nmax, &MatrixElementConfig::default())
}

pub fn selection_scan_with(
    mode: &DeformedMode,
    nmax: u32,
    cfg: &MatrixElementConfig,
) -> Result<SelectionScan> {
    check_indices(nmax, nmax, cfg)?;
    let mut rows = Vec::with_capacity(((nmax + 1) * (nmax + 1)) as usize);
    for n in 0..=nmax {
        let mut row = Vec::with_capacity(nmax as usize + 1);
        for nprime in 0..=nmax {
            let q = q_nm_with(mode, n, nprime, cfg)?.value.norm();
            let t = tan_nm_with(mode, n, nprime, cfg)?.value.norm();
            row.push((nprime, q, t));
        }
        let q_max = row.iter().map(|r| r.1).fold(0.0, f64::max);
        let t_max = row.iter().map(|r| r.2).fold(0.0, f64::max);
        rows.extend(
            row.into_iter()
                .map(|(nprime, q_abs, tan_abs)| SelectionRow {
                    n,
                    nprime,
                    q_abs,
                    tan_abs,
                    parity: Parity::of(n + nprime),
                    q_vanishes: q_abs <= VANISHING_THRESHOLD * q_max,
                    tan_vanishes: tan_abs <= VANISHING_THRESHOLD * t_max,
                }),
        );
    }
    let q_rule = classify(&rows, |r| r.q_vanishes);
    let tan_rule = classify(&rows, |r| r.tan_vanishes);
    Ok(SelectionScan {
        nmax,
        rows,
        q_rule,
        tan_rule,
    })
}
