//! The acceptance checks behind `defrad verify`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::time::{Duration, Instant};

use anyhow::Result;
use defrad::melem::{q10_closed, q_nm, selection_scan, tan10_closed, tan_nm, SelectionRule};
use defrad::oracle::{compare_spectra, GridSpec, ACCEPTANCE_GRID_POINTS, QUICK_GRID_POINTS};
use defrad::radiation::{
    alpha_bar, g_asymptote, g_factor, g_first_principles, large_beta_prefactor_check,
};
use defrad::specfun::{integrate_adaptive, AdaptiveQuadrature};
use defrad::{AlphaParam, DeformedMode};

use crate::args::Level;
use crate::commands;
use crate::table::Table;

/// Reference output of `gcurve --wbar-min 0 --wbar-max 10 --points 201`.
pub const GCURVE_GOLDEN: &str = include_str!("../tests/golden/gcurve_0_10_201.csv");

const SPECTRUM_TIME_LIMIT: Duration = Duration::from_secs(10);

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(id: u8, name: &'static str, passed: bool, detail: String) -> Self {
        Self {
            id,
            name,
            passed,
            detail,
        }
    }

    fn failed(id: u8, name: &'static str, err: anyhow::Error) -> Self {
        Self::new(id, name, false, format!("error: {err:#}"))
    }
}

fn mode(x: f64) -> Result<DeformedMode> {
    Ok(DeformedMode::from_deformation(x)?)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    commands::logspace(lo, hi, points).expect("static grid")
}

pub fn undeformed_limit() -> Check {
    let g0 = g_factor(0.0);
    let dev = (g_factor(1e-8) - 1.0).abs();
    Check::new(
        1,
        "undeformed limit of g",
        g0 == 1.0 && dev <= 1e-4,
        format!("g(0) = {g0}; |g(1e-8) - 1| = {dev:.3e} (tol 1e-4)"),
    )
}

fn asymptote_deviation(w: f64) -> f64 {
    (g_factor(w) / g_asymptote(w) - 1.0).abs()
}

pub fn asymptote() -> Check {
    let d3 = asymptote_deviation(1e3);
    let d4 = asymptote_deviation(1e4);
    let devs: Vec<f64> = log_grid(1e3, 1e4, 21)
        .into_iter()
        .map(asymptote_deviation)
        .collect();
    let decreasing = devs.windows(2).all(|w| w[1] < w[0]);
    Check::new(
        2,
        "large-wbar asymptote of g",
        d3 <= 2e-2 && d4 <= 2e-3 && decreasing,
        format!("deviation {d3:.3e} at 1e3 (tol 2e-2); {d4:.3e} at 1e4 (tol 2e-3); decreasing: {decreasing}"),
    )
}

pub fn spectrum_oracle(level: Level) -> Check {
    const NAME: &str = "grid spectrum vs closed-form energies";
    let (npoints, tol) = match level {
        Level::Quick => (QUICK_GRID_POINTS, 1e-4),
        Level::Full => (ACCEPTANCE_GRID_POINTS, 1e-6),
    };
    let mut passed = true;
    let mut parts = Vec::new();
    for x in [0.1, 1.0, 2.0, 10.0] {
        let start = Instant::now();
        let run =
            || -> Result<f64> { Ok(compare_spectra(&mode(x)?, &GridSpec::new(npoints, 9)?)?) };
        let err = match run() {
            Ok(e) => e,
            Err(e) => return Check::failed(3, NAME, e),
        };
        let slow = start.elapsed() > SPECTRUM_TIME_LIMIT;
        passed &= err <= tol && !slow;
        parts.push(format!(
            "{x}: {err:.3e}{}",
            if slow { " (over 10 s)" } else { "" }
        ));
    }
    Check::new(
        3,
        NAME,
        passed,
        format!(
            "max rel error by beta*hbar*omega with {npoints} points (tol {tol:e}): {}",
            parts.join("; ")
        ),
    )
}

fn orthonormality_error(x: f64, nmax: u32) -> Result<f64> {
    let m = mode(x)?;
    let fs = (0..=nmax)
        .map(|n| m.state(n).eigenfunction())
        .collect::<Result<Vec<_>, _>>()?;
    let cfg = AdaptiveQuadrature::default();
    let mut worst = 0.0_f64;
    for a in &fs {
        for b in fs.iter().filter(|b| b.n() >= a.n()) {
            // x = sin u
            let v = integrate_adaptive(
                |u| a.at_angle(u) * b.at_angle(u) * u.cos(),
                -FRAC_PI_2,
                FRAC_PI_2,
                &cfg,
            )?
            .value;
            let want = if a.n() == b.n() { 1.0 } else { 0.0 };
            worst = worst.max((v - want).abs());
        }
    }
    Ok(worst)
}

pub fn orthonormality() -> Check {
    const NAME: &str = "orthonormality of eigenfunctions";
    let mut worst = 0.0_f64;
    for x in [0.5, 2.0] {
        match orthonormality_error(x, 10) {
            Ok(e) => worst = worst.max(e),
            Err(e) => return Check::failed(4, NAME, e),
        }
    }
    Check::new(
        4,
        NAME,
        worst <= 1e-10,
        format!("max |<n|m> - delta| for n and m <= 10 = {worst:.3e} (tol 1e-10)"),
    )
}

fn closed_form_errors(x: f64) -> Result<(f64, f64)> {
    let m = mode(x)?;
    let q = q_nm(&m, 1, 0)?.value;
    let t = tan_nm(&m, 1, 0)?.value.re;
    let qc = q10_closed(&m)?;
    let tc = tan10_closed(&m)?;
    Ok(((q - qc).norm() / qc.norm(), rel(t, tc)))
}

pub fn closed_form_elements() -> Check {
    const NAME: &str = "quadrature vs closed-form <1|q|0> and <1|tan|0>";
    let mut worst = 0.0_f64;
    for x in [0.1, 1.0 / 2f64.sqrt(), 2.0, 10.0] {
        match closed_form_errors(x) {
            Ok((eq, et)) => worst = worst.max(eq).max(et),
            Err(e) => return Check::failed(5, NAME, e),
        }
    }
    Check::new(
        5,
        NAME,
        worst <= 1e-8,
        format!("max rel error = {worst:.3e} (tol 1e-8)"),
    )
}

pub fn harmonic_limit() -> Check {
    const NAME: &str = "harmonic limit of <1|q|0>";
    let mut worst = 0.0_f64;
    for (omega, hbar) in [(1.0, 1.0), (2.0, 0.5)] {
        // beta * hbar * omega = 1e-4
        let m = match DeformedMode::new(omega, 1e-4 / (hbar * omega), hbar) {
            Ok(m) => m,
            Err(e) => return Check::failed(6, NAME, e.into()),
        };
        match q10_closed(&m) {
            Ok(q) => worst = worst.max(rel(q.norm(), (hbar / (2.0 * omega)).sqrt())),
            Err(e) => return Check::failed(6, NAME, e.into()),
        }
    }
    Check::new(
        6,
        NAME,
        worst <= 1e-3,
        format!("|q10| vs sqrt(hbar/2 omega): rel error {worst:.3e} (tol 1e-3)"),
    )
}

pub fn derivation_paths() -> Check {
    const NAME: &str = "g from closed form vs from dispersion and <1|q|0>";
    let mut worst = 0.0_f64;
    for w in log_grid(1e-3, 1e3, 61) {
        match g_first_principles(w) {
            Ok(fp) => worst = worst.max(rel(fp, g_factor(w))),
            Err(e) => return Check::failed(7, NAME, e.into()),
        }
    }
    Check::new(
        7,
        NAME,
        worst <= 1e-6,
        format!("max rel difference over 61 points = {worst:.3e} (tol 1e-6)"),
    )
}

pub fn dispersion_identity() -> Check {
    const NAME: &str = "alpha_bar inverts the energy-consistent dispersion";
    let mut worst = 0.0_f64;
    for s in log_grid(1e-4, 1e4, 41) {
        let wbar = s * s.hypot(1.0) + 2.0 * s * s;
        match AlphaParam::from_deformation(2.0 * s) {
            Ok(a) => worst = worst.max(rel(alpha_bar(wbar), a.value())),
            Err(e) => return Check::failed(8, NAME, e.into()),
        }
    }
    let passed = worst <= 1e-10;
    Check::new(
        8,
        NAME,
        passed,
        format!(
            "max rel error over 41 points = {worst:.3e} (tol 1e-10); plus-sign dispersion {}",
            if passed { "consistent" } else { "inconsistent" }
        ),
    )
}

pub fn prefactor_identity() -> Check {
    let (a, b) = large_beta_prefactor_check();
    let exact = 2f64.powf(7.5) / (3f64.powf(3.5) * PI * PI);
    let diff = (a - b).abs();
    Check::new(
        9,
        "large-deformation dipole prefactor",
        diff <= 1e-12 && (a - exact).abs() <= 1e-12,
        format!("{a:.15} vs {b:.15}; |diff| = {diff:.1e} (tol 1e-12)"),
    )
}

pub fn selection_rule() -> Check {
    const NAME: &str = "selection rule at beta*hbar*omega = 1";
    let scan = match mode(1.0).and_then(|m| Ok(selection_scan(&m, 6)?)) {
        Ok(s) => s,
        Err(e) => return Check::failed(10, NAME, e),
    };
    let passed =
        matches!(scan.q_rule, SelectionRule::NonzeroOnlyOn(_)) && scan.q_rule == scan.tan_rule;
    Check::new(
        10,
        NAME,
        passed,
        format!("q: {}; tan: {} (n and n' <= 6)", scan.q_rule, scan.tan_rule),
    )
}

fn golden_check(generated: &str) -> (bool, String) {
    let (_, rows) = crate::table::parse_csv(generated);
    let g: Vec<f64> = rows
        .iter()
        .filter_map(|r| r.get(1).and_then(|v| v.parse().ok()))
        .collect();
    let starts_at_one = g.first() == Some(&1.0);
    let decreasing = g.windows(2).all(|w| w[1] < w[0]);
    let matches = generated == GCURVE_GOLDEN;
    (
        starts_at_one && decreasing && matches && g.len() == 201,
        format!(
            "{} rows; starts at 1: {starts_at_one}; strictly decreasing: {decreasing}; matches golden: {matches}",
            g.len()
        ),
    )
}

pub fn gcurve_reproduction() -> Check {
    const NAME: &str = "g curve on [0, 10] with 201 points";
    match commands::gcurve(0.0, 10.0, 201, false, false) {
        Ok(out) => {
            let (passed, detail) = golden_check(&out.table.to_csv());
            Check::new(11, NAME, passed, detail)
        }
        Err(e) => Check::failed(11, NAME, e),
    }
}

/// Same checks as [`gcurve_reproduction`] on CSV text produced elsewhere.
pub fn gcurve_from_csv(csv: &str) -> Check {
    let (passed, detail) = golden_check(csv);
    Check::new(11, "g curve on [0, 10] with 201 points", passed, detail)
}

fn tan30(x: f64) -> Result<f64> {
    Ok(tan_nm(&mode(x)?, 3, 0)?.value.norm())
}

pub fn many_photon_onset() -> Check {
    const NAME: &str = "suppression of <3|tan|0> at weak deformation";
    match (tan30(1e-3), tan30(1.0)) {
        (Ok(weak), Ok(strong)) => Check::new(
            12,
            NAME,
            weak * 10.0 <= strong,
            format!("|tan30| = {weak:.3e} at 1e-3 vs {strong:.3e} at 1 (need 10x)"),
        ),
        (Err(e), _) | (_, Err(e)) => Check::failed(12, NAME, e),
    }
}

pub fn run_all(level: Level) -> Vec<Check> {
    vec![
        undeformed_limit(),
        asymptote(),
        spectrum_oracle(level),
        orthonormality(),
        closed_form_elements(),
        harmonic_limit(),
        derivation_paths(),
        dispersion_identity(),
        prefactor_identity(),
        selection_rule(),
        gcurve_reproduction(),
        many_photon_onset(),
    ]
}

pub fn report(checks: &[Check], level: Level) -> Table {
    let mut t = Table::new(&["id", "check", "status", "detail"]);
    t.param(
        "level",
        match level {
            Level::Quick => "quick",
            Level::Full => "full",
        },
    );
    t.param("passed", checks.iter().filter(|c| c.passed).count())
        .param("total", checks.len());
    for c in checks {
        t.push(vec![
            u32::from(c.id).into(),
            c.name.into(),
            (if c.passed { "PASS" } else { "FAIL" }).into(),
            c.detail.as_str().into(),
        ]);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_checks_pass() {
        for c in [
            undeformed_limit(),
            asymptote(),
            harmonic_limit(),
            dispersion_identity(),
            prefactor_identity(),
            gcurve_reproduction(),
        ] {
            assert!(c.passed, "{}: {}", c.id, c.detail);
        }
    }

    #[test]
    fn golden_rejects_edits() {
        let edited = GCURVE_GOLDEN.replacen("e-1", "e-2", 1);
        assert!(!gcurve_from_csv(&edited).passed);
    }

    #[test]
    fn report_layout() {
        let checks = vec![
            Check::new(1, "a", true, "x".into()),
            Check::new(2, "b", false, "y".into()),
        ];
        let t = report(&checks, Level::Quick);
        assert_eq!(t.rows.len(), 2);
        assert!(t.params.contains(&("passed".to_string(), "1".to_string())));
    }
}
