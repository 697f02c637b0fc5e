//! One function per data-producing subcommand, each returning a [`Table`].

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use anyhow::Result;
use defrad::melem::{matrix_element, selection_scan_with, MatrixElementConfig, Operator};
use defrad::oscillator::eval_psi_p;
use defrad::radiation::{
    dispersion_point, g_curve, intensity_ratio, DispersionSign, TransitionAmplitudes,
};
use defrad::specfun::AdaptiveQuadrature;
use defrad::DeformedMode;
use num_complex::Complex64;

use crate::args::{ModeArgs, OperatorChoice, SignChoice};
use crate::svg::Axes;
use crate::table::{Cell, Table};
use crate::UsageError;

/// A table plus what the SVG renderer needs to plot it.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub table: Table,
    pub title: String,
    pub axes: Axes,
}

impl Output {
    fn linear(table: Table, title: &str) -> Self {
        Self {
            table,
            title: title.to_owned(),
            axes: Axes::default(),
        }
    }
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn build_mode(m: &ModeArgs) -> Result<DeformedMode> {
    Ok(DeformedMode::new(m.omega, m.beta, m.hbar)?)
}

fn mode_params(t: &mut Table, m: &ModeArgs) {
    t.real_param("beta", m.beta)
        .real_param("omega", m.omega)
        .real_param("hbar", m.hbar);
}

fn check_tol(rel_tol: f64) -> Result<MatrixElementConfig> {
    if !(rel_tol > 0.0 && rel_tol < 1.0) {
        return Err(usage(format!(
            "--rel-tol must lie in (0, 1), got {rel_tol}"
        )));
    }
    Ok(MatrixElementConfig {
        quadrature: AdaptiveQuadrature {
            rel_tol,
            ..AdaptiveQuadrature::default()
        },
        ..MatrixElementConfig::default()
    })
}

/// `points` uniformly spaced values from `lo` to `hi`, both included exactly.
pub fn linspace(lo: f64, hi: f64, points: usize) -> Result<Vec<f64>> {
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(usage("range bounds must be finite"));
    }
    if !(lo < hi) {
        return Err(usage(format!("empty range [{lo}, {hi}]")));
    }
    if points < 2 {
        return Err(usage("--points must be at least 2"));
    }
    let last = (points - 1) as f64;
    let mut v: Vec<f64> = (0..points)
        .map(|i| lo + (hi - lo) * (i as f64 / last))
        .collect();
    v[points - 1] = hi;
    Ok(v)
}

/// `points` values spaced evenly in log10 from `lo` to `hi`.
pub fn logspace(lo: f64, hi: f64, points: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0) {
        return Err(usage("log grids need a positive lower bound"));
    }
    let exps = linspace(lo.log10(), hi.log10(), points)?;
    let mut v: Vec<f64> = exps.into_iter().map(|e| 10f64.powf(e)).collect();
    v[0] = lo;
    v[points - 1] = hi;
    Ok(v)
}

pub fn spectrum(m: &ModeArgs, nmax: u32) -> Result<Output> {
    let mode = build_mode(m)?;
    let mut t = Table::new(&["n", "energy"]);
    mode_params(&mut t, m);
    t.param("nmax", nmax);
    for n in 0..=nmax {
        t.push(vec![n.into(), mode.energy_level(n).into()]);
    }
    Ok(Output::linear(t, "energy levels"))
}

pub fn wavefunc(m: &ModeArgs, n: u32, points: usize) -> Result<Output> {
    let mode = build_mode(m)?;
    let reach = match mode.momentum_bound() {
        Some(bound) => bound,
        None => ((2.0 * f64::from(n) + 1.0).sqrt() + 5.0) * (m.hbar * m.omega).sqrt(),
    };
    let grid = linspace(-reach, reach, points)?;
    let state = mode.state(n);
    let mut t = Table::new(&["p", "psi"]);
    mode_params(&mut t, m);
    t.param("n", n).param("points", points);
    for p in grid {
        t.push(vec![p.into(), eval_psi_p(&state, p)?.into()]);
    }
    Ok(Output::linear(t, &format!("psi_{n}(p)")))
}

pub fn melem(
    m: &ModeArgs,
    n: u32,
    nprime: u32,
    which: OperatorChoice,
    rel_tol: f64,
) -> Result<Output> {
    let mode = build_mode(m)?;
    let cfg = check_tol(rel_tol)?;
    let ops: &[Operator] = match which {
        OperatorChoice::Q => &[Operator::Position],
        OperatorChoice::Tan => &[Operator::Tangent],
        OperatorChoice::Both => &[Operator::Position, Operator::Tangent],
    };
    let mut t = Table::new(&[
        "operator",
        "n",
        "nprime",
        "re",
        "im",
        "abs",
        "estimated_error",
    ]);
    mode_params(&mut t, m);
    t.real_param("rel_tol", rel_tol);
    for &op in ops {
        let r = matrix_element(&mode, op, n, nprime, &cfg)?;
        t.push(vec![
            op.name().into(),
            n.into(),
            nprime.into(),
            r.value.re.into(),
            r.value.im.into(),
            r.value.norm().into(),
            r.estimated_error.into(),
        ]);
    }
    Ok(Output::linear(t, "matrix elements"))
}

pub fn scan(m: &ModeArgs, nmax: u32, rel_tol: f64) -> Result<Output> {
    let mode = build_mode(m)?;
    let cfg = check_tol(rel_tol)?;
    let s = selection_scan_with(&mode, nmax, &cfg)?;
    let mut t = Table::new(&[
        "n",
        "nprime",
        "parity",
        "q_abs",
        "tan_abs",
        "q_vanishes",
        "tan_vanishes",
    ]);
    mode_params(&mut t, m);
    t.param("nmax", nmax)
        .real_param("rel_tol", rel_tol)
        .param("q_rule", s.q_rule)
        .param("tan_rule", s.tan_rule);
    for r in &s.rows {
        t.push(vec![
            r.n.into(),
            r.nprime.into(),
            r.parity.name().into(),
            r.q_abs.into(),
            r.tan_abs.into(),
            r.q_vanishes.into(),
            r.tan_vanishes.into(),
        ]);
    }
    Ok(Output::linear(t, "selection scan"))
}

pub fn dispersion(
    beta: f64,
    hbar: f64,
    sign: SignChoice,
    omega_min: f64,
    omega_max: f64,
    points: usize,
) -> Result<Output> {
    if !(beta >= 0.0 && beta.is_finite()) {
        return Err(usage(format!("--beta must be finite and >= 0, got {beta}")));
    }
    if !(hbar > 0.0 && hbar.is_finite()) {
        return Err(usage(format!("--hbar must be finite and > 0, got {hbar}")));
    }
    if !(omega_min >= 0.0) {
        return Err(usage("--omega-min must be >= 0"));
    }
    let sign = match sign {
        SignChoice::Plus => DispersionSign::EnergyConsistent,
        SignChoice::Minus => DispersionSign::AsPrinted,
    };
    let mut t = Table::new(&["omega_k", "Omega_k"]);
    t.real_param("beta", beta)
        .real_param("hbar", hbar)
        .param(
            "sign",
            match sign {
                DispersionSign::EnergyConsistent => "plus",
                DispersionSign::AsPrinted => "minus",
            },
        )
        .param("points", points);
    for w in linspace(omega_min, omega_max, points)? {
        let d = dispersion_point(w, beta, hbar, sign);
        t.push(vec![d.omega_k.into(), d.photon_frequency.into()]);
    }
    Ok(Output::linear(t, "photon dispersion"))
}

pub fn gcurve(
    wbar_min: f64,
    wbar_max: f64,
    points: usize,
    log: bool,
    asymptote: bool,
) -> Result<Output> {
    if !(wbar_min >= 0.0) {
        return Err(usage("--wbar-min must be >= 0"));
    }
    let grid = if log {
        logspace(wbar_min, wbar_max, points)?
    } else {
        linspace(wbar_min, wbar_max, points)?
    };
    let columns: &[&str] = if asymptote {
        &["wbar", "g", "g_asymptote"]
    } else {
        &["wbar", "g"]
    };
    let mut t = Table::new(columns);
    t.real_param("wbar_min", wbar_min)
        .real_param("wbar_max", wbar_max)
        .param("points", points)
        .param("log", log);
    for p in g_curve(&grid) {
        let mut row = vec![Cell::Real(p.wbar), Cell::Real(p.g)];
        if asymptote {
            row.push(Cell::Real(p.g_asymptote));
        }
        t.push(row);
    }
    Ok(Output {
        table: t,
        title: "g(wbar)".to_owned(),
        axes: Axes {
            log_x: log,
            log_y: log,
        },
    })
}

pub fn intensity(wbar: f64, p12c: Complex64, p12s: Complex64) -> Result<Output> {
    let amps = TransitionAmplitudes::new(p12c, p12s);
    let ratio = intensity_ratio(wbar, &amps)?;
    let mut t = Table::new(&["wbar", "intensity_ratio"]);
    t.real_param("p12c_re", p12c.re)
        .real_param("p12c_im", p12c.im)
        .real_param("p12s_re", p12s.re)
        .real_param("p12s_im", p12s.im);
    t.push(vec![wbar.into(), ratio.into()]);
    Ok(Output::linear(t, "intensity ratio"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mode(beta: f64, omega: f64) -> ModeArgs {
        ModeArgs {
            beta,
            omega,
            hbar: 1.0,
        }
    }

    #[test]
    fn grids_hit_their_endpoints() {
        let v = linspace(0.0, 10.0, 201).unwrap();
        assert_eq!(v[0], 0.0);
        assert_eq!(v[20], 1.0);
        assert_eq!(v[200], 10.0);
        let v = logspace(1e-3, 1e3, 61).unwrap();
        assert_eq!((v[0], v[60]), (1e-3, 1e3));
        assert!((v[30] - 1.0).abs() < 1e-15);
        assert!(linspace(1.0, 1.0, 5).is_err());
        assert!(linspace(0.0, 1.0, 1).is_err());
        assert!(logspace(0.0, 1.0, 5).is_err());
    }

    #[test]
    fn spectrum_rows() {
        let out = spectrum(&mode(1.0, 2.0), 5).unwrap();
        assert_eq!(out.table.rows.len(), 6);
        let m = DeformedMode::new(2.0, 1.0, 1.0).unwrap();
        for (n, row) in out.table.rows.iter().enumerate() {
            assert_eq!(row[1], Cell::Real(m.energy_level(n as u32)));
        }
    }

    #[test]
    fn wavefunc_vanishes_at_walls() {
        let out = wavefunc(&mode(1.0, 1.0), 2, 51).unwrap();
        let rows = &out.table.rows;
        assert_eq!(rows.len(), 51);
        assert!(rows[0][1].as_real().unwrap().abs() < 1e-8);
        assert!(rows[50][1].as_real().unwrap().abs() < 1e-8);
    }

    #[test]
    fn undeformed_wavefunc_uses_gaussian_window() {
        let out = wavefunc(&mode(0.0, 1.0), 0, 3).unwrap();
        assert_eq!(out.table.rows[0][0], Cell::Real(-6.0));
        assert!(out.table.rows[0][1].as_real().unwrap() < 1e-7);
    }

    #[test]
    fn melem_both_operators() {
        let out = melem(&mode(1.0, 1.0), 1, 0, OperatorChoice::Both, 1e-12).unwrap();
        assert_eq!(out.table.rows.len(), 2);
        assert_eq!(out.table.rows[0][0], Cell::Text("q".into()));
        assert!(melem(&mode(1.0, 1.0), 1, 0, OperatorChoice::Q, 0.0).is_err());
        assert!(melem(&mode(0.0, 1.0), 1, 0, OperatorChoice::Q, 1e-12).is_err());
    }

    #[test]
    fn scan_reports_rule() {
        let out = scan(&mode(1.0, 1.0), 3, 1e-12).unwrap();
        assert_eq!(out.table.rows.len(), 16);
        let rule = &out
            .table
            .params
            .iter()
            .find(|(k, _)| k == "q_rule")
            .unwrap()
            .1;
        assert_eq!(rule, "nonzero only at odd n+n'");
    }

    #[test]
    fn gcurve_first_row_is_one() {
        let out = gcurve(0.0, 10.0, 201, false, true).unwrap();
        assert_eq!(out.table.rows[0][1], Cell::Real(1.0));
        assert_eq!(out.table.columns, ["wbar", "g", "g_asymptote"]);
        assert!(gcurve(0.0, 10.0, 11, true, false).is_err());
    }

    #[test]
    fn dispersion_signs() {
        let plus = dispersion(1.0, 1.0, SignChoice::Plus, 0.0, 2.0, 3).unwrap();
        let minus = dispersion(1.0, 1.0, SignChoice::Minus, 0.0, 2.0, 3).unwrap();
        assert_eq!(plus.table.rows[0][1], Cell::Real(0.0));
        assert!(plus.table.rows[2][1].as_real() > minus.table.rows[2][1].as_real());
    }

    #[test]
    fn intensity_at_zero_deformation() {
        let out = intensity(0.0, Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)).unwrap();
        assert_eq!(out.table.rows[0][1], Cell::Real(1.0));
    }
}
