//! Library side of the `defrad` command-line tool.

pub mod args;
pub mod commands;
pub mod svg;
pub mod table;
pub mod verify;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use anyhow::{Context, Result};
use clap::{CommandFactory, Parser};
use num_complex::Complex64;

use args::{Cli, Command, Format};
use commands::Output;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Invalid parameter values that clap cannot reject by itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Rendered output and whether the command succeeded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub text: String,
    pub ok: bool,
}

fn render(out: &Output, format: Format) -> String {
    match format {
        Format::Csv => out.table.to_csv(),
        Format::Json => out.table.to_json(),
        Format::Svg => svg::render(&out.table, &out.title, out.axes),
    }
}

pub fn execute(cli: &Cli) -> Result<Rendered> {
    let out = match cli.command {
        Command::Spectrum { mode, nmax } => commands::spectrum(&mode, nmax)?,
        Command::Wavefunc { mode, n, points } => commands::wavefunc(&mode, n, points)?,
        Command::Melem {
            mode,
            n,
            nprime,
            operator,
            rel_tol,
        } => commands::melem(&mode, n, nprime, operator, rel_tol)?,
        Command::Scan {
            mode,
            nmax,
            rel_tol,
        } => commands::scan(&mode, nmax, rel_tol)?,
        Command::Dispersion {
            beta,
            hbar,
            sign,
            omega_min,
            omega_max,
            points,
        } => commands::dispersion(beta, hbar, sign, omega_min, omega_max, points)?,
        Command::Gcurve {
            wbar_min,
            wbar_max,
            points,
            log,
            asymptote,
        } => commands::gcurve(wbar_min, wbar_max, points, log, asymptote)?,
        Command::Intensity {
            wbar,
            p12c_re,
            p12c_im,
            p12s_re,
            p12s_im,
        } => commands::intensity(
            wbar,
            Complex64::new(p12c_re, p12c_im),
            Complex64::new(p12s_re, p12s_im),
        )?,
        Command::Verify { level } => {
            if cli.format == Format::Svg {
                return Err(UsageError("verify has no SVG form".into()).into());
            }
            let checks = verify::run_all(level);
            let ok = checks.iter().all(|c| c.passed);
            let table = verify::report(&checks, level);
            let text = match cli.format {
                Format::Json => table.to_json(),
                _ => table.to_csv(),
            };
            return Ok(Rendered { text, ok });
        }
    };
    Ok(Rendered {
        text: render(&out, cli.format),
        ok: true,
    })
}

fn is_usage(err: &anyhow::Error) -> bool {
    if err.downcast_ref::<UsageError>().is_some() {
        return true;
    }
    matches!(
        err.downcast_ref::<defrad::Error>(),
        Some(
            defrad::Error::Domain { .. }
                | defrad::Error::Undeformed(_)
                | defrad::Error::EmptyInterval { .. }
                | defrad::Error::ZeroAmplitude
        )
    )
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Parses `args` (program name first), runs one subcommand and returns the
/// process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = execute(&cli).and_then(|r| emit(&cli, &r.text).map(|()| r.ok));
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILURE,
        Err(e) if is_usage(&e) => {
            eprintln!("error: {e:#}\n\n{}", Cli::command().render_usage());
            EXIT_USAGE
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_FAILURE
        }
    }
}
