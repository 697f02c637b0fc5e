use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "defrad",
    version,
    about = "Spectra, matrix elements and emission intensity of a minimal-length deformed field oscillator"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ModeArgs {
    #[arg(long)]
    pub beta: f64,
    #[arg(long)]
    pub omega: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy levels E_0..E_nmax.
    #[command(allow_negative_numbers = true)]
    Spectrum {
        #[command(flatten)]
        mode: ModeArgs,
        #[arg(long)]
        nmax: u32,
    },
    /// Momentum-space eigenfunction on a uniform grid.
    #[command(allow_negative_numbers = true)]
    Wavefunc {
        #[command(flatten)]
        mode: ModeArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 201)]
        points: usize,
    },
    /// A single field matrix element.
    #[command(allow_negative_numbers = true)]
    Melem {
        #[command(flatten)]
        mode: ModeArgs,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        nprime: u32,
        #[arg(long, value_enum, default_value_t = OperatorChoice::Both)]
        operator: OperatorChoice,
        /// Relative quadrature tolerance.
        #[arg(long, default_value_t = 1e-12)]
        rel_tol: f64,
    },
    /// Selection-rule table for all n, n' <= nmax.
    #[command(allow_negative_numbers = true)]
    Scan {
        #[command(flatten)]
        mode: ModeArgs,
        #[arg(long)]
        nmax: u32,
        #[arg(long, default_value_t = 1e-12)]
        rel_tol: f64,
    },
    /// One-photon frequency against mode frequency.
    #[command(allow_negative_numbers = true)]
    Dispersion {
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        #[arg(long, value_enum, default_value_t = SignChoice::Plus)]
        sign: SignChoice,
        #[arg(long)]
        omega_min: f64,
        #[arg(long)]
        omega_max: f64,
        #[arg(long, default_value_t = 101)]
        points: usize,
    },
    /// Deformed-to-undeformed dipole intensity ratio g over a wbar range.
    #[command(allow_negative_numbers = true)]
    Gcurve {
        #[arg(long)]
        wbar_min: f64,
        #[arg(long)]
        wbar_max: f64,
        #[arg(long, default_value_t = 201)]
        points: usize,
        /// Log-spaced grid and log axes.
        #[arg(long)]
        log: bool,
        /// Add the large-wbar asymptote column.
        #[arg(long)]
        asymptote: bool,
    },
    /// Intensity ratio for given atomic transition amplitudes.
    #[command(allow_negative_numbers = true)]
    Intensity {
        #[arg(long)]
        wbar: f64,
        #[arg(long)]
        p12c_re: f64,
        #[arg(long, default_value_t = 0.0)]
        p12c_im: f64,
        #[arg(long, default_value_t = 0.0)]
        p12s_re: f64,
        #[arg(long, default_value_t = 0.0)]
        p12s_im: f64,
    },
    /// Run the acceptance checks and print a pass/fail table.
    Verify {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OperatorChoice {
    Q,
    Tan,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignChoice {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Quick,
    Full,
}
