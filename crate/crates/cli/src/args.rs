//! Flag parsing. Every subcommand accepts the same common flags; `sweep`,
//! `potential` and `density` add their own.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{Command, Convention, Format, Method, ModelKind, RunConfig, SweepVar};

#[derive(Parser, Debug)]
#[command(
    name = "hqm",
    version,
    about = "Bound states of a particle in a helically twisted space"
)]
#[command(args_conflicts_with_subcommands = true)]
pub struct Cli {
    /// Print the table/figure to subcommand mapping and exit.
    #[arg(long)]
    pub list_reproductions: bool,

    #[command(subcommand)]
    pub command: Option<Sub>,
}

#[derive(Subcommand, Debug)]
pub enum Sub {
    /// Closed-form energies over an (omega, m, n) grid.
    Spectrum(Common),
    /// Finite-difference vs closed-form comparison on the benchmark set.
    Table1(Common),
    /// Sampled effective potential.
    Potential {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        range: Range,
    },
    /// Normalized radial probability densities.
    Density {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        range: Range,
    },
    /// Level tracks along a torsion or m sweep.
    Sweep {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Oscillator levels next to the shipped reference table.
    Oscillator(Common),
    /// Same as --list-reproductions.
    ListReproductions(Common),
}

#[derive(Args, Debug, Default)]
pub struct Common {
    /// Torsion values (comma-separated or repeated).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub omega: Vec<f64>,
    /// Longitudinal wavenumber, 1/m.
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<f64>,
    /// Azimuthal quantum numbers (comma-separated or repeated).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub m: Vec<i32>,
    /// Highest radial quantum number.
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Effective mass, kg (default: electron mass).
    #[arg(long)]
    pub mu: Option<f64>,
    /// Oscillator angular frequency, rad/s.
    #[arg(long)]
    pub omega0: Option<f64>,
    /// Outer radius of the finite-difference box, m.
    #[arg(long)]
    pub rmax: Option<f64>,
    /// Interior finite-difference points.
    #[arg(long)]
    pub npts: Option<usize>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
    #[arg(long, value_enum, default_value_t = ConventionArg::Paper)]
    pub convention: ConventionArg,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ModelArg::Coulomb)]
    pub model: ModelArg,
}

#[derive(Args, Debug)]
pub struct Range {
    /// First sampled radius, m.
    #[arg(long, allow_negative_numbers = true)]
    pub r_from: Option<f64>,
    /// Last sampled radius, m.
    #[arg(long, allow_negative_numbers = true)]
    pub r_to: Option<f64>,
    #[arg(long, default_value_t = 400)]
    pub samples: usize,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value_t = VaryArg::Omega)]
    pub vary: VaryArg,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.5)]
    pub from: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 4.0)]
    pub to: f64,
    /// Points in an omega sweep (m sweeps visit every integer).
    #[arg(long, default_value_t = 8)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Analytic)]
    pub method: MethodArg,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default)]
pub enum FormatArg {
    #[default]
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default)]
pub enum ConventionArg {
    #[default]
    Paper,
    Physical,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default)]
pub enum ModelArg {
    #[default]
    Coulomb,
    Oscillator,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum VaryArg {
    Omega,
    M,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum MethodArg {
    Analytic,
    Fd,
}

impl Cli {
    pub fn into_config(self) -> RunConfig {
        let Some(sub) = self.command else {
            return RunConfig::new(Command::ListReproductions);
        };
        let (command, common, range, sweep) = match sub {
            Sub::Spectrum(c) => (Command::Spectrum, c, None, None),
            Sub::Table1(c) => (Command::Table1, c, None, None),
            Sub::Potential { common, range } => (Command::Potential, common, Some(range), None),
            Sub::Density { common, range } => (Command::Density, common, Some(range), None),
            Sub::Sweep { common, sweep } => (Command::Sweep, common, None, Some(sweep)),
            Sub::Oscillator(c) => (Command::Oscillator, c, None, None),
            Sub::ListReproductions(c) => (Command::ListReproductions, c, None, None),
        };
        let mut cfg = RunConfig::new(command);
        cfg.model = match common.model {
            ModelArg::Coulomb => ModelKind::Coulomb,
            ModelArg::Oscillator => ModelKind::Oscillator,
        };
        cfg.omegas = common.omega;
        cfg.k = common.k;
        cfg.ms = common.m;
        cfg.n_max = common.n_max;
        if let Some(mu) = common.mu {
            cfg.mu = mu;
        }
        cfg.omega0 = common.omega0;
        cfg.r_max = common.rmax;
        cfg.npts = common.npts;
        cfg.format = match common.format {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        };
        cfg.convention = match common.convention {
            ConventionArg::Paper => Convention::Paper,
            ConventionArg::Physical => Convention::Physical,
        };
        cfg.out = common.out;
        if let Some(r) = range {
            cfg.r_from = r.r_from;
            cfg.r_to = r.r_to;
            cfg.samples = r.samples;
        }
        if let Some(s) = sweep {
            cfg.vary = match s.vary {
                VaryArg::Omega => SweepVar::Omega,
                VaryArg::M => SweepVar::M,
            };
            cfg.from = s.from;
            cfg.to = s.to;
            cfg.steps = s.steps;
            cfg.method = match s.method {
                MethodArg::Analytic => Method::Analytic,
                MethodArg::Fd => Method::Fd,
            };
        }
        cfg
    }
}

/// Parses an argument vector (program name first).
pub fn parse_config<I, T>(args: I) -> Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    if !cli.list_reproductions && cli.command.is_none() {
        return Err(clap::Error::raw(
            clap::error::ErrorKind::MissingSubcommand,
            "a subcommand or --list-reproductions is required\n",
        ));
    }
    Ok(cli.into_config())
}
