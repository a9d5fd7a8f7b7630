use std::fmt;
use std::path::PathBuf;

use hqm_core::{Error as CoreError, ELECTRON_MASS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Spectrum,
    Table1,
    Potential,
    Density,
    Sweep,
    Oscillator,
    ListReproductions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModelKind {
    #[default]
    Coulomb,
    Oscillator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Sign convention for Coulomb energies. The published formula is the
/// negative of the operator eigenvalue; oscillator levels are never flipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    #[default]
    Paper,
    Physical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SweepVar {
    #[default]
    Omega,
    M,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Analytic,
    Fd,
}

/// Everything a subcommand needs. Empty lists and `None` mean "use the
/// subcommand's default".
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub model: ModelKind,
    pub omegas: Vec<f64>,
    /// Wavenumber along the axis, 1/m.
    pub k: Option<f64>,
    pub ms: Vec<i32>,
    pub n_max: Option<u32>,
    /// Effective mass, kg.
    pub mu: f64,
    /// Oscillator angular frequency, rad/s.
    pub omega0: Option<f64>,
    pub r_max: Option<f64>,
    pub npts: Option<usize>,
    pub format: Format,
    pub convention: Convention,
    pub out: Option<PathBuf>,
    /// Sampling range for `potential` and `density`, m.
    pub r_from: Option<f64>,
    pub r_to: Option<f64>,
    pub samples: usize,
    pub vary: SweepVar,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    pub method: Method,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            model: ModelKind::Coulomb,
            omegas: Vec::new(),
            k: None,
            ms: Vec::new(),
            n_max: None,
            mu: ELECTRON_MASS,
            omega0: None,
            r_max: None,
            npts: None,
            format: Format::Csv,
            convention: Convention::Paper,
            out: None,
            r_from: None,
            r_to: None,
            samples: 400,
            vary: SweepVar::Omega,
            from: 0.5,
            to: 4.0,
            steps: 8,
            method: Method::Analytic,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let finite = |name: &str, v: f64| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(CliError::Config(format!("{name} must be finite, got {v}")))
            }
        };
        for &w in &self.omegas {
            finite("omega", w)?;
        }
        if let Some(k) = self.k {
            finite("k", k)?;
        }
        if !(self.mu > 0.0 && self.mu.is_finite()) {
            return Err(CliError::Config(format!("mu must be positive, got {}", self.mu)));
        }
        if let Some(w0) = self.omega0 {
            if !(w0 > 0.0 && w0.is_finite()) {
                return Err(CliError::Config(format!("omega0 must be positive, got {w0}")));
            }
        }
        if let Some(r) = self.r_max {
            if !(r > 0.0 && r.is_finite()) {
                return Err(CliError::Config(format!("rmax must be positive, got {r}")));
            }
        }
        if self.npts == Some(0) {
            return Err(CliError::Config("npts must be at least 1".into()));
        }
        for (name, r) in [("r-from", self.r_from), ("r-to", self.r_to)] {
            if let Some(r) = r {
                finite(name, r)?;
            }
        }
        if self.samples < 2 {
            return Err(CliError::Config("samples must be at least 2".into()));
        }
        finite("from", self.from)?;
        finite("to", self.to)?;
        Ok(())
    }

    pub fn omegas_or(&self, default: &[f64]) -> Vec<f64> {
        if self.omegas.is_empty() {
            default.to_vec()
        } else {
            self.omegas.clone()
        }
    }

    pub fn ms_or(&self, default: &[i32]) -> Vec<i32> {
        if self.ms.is_empty() {
            default.to_vec()
        } else {
            self.ms.clone()
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or parameters outside a model's domain.
    Config(String),
    /// A solver failed to converge or produced inconsistent results.
    Numerical(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "invalid configuration: {m}"),
            CliError::Numerical(m) => write!(f, "numerical failure: {m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NoConvergence { .. }
            | CoreError::NonMonotoneRefinement(_)
            | CoreError::NonFinitePotential { .. } => CliError::Numerical(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}
