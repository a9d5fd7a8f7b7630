use super::eigen::{eigenvalues_below, eigenvector_orthogonal_to};
use super::grid::RadialGrid;
use super::operator::{assemble, TridiagonalOperator};
use crate::constants::joules_to_ev;
use crate::error::{Error, Result};
use crate::potentials::{threshold_energy, v_eff_coulomb, v_eff_oscillator, ModelParams, OscillatorModel};

/// Mesh points required per characteristic length (`1/rho` or the
/// oscillator length).
pub const POINTS_PER_LENGTH: f64 = 50.0;

/// Fallback domain for torsion-free or repulsive Coulomb problems.
const DEFAULT_R_MAX: f64 = 12e-9;

/// Which radial problem to discretize.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Model {
    Coulomb(ModelParams),
    Oscillator(OscillatorModel),
}

impl Model {
    pub fn params(&self) -> &ModelParams {
        match self {
            Model::Coulomb(p) => p,
            Model::Oscillator(o) => &o.base,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Model::Coulomb(p) => p.validate(),
            Model::Oscillator(o) => o.validate(),
        }
    }

    pub fn potential(&self, r: f64) -> f64 {
        match self {
            Model::Coulomb(p) => v_eff_coulomb(r, p),
            Model::Oscillator(o) => v_eff_oscillator(r, o),
        }
        .unwrap_or(f64::NAN)
    }

    /// `1/rho` of the most compact Coulomb level, if the 1/r term binds.
    fn coulomb_length(&self) -> Option<f64> {
        let p = self.params();
        p.binds().then(|| (f64::from(p.m.unsigned_abs()) + 0.5) / p.coupling())
    }

    fn oscillator_length(&self) -> Option<f64> {
        match self {
            Model::Oscillator(o) if o.omega0 != 0.0 => Some(o.oscillator_length()),
            _ => None,
        }
    }

    /// The length the mesh has to resolve: the shorter of the Coulomb and
    /// oscillator scales when both are present.
    pub fn resolution_length(&self) -> Option<f64> {
        match (self.coulomb_length(), self.oscillator_length()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    /// Eigenvalues are sought strictly below this energy (J).
    fn upper_bound(&self) -> Option<f64> {
        match self {
            Model::Coulomb(p) => Some(threshold_energy(p)),
            Model::Oscillator(_) => None,
        }
    }

    /// Domain for the lowest `count` levels. The harmonic term confines
    /// whenever it is present, so the oscillator length sets the box
    /// (`max(10, 3 sqrt(2 count + |m| + 1))` lengths, well past the outermost
    /// classical turning point); otherwise `12 / rho_min`.
    pub fn default_r_max(&self, count: usize) -> f64 {
        let p = self.params();
        let m = f64::from(p.m.unsigned_abs());
        if let Some(l) = self.oscillator_length() {
            return l * 10f64.max(3.0 * (2.0 * count.max(1) as f64 + m + 1.0).sqrt());
        }
        if p.binds() {
            let rho_min = p.coupling() / ((count.max(1) - 1) as f64 + m + 0.5);
            12.0 / rho_min
        } else {
            DEFAULT_R_MAX
        }
    }

    /// A mesh over [`Model::default_r_max`] with `points_per_length` points
    /// per resolution length (at least [`POINTS_PER_LENGTH`]).
    pub fn default_grid(&self, count: usize, points_per_length: f64) -> Result<RadialGrid> {
        let r_max = self.default_r_max(count);
        let density = points_per_length.max(POINTS_PER_LENGTH);
        let npts = match self.resolution_length() {
            Some(l) => (r_max / l * density).ceil() as usize,
            None => 2000,
        };
        RadialGrid::new(r_max, npts.max(16))
    }

    pub fn assemble(&self, grid: &RadialGrid) -> Result<TridiagonalOperator> {
        self.validate()?;
        assemble(|r| self.potential(r), grid, self.params().mu)
    }
}

/// One eigenvalue (J) with its eigenvector on the mesh, `sum v^2 h = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenpair {
    pub energy: f64,
    pub vector: Vec<f64>,
}

impl Eigenpair {
    pub fn energy_ev(&self) -> f64 {
        joules_to_ev(self.energy)
    }
}

/// Refuses meshes coarser than `length / POINTS_PER_LENGTH`.
pub fn check_resolution(model: &Model, grid: &RadialGrid) -> Result<()> {
    if let Some(length) = model.resolution_length() {
        let required = length / POINTS_PER_LENGTH;
        if grid.spacing() > required {
            return Err(Error::UnderResolved {
                spacing: grid.spacing(),
                required,
                suggested_npts: (grid.r_max() / required).ceil() as usize,
            });
        }
    }
    Ok(())
}

/// Lowest eigenpairs of the discretized model.
///
/// The Coulomb model returns only levels strictly below the threshold
/// (possibly none); the oscillator returns the lowest `count`.
pub fn solve_bound_states(model: &Model, grid: &RadialGrid, count: usize) -> Result<Vec<Eigenpair>> {
    check_resolution(model, grid)?;
    let op = model.assemble(grid)?;
    let bound = model.upper_bound().unwrap_or_else(|| {
        let (_, hi) = op.gershgorin();
        hi + 1.0 + hi.abs()
    });
    let set = eigenvalues_below(&op, bound, count.max(1))?;
    let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(set.values.len());
    for &energy in set.values.iter().take(count) {
        let v = eigenvector_orthogonal_to(&op, energy, &vectors)?;
        vectors.push(v);
    }
    Ok(set
        .values
        .into_iter()
        .zip(vectors)
        .map(|(energy, vector)| Eigenpair { energy, vector })
        .collect())
}
