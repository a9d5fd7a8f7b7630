use super::grid::RadialGrid;
use crate::constants::kinetic_prefactor;
use crate::error::{domain, Error, Result};

/// Symmetric tridiagonal matrix (J) with the mesh spacing it was built on.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
    spacing: f64,
}

impl TridiagonalOperator {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>, spacing: f64) -> Result<Self> {
        if diag.is_empty() || offdiag.len() + 1 != diag.len() {
            return Err(domain(format!(
                "off-diagonal length {} does not match diagonal length {}",
                offdiag.len(),
                diag.len()
            )));
        }
        if !(spacing > 0.0) {
            return Err(domain("spacing must be positive"));
        }
        Ok(Self { diag, offdiag, spacing })
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// `max |diag|`, the reference magnitude for tolerances.
    pub fn scale(&self) -> f64 {
        self.diag
            .iter()
            .fold(0.0_f64, |a, d| a.max(d.abs()))
            .max(f64::MIN_POSITIVE)
    }

    /// Gershgorin interval enclosing the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.offdiag[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below `x` (LDL^T Sturm count).
    pub fn sturm_count(&self, x: f64) -> usize {
        let guard = f64::EPSILON * self.scale();
        let mut count = 0;
        let mut q = self.diag[0] - x;
        for i in 0.. {
            if q == 0.0 {
                q = -guard;
            }
            if q < 0.0 {
                count += 1;
            }
            if i + 1 == self.len() {
                break;
            }
            let e = self.offdiag[i];
            q = (self.diag[i + 1] - x) - e * e / q;
        }
        count
    }

    /// `y = (T - shift) x`.
    pub fn apply_shifted(&self, x: &[f64], shift: f64) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut y = (self.diag[i] - shift) * x[i];
                if i > 0 {
                    y += self.offdiag[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    y += self.offdiag[i] * x[i + 1];
                }
                y
            })
            .collect()
    }
}

/// Three-point kinetic stencil plus the potential on the diagonal:
/// `diag_i = hbar^2/(mu h^2) + V(r_i)`, `offdiag_i = -hbar^2/(2 mu h^2)`.
pub fn assemble(potential: impl Fn(f64) -> f64, grid: &RadialGrid, mu: f64) -> Result<TridiagonalOperator> {
    if !(mu > 0.0) || !mu.is_finite() {
        return Err(domain(format!("mass must be positive, got {mu}")));
    }
    let h = grid.spacing();
    let t = kinetic_prefactor(mu) / (h * h);
    let diag = (0..grid.npts())
        .map(|i| {
            let r = grid.node(i);
            let v = potential(r);
            if v.is_finite() {
                Ok(2.0 * t + v)
            } else {
                Err(Error::NonFinitePotential { index: i, r })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let offdiag = vec![-t; grid.npts() - 1];
    TridiagonalOperator::new(diag, offdiag, h)
}
