//! The helically twisted metric
//!
//! ```text
//! ds^2 = dr^2 + r^2 dphi^2 + (dz + omega r dphi)^2
//! ```
//!
//! in coordinates ordered `(r, phi, z)`, together with a discrete check that
//! the separated radial operator is the full Laplace-Beltrami operator acting
//! on `exp(i m phi) exp(i k z) psi(r)`.

use crate::error::{domain, Result};

/// A symmetric 3x3 matrix indexed `(r, phi, z)`.
pub type Matrix3 = [[f64; 3]; 3];

/// Helical metric with torsion `omega`. Negative torsion is allowed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HelicalMetric {
    pub omega: f64,
}

impl HelicalMetric {
    pub fn new(omega: f64) -> Self {
        Self { omega }
    }

    pub fn covariant(&self, r: f64) -> Result<Matrix3> {
        metric_tensor(r, self.omega)
    }

    pub fn contravariant(&self, r: f64) -> Result<Matrix3> {
        inverse_metric(r, self.omega)
    }

    /// `sqrt(det g) = r`.
    pub fn volume_factor(&self, r: f64) -> Result<f64> {
        check_radius(r)?;
        Ok(r)
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("radius must be positive and finite, got {r}")))
    }
}

/// Covariant metric `g_ij` at radius `r`.
pub fn metric_tensor(r: f64, omega: f64) -> Result<Matrix3> {
    check_radius(r)?;
    let w = omega * r;
    Ok([[1.0, 0.0, 0.0], [0.0, r * r * (1.0 + omega * omega), w], [0.0, w, 1.0]])
}

/// Contravariant metric `g^ij` at radius `r`.
pub fn inverse_metric(r: f64, omega: f64) -> Result<Matrix3> {
    check_radius(r)?;
    let c = -omega / r;
    Ok([[1.0, 0.0, 0.0], [0.0, 1.0 / (r * r), c], [0.0, c, 1.0 + omega * omega]])
}

pub fn determinant(a: &Matrix3) -> f64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

pub fn mat_mul(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).map(|l| a[i][l] * b[l][j]).sum();
        }
    }
    out
}

/// Samples of a radial function on the uniform mesh `r_i = r0 + i h`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledRadial<'a> {
    pub r0: f64,
    pub h: f64,
    pub values: &'a [f64],
}

impl SampledRadial<'_> {
    fn radius(&self, i: usize) -> f64 {
        self.r0 + i as f64 * self.h
    }
}

/// Relative max-norm mismatch between the Laplace-Beltrami operator and the
/// separated radial operator.
///
/// Route (a) assembles `(1/sqrt g) d_i (sqrt g g^ij d_j)` term by term from
/// [`inverse_metric`], with `d_phi -> i m`, `d_z -> i k` and the radial
/// derivative in conservative (half-point flux) form. Route (b) is the
/// expanded radial equation
/// `R'' + R'/r - m^2 R / r^2 + 2 omega k m R / r - (1 + omega^2) k^2 R`
/// with plain central differences. Both are compared at interior nodes; the
/// imaginary part of route (a) must vanish on its own.
///
/// The result is divided by the max-norm of route (b) so that it is
/// meaningful for SI-scale wavenumbers.
pub fn radial_reduction_residual(psi: &SampledRadial<'_>, m: i32, k: f64, omega: f64) -> Result<f64> {
    let n = psi.values.len();
    if n < 5 {
        return Err(domain(format!("need at least 5 grid points, got {n}")));
    }
    if !(psi.h > 0.0) || !(psi.r0 > 0.0) {
        return Err(domain("grid must start at r > 0 with positive spacing"));
    }
    if !k.is_finite() || !omega.is_finite() {
        return Err(domain("k and omega must be finite"));
    }
    let metric = HelicalMetric::new(omega);
    let h = psi.h;
    let f = psi.values;
    // Angular wavenumbers; index 0 (radial) is handled by differences.
    let q = [0.0, f64::from(m), k];

    let mut max_diff: f64 = 0.0;
    let mut max_ref: f64 = 0.0;
    for i in 1..n - 1 {
        let r = psi.radius(i);
        let (rm, rp) = (r - 0.5 * h, r + 0.5 * h);
        let g = metric.contravariant(r)?;
        let gm = metric.contravariant(rm)?;
        let gp = metric.contravariant(rp)?;
        let sg = metric.volume_factor(r)?;
        let (sgm, sgp) = (metric.volume_factor(rm)?, metric.volume_factor(rp)?);
        let df = (f[i + 1] - f[i - 1]) / (2.0 * h);

        let mut re = (sgp * gp[0][0] * (f[i + 1] - f[i]) - sgm * gm[0][0] * (f[i] - f[i - 1])) / (h * h * sg);
        let mut im = 0.0;
        for j in 1..3 {
            // (1/sqrt g) d_r (sqrt g g^{rj} (i q_j) f)
            let gl = metric.contravariant(psi.radius(i - 1))?;
            let gr = metric.contravariant(psi.radius(i + 1))?;
            let flux_l = metric.volume_factor(psi.radius(i - 1))? * gl[0][j] * f[i - 1];
            let flux_r = metric.volume_factor(psi.radius(i + 1))? * gr[0][j] * f[i + 1];
            im += q[j] * (flux_r - flux_l) / (2.0 * h * sg);
            // (i q_j) g^{jr} d_r f
            im += q[j] * g[j][0] * df;
            for l in 1..3 {
                re -= q[j] * q[l] * g[j][l] * f[i];
            }
        }

        let m2 = f64::from(m) * f64::from(m);
        let d2f = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);
        let separated = d2f + df / r - m2 / (r * r) * f[i] + 2.0 * omega * k * f64::from(m) / r * f[i]
            - (1.0 + omega * omega) * k * k * f[i];

        max_diff = max_diff.max((re - separated).abs()).max(im.abs());
        max_ref = max_ref.max(separated.abs());
    }
    Ok(if max_ref > 0.0 { max_diff / max_ref } else { max_diff })
}
