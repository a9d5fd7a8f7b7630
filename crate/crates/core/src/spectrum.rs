//! Closed-form bound states of the geometry-induced Coulomb problem.
//!
//! With `xi = omega k m > 0` and `N = n + |m| + 1/2`, the regular solution of
//!
//! ```text
//! -hbar^2/(2 mu) f'' + V(r) f = E f
//! ```
//!
//! is `f(r) = C_n r^(1/2 + |m|) exp(-rho r) 1F1(-n; 1 + 2|m|; 2 rho r)` with
//! `rho = xi / N`, and its eigenvalue is
//! `E = hbar^2/(2 mu) [(1 + omega^2) k^2 - rho^2]`.
//!
//! Two sign conventions are exposed. [`energy_physical`] is the eigenvalue of
//! the expanded operator (the one the finite-difference solver
//! discretizes). [`energy_paper`] is the published closed form, which is
//! exactly its negative:
//!
//! ```text
//! 4 m^2 + (1 + 2n)(1 + omega^2)(1 + 2n + 4|m|) = (1 + omega^2)(2N)^2 - 4 m^2 omega^2
//! ```

use crate::error::{domain, Error, Result};
use crate::potentials::{threshold_energy, ModelParams};
use crate::specfun::{bessel_j, bessel_y, gauss_laguerre, PolynomialCoefficients};

const MIN_QUADRATURE_POINTS: usize = 64;

/// Parameters of the confluent hypergeometric solution for one level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombParameters {
    pub n: u32,
    /// `n + |m| + 1/2`.
    pub big_n: f64,
    /// Decay constant, 1/m.
    pub rho: f64,
    /// First 1F1 parameter; equals `-n` on a bound state.
    pub a: f64,
    /// Second 1F1 parameter, `1 + 2|m|`.
    pub b: f64,
}

fn abs_m(p: &ModelParams) -> f64 {
    f64::from(p.m.unsigned_abs())
}

fn require_bound(p: &ModelParams) -> Result<()> {
    p.validate()?;
    if p.binds() {
        Ok(())
    } else {
        Err(Error::NoBoundState {
            coupling: p.coupling(),
            m: p.m,
        })
    }
}

pub fn coulomb_parameters(n: u32, p: &ModelParams) -> Result<CoulombParameters> {
    require_bound(p)?;
    let big_n = f64::from(n) + abs_m(p) + 0.5;
    let rho = p.coupling() / big_n;
    Ok(CoulombParameters {
        n,
        big_n,
        rho,
        a: 0.5 + abs_m(p) - p.coupling() / rho,
        b: 1.0 + 2.0 * abs_m(p),
    })
}

/// Published spectrum formula, evaluated verbatim (J). Total: no
/// existence check is made.
pub fn energy_paper(n: u32, p: &ModelParams) -> f64 {
    let m = abs_m(p);
    let nn = 1.0 + 2.0 * f64::from(n);
    let w2 = 1.0 + p.omega * p.omega;
    let num = 4.0 * m * m + nn * w2 * (nn + 4.0 * m);
    let den = (nn + 2.0 * m) * (nn + 2.0 * m);
    -p.prefactor() * p.k * p.k * num / den
}

/// Eigenvalue of the physical radial operator (J), from the quantization
/// condition.
pub fn energy_physical(n: u32, p: &ModelParams) -> Result<f64> {
    let cp = coulomb_parameters(n, p)?;
    Ok(energy_from_rho(cp.rho, p))
}

/// Inverts `rho^2 = (1 + omega^2) k^2 - 2 mu E / hbar^2`.
pub fn energy_from_rho(rho: f64, p: &ModelParams) -> f64 {
    p.prefactor() * ((1.0 + p.omega * p.omega) * p.k * p.k - rho * rho)
}

/// Large-`n` expansion of [`energy_paper`], accurate to `O(1/n^3)`.
pub fn asymptotic_energy(n: u32, p: &ModelParams) -> Result<f64> {
    if n == 0 {
        return Err(domain("asymptotic expansion needs n >= 1"));
    }
    let c = p.prefactor() * p.k * p.k;
    let m = f64::from(p.m);
    let nf = f64::from(n);
    Ok(-c * (1.0 + p.omega * p.omega) + c * p.omega * p.omega * m * m / (nf * nf))
}

/// `I = int_0^inf t^(1+2|m|) e^-t [1F1(-n; b; t)]^2 dt` by Gauss-Laguerre.
fn scaled_norm_integral(cp: &CoulombParameters, m: f64) -> Result<f64> {
    let poly = PolynomialCoefficients::confluent(cp.n, cp.b)?;
    let degree = 1 + 2 * m as usize + 2 * cp.n as usize;
    let npts = MIN_QUADRATURE_POINTS.max(degree / 2 + 1);
    let (nodes, weights) = gauss_laguerre(npts)?;
    let power = 1.0 + 2.0 * m;
    Ok(nodes
        .iter()
        .zip(&weights)
        .map(|(&t, &w)| {
            let v = poly.eval(t);
            w * t.powf(power) * v * v
        })
        .sum())
}

/// A normalized bound state of the torsion-only model.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundState {
    pub n: u32,
    pub m: i32,
    /// J.
    pub energy_physical: f64,
    /// J; always `-energy_physical`.
    pub energy_paper: f64,
    pub params: CoulombParameters,
    /// `C_n`, in m^-(1 + |m|).
    pub norm_const: f64,
    /// Dimensionless normalization in the scaled variable `t = 2 rho r`.
    scaled_norm: f64,
    poly: PolynomialCoefficients,
}

impl BoundState {
    pub fn new(n: u32, p: &ModelParams) -> Result<Self> {
        let params = coulomb_parameters(n, p)?;
        let m = abs_m(p);
        let scaled_norm = scaled_norm_integral(&params, m)?.sqrt().recip();
        let two_rho = 2.0 * params.rho;
        let energy_physical = energy_from_rho(params.rho, p);
        Ok(Self {
            n,
            m: p.m,
            energy_physical,
            energy_paper: energy_paper(n, p),
            params,
            norm_const: scaled_norm * two_rho.powf(1.0 + m),
            scaled_norm,
            poly: PolynomialCoefficients::confluent(n, params.b)?,
        })
    }

    /// `f(r)`, normalized so that `int f^2 dr = 1`.
    pub fn eval(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        let two_rho = 2.0 * self.params.rho;
        let t = two_rho * r;
        let m = f64::from(self.m.unsigned_abs());
        let envelope = ((0.5 + m) * t.ln() - 0.5 * t).exp();
        self.scaled_norm * two_rho.sqrt() * envelope * self.poly.eval(t)
    }

    /// `f` sampled at each radius.
    pub fn profile(&self, radii: &[f64]) -> Vec<f64> {
        radii.iter().map(|&r| self.eval(r)).collect()
    }

    /// Fraction of probability beyond `r`, from the exact incomplete-gamma
    /// expansion of the polynomial-times-exponential integrand.
    pub fn tail_probability(&self, r: f64) -> f64 {
        let t_end = 2.0 * self.params.rho * r;
        let m = self.m.unsigned_abs() as usize;
        let c = self.poly.coeffs();
        // t^(1+2|m|) P(t)^2 as a coefficient list.
        let mut integrand = vec![0.0; 1 + 2 * m + 2 * self.poly.degree() + 1];
        for (i, ci) in c.iter().enumerate() {
            for (j, cj) in c.iter().enumerate() {
                integrand[1 + 2 * m + i + j] += ci * cj;
            }
        }
        let tail: f64 = integrand
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(j, c)| c * upper_gamma_integer(j, t_end))
            .sum();
        (tail * self.scaled_norm * self.scaled_norm).clamp(0.0, 1.0)
    }
}

/// `Gamma(j + 1, x) = j! e^-x sum_{i<=j} x^i / i!`.
fn upper_gamma_integer(j: usize, x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for i in 1..=j {
        term *= x / i as f64;
        sum += term;
    }
    let fact: f64 = (1..=j).map(|i| i as f64).product();
    fact * (-x).exp() * sum
}

pub fn normalization_constant(n: u32, p: &ModelParams) -> Result<f64> {
    Ok(BoundState::new(n, p)?.norm_const)
}

pub fn radial_wavefunction(n: u32, p: &ModelParams, r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(domain(format!("radius must be >= 0, got {r}")));
    }
    Ok(BoundState::new(n, p)?.eval(r))
}

/// Count sign changes of `values`, ignoring exact zeros.
pub fn count_sign_changes(values: &[f64]) -> usize {
    let mut last = 0.0_f64;
    let mut count = 0;
    for &v in values {
        if v != 0.0 {
            if last != 0.0 && (v > 0.0) != (last > 0.0) {
                count += 1;
            }
            last = v;
        }
    }
    count
}

/// Sampled `P(r) = f(r)^2` with diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityProfile {
    pub radii: Vec<f64>,
    pub density: Vec<f64>,
    /// Radius of the largest sample.
    pub peak_r: f64,
    /// Trapezoid integral over the samples.
    pub integral: f64,
    /// Exact probability lying beyond the last sample.
    pub missing_mass: f64,
    /// Set when `missing_mass` exceeds 1e-4.
    pub truncated: bool,
}

pub const TRUNCATION_TOLERANCE: f64 = 1e-4;

pub fn probability_density(n: u32, p: &ModelParams, radii: &[f64]) -> Result<DensityProfile> {
    if radii.is_empty() {
        return Err(domain("density grid is empty"));
    }
    if radii.windows(2).any(|w| !(w[1] > w[0])) || radii[0] < 0.0 {
        return Err(domain("density grid must be nonnegative and strictly increasing"));
    }
    let state = BoundState::new(n, p)?;
    let density: Vec<f64> = radii.iter().map(|&r| state.eval(r).powi(2)).collect();
    let integral = radii
        .windows(2)
        .zip(density.windows(2))
        .map(|(r, d)| 0.5 * (r[1] - r[0]) * (d[0] + d[1]))
        .sum();
    let (peak_idx, _) = density.iter().enumerate().fold(
        (0, f64::NEG_INFINITY),
        |best, (i, &d)| if d > best.1 { (i, d) } else { best },
    );
    let missing_mass = state.tail_probability(*radii.last().unwrap());
    Ok(DensityProfile {
        radii: radii.to_vec(),
        density,
        peak_r: radii[peak_idx],
        integral,
        missing_mass,
        truncated: missing_mass > TRUNCATION_TOLERANCE,
    })
}

/// Whether level `n` lies strictly between the well bottom and the threshold.
pub fn is_inside_well(n: u32, p: &ModelParams) -> Result<bool> {
    let e = energy_physical(n, p)?;
    let (_, v_star) = crate::potentials::potential_minimum(p)?;
    Ok(v_star < e && e < threshold_energy(p))
}

/// Torsion-free continuum solution `psi(r) = A J_|m|(q r) + B Y_|m|(q r)`
/// with `q = sqrt(2 mu E / hbar^2 - k^2)`.
pub fn free_radial_solution(m: i32, q: f64, r: f64, coeffs: (f64, f64)) -> Result<f64> {
    if !(q > 0.0) {
        return Err(domain(format!("q = {q} is not positive: evanescent regime")));
    }
    if !(r > 0.0) {
        return Err(domain(format!("radius must be positive, got {r}")));
    }
    let order = m.unsigned_abs();
    let (a, b) = coeffs;
    let mut value = a * bessel_j(order, q * r)?;
    if b != 0.0 {
        value += b * bessel_y(order, q * r)?;
    }
    Ok(value)
}

/// The same solution for the reduced function `f = sqrt(r) psi`, which obeys
/// `f'' + [q^2 - (m^2 - 1/4)/r^2] f = 0`.
pub fn free_reduced_solution(m: i32, q: f64, r: f64, coeffs: (f64, f64)) -> Result<f64> {
    Ok(r.sqrt() * free_radial_solution(m, q, r, coeffs)?)
}
