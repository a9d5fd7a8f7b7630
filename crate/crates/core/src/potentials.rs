//! Effective radial potentials for the reduced function `f = sqrt(r) psi`.
//!
//! Sign convention: the potentials are written in the expanded, physical
//! form
//!
//! ```text
//! V(r) = hbar^2/(2 mu) [ (m^2 - 1/4)/r^2 - 2 omega k m / r + (1 + omega^2) k^2 ]
//! ```
//!
//! so that `V -> +hbar^2 k^2 (1 + omega^2) / (2 mu)` as `r -> inf`. The
//! oscillator model adds `mu omega0^2 r^2 / 2`. Everything is in joules.

use crate::constants::{kinetic_prefactor, ELECTRON_MASS, HBAR};
use crate::error::{domain, Error, Result};

/// Torsion, longitudinal wavenumber, azimuthal number and effective mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Dimensionless torsion.
    pub omega: f64,
    /// Longitudinal wavenumber, 1/m.
    pub k: f64,
    pub m: i32,
    /// Effective mass, kg.
    pub mu: f64,
}

impl ModelParams {
    /// Parameters with the electron mass.
    pub fn new(omega: f64, k: f64, m: i32) -> Self {
        Self {
            omega,
            k,
            m,
            mu: ELECTRON_MASS,
        }
    }

    pub fn with_mass(mut self, mu: f64) -> Self {
        self.mu = mu;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mu > 0.0) || !self.mu.is_finite() {
            return Err(domain(format!("mass must be positive and finite, got {}", self.mu)));
        }
        if !self.omega.is_finite() || !self.k.is_finite() {
            return Err(domain("omega and k must be finite"));
        }
        Ok(())
    }

    /// `omega k m`, the strength of the geometric 1/r term (1/m).
    pub fn coupling(&self) -> f64 {
        self.omega * self.k * f64::from(self.m)
    }

    /// Whether the 1/r term is attractive and a centrifugal barrier exists.
    pub fn binds(&self) -> bool {
        self.coupling() > 0.0 && self.m != 0
    }

    pub(crate) fn prefactor(&self) -> f64 {
        kinetic_prefactor(self.mu)
    }

    fn bracket(&self, r: f64) -> f64 {
        let m = f64::from(self.m);
        (m * m - 0.25) / (r * r) - 2.0 * self.coupling() / r + (1.0 + self.omega * self.omega) * self.k * self.k
    }
}

/// The Coulomb-like model plus an isotropic harmonic confinement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorModel {
    pub base: ModelParams,
    /// Oscillator angular frequency, rad/s.
    pub omega0: f64,
}

impl OscillatorModel {
    pub fn new(base: ModelParams, omega0: f64) -> Self {
        Self { base, omega0 }
    }

    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        if !self.omega0.is_finite() {
            return Err(domain("oscillator frequency must be finite"));
        }
        Ok(())
    }

    /// `|mu omega0 / hbar|`, 1/m^2.
    pub fn inverse_square_length(&self) -> f64 {
        (self.base.mu * self.omega0 / HBAR).abs()
    }

    /// `sqrt(hbar / (mu omega0))`, m.
    pub fn oscillator_length(&self) -> f64 {
        self.inverse_square_length().sqrt().recip()
    }
}

/// Derived parameters of the oscillator radial equation
/// `R'' + [Lambda^2 - Omega^2 r^2 - iota^2/r^2 + 2 xi / r] R = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorParams {
    pub base: ModelParams,
    pub omega0: f64,
    /// Omega, 1/m^2.
    pub big_omega: f64,
    /// sqrt(m^2 - 1/4), dimensionless.
    pub iota: f64,
    /// m omega k, 1/m.
    pub xi: f64,
    /// sqrt(2 mu E / hbar^2 - (1 + omega^2) k^2), 1/m; `None` when the
    /// radicand is negative.
    pub lambda: Option<f64>,
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("radius must be positive and finite, got {r}")))
    }
}

/// Effective potential of the torsion-only model, J.
pub fn v_eff_coulomb(r: f64, p: &ModelParams) -> Result<f64> {
    check_radius(r)?;
    p.validate()?;
    Ok(p.prefactor() * p.bracket(r))
}

/// `lim_{r->inf} V(r) = hbar^2 k^2 (1 + omega^2) / (2 mu)`, J.
pub fn threshold_energy(p: &ModelParams) -> f64 {
    p.prefactor() * p.k * p.k * (1.0 + p.omega * p.omega)
}

/// Location and depth `(r*, V(r*))` of the attractive well.
pub fn potential_minimum(p: &ModelParams) -> Result<(f64, f64)> {
    p.validate()?;
    if p.m == 0 {
        return Err(Error::NoWell("m = 0 has no centrifugal barrier".into()));
    }
    let xi = p.coupling();
    if !(xi > 0.0) {
        return Err(Error::NoWell(format!("omega*k*m = {xi:e} is not attractive")));
    }
    let m = f64::from(p.m);
    let barrier = m * m - 0.25;
    let r_star = barrier / xi;
    let v_star = p.prefactor() * ((1.0 + p.omega * p.omega) * p.k * p.k - xi * xi / barrier);
    Ok((r_star, v_star))
}

/// Effective potential with harmonic confinement, J.
pub fn v_eff_oscillator(r: f64, p: &OscillatorModel) -> Result<f64> {
    check_radius(r)?;
    p.validate()?;
    let w = p.inverse_square_length();
    Ok(p.base.prefactor() * (p.base.bracket(r) + w * w * r * r))
}

/// Fills Omega, iota, xi and Lambda at energy `energy` (J).
pub fn oscillator_parameters(p: &ModelParams, omega0: f64, energy: f64) -> Result<OscillatorParams> {
    let model = OscillatorModel::new(*p, omega0);
    model.validate()?;
    if p.m == 0 {
        return Err(domain("iota is undefined for m = 0 (iota^2 = -1/4)"));
    }
    let m = f64::from(p.m);
    let radicand = 2.0 * p.mu * energy / (HBAR * HBAR) - (1.0 + p.omega * p.omega) * p.k * p.k;
    Ok(OscillatorParams {
        base: *p,
        omega0,
        big_omega: model.inverse_square_length(),
        iota: (m * m - 0.25).sqrt(),
        xi: p.coupling(),
        lambda: (radicand >= 0.0).then(|| radicand.sqrt()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{joules_to_ev, unit_energy};
    use proptest::prelude::*;
    use std::f64::consts::PI;

    const K: f64 = 5e9;

    #[test]
    fn coulomb_spot_value() {
        let p = ModelParams::new(2.0, K, 1);
        let v = joules_to_ev(v_eff_coulomb(1.5e-10, &p).unwrap());
        assert!((v - 0.95253).abs() < 1e-4);
        let unit = unit_energy(K, p.mu).unwrap();
        assert!((v_eff_coulomb(1.5e-10, &p).unwrap() - unit).abs() < 1e-12 * unit);
    }

    #[test]
    fn flat_space_is_pure_centrifugal() {
        let p = ModelParams::new(0.0, 0.0, 1);
        let mut last = f64::INFINITY;
        for i in 1..200 {
            let r = i as f64 * 1e-11;
            let v = v_eff_coulomb(r, &p).unwrap();
            assert!(v > 0.0 && v < last);
            assert!((v - p.prefactor() * 0.75 / (r * r)).abs() <= 1e-15 * v);
            last = v;
        }
        assert!(potential_minimum(&p).is_err());
    }

    #[test]
    fn thresholds() {
        let t0 = joules_to_ev(threshold_energy(&ModelParams::new(0.0, K, 1)));
        assert!((t0 - 0.952_495_5).abs() < 1e-5);
        let t2 = joules_to_ev(threshold_energy(&ModelParams::new(2.0, K, 1)));
        assert!((t2 - 4.762_477_6).abs() < 5e-5);
        assert_eq!(threshold_energy(&ModelParams::new(2.0, 0.0, 1)), 0.0);
    }

    #[test]
    fn approaches_threshold() {
        let p = ModelParams::new(0.7, K, 2);
        let vinf = threshold_energy(&p);
        let v = v_eff_coulomb(1e-3, &p).unwrap();
        assert!((v - vinf).abs() < 1e-6 * vinf);
    }

    #[test]
    fn well_location_and_depth() {
        let (r, v) = potential_minimum(&ModelParams::new(2.0, K, 1)).unwrap();
        assert!((r - 7.5e-11).abs() < 1e-22);
        assert!((joules_to_ev(v) + 0.31751).abs() < 1e-4);
        let (r, _) = potential_minimum(&ModelParams::new(0.5, K, 1)).unwrap();
        assert!((r - 3.0e-10).abs() < 1e-21);
        assert!(matches!(
            potential_minimum(&ModelParams::new(2.0, K, -1)),
            Err(Error::NoWell(_))
        ));
        assert!(matches!(
            potential_minimum(&ModelParams::new(2.0, K, 0)),
            Err(Error::NoWell(_))
        ));
    }

    #[test]
    fn rejects_bad_radius() {
        let p = ModelParams::new(1.0, K, 1);
        assert!(v_eff_coulomb(0.0, &p).is_err());
        assert!(v_eff_oscillator(-1e-10, &OscillatorModel::new(p, 1e15)).is_err());
    }

    #[test]
    fn oscillator_harmonic_part() {
        let omega0 = 2.0 * PI * 5e14;
        let flat = ModelParams::new(0.0, 0.0, 1);
        let model = OscillatorModel::new(flat, omega0);
        let r = (HBAR / (flat.mu * omega0)).sqrt();
        let harmonic = v_eff_oscillator(r, &model).unwrap() - v_eff_coulomb(r, &flat).unwrap();
        assert!((joules_to_ev(harmonic) - 1.0340).abs() < 1e-3);
        assert!((harmonic - HBAR * omega0 / 2.0).abs() < 1e-12 * harmonic);
        // Quadratic growth at large r.
        let ratio = v_eff_oscillator(2e-6, &model).unwrap() / v_eff_oscillator(1e-6, &model).unwrap();
        assert!((ratio - 4.0).abs() < 1e-6);
    }

    #[test]
    fn oscillator_parameter_values() {
        let omega0 = 2.0 * PI * 5e14;
        let q = oscillator_parameters(&ModelParams::new(5.0, 1e9, 1), omega0, 0.0).unwrap();
        assert!((q.iota - 0.866_025_4).abs() < 1e-7);
        assert_eq!(q.xi, 5e9);
        assert!((q.big_omega - 2.713_705e19).abs() < 1e15);
        assert_eq!(q.lambda, None);
        let e = threshold_energy(&q.base) + 1e-19;
        let q = oscillator_parameters(&q.base, omega0, e).unwrap();
        assert!(q.lambda.unwrap() > 0.0);
        assert!(oscillator_parameters(&ModelParams::new(5.0, 1e9, 0), omega0, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn sign_symmetry(r in 1e-11f64..1e-8, omega in -5.0f64..5.0, m in -6i32..=6, k in -1e10f64..1e10) {
            let a = v_eff_coulomb(r, &ModelParams::new(omega, k, m)).unwrap();
            let b = v_eff_coulomb(r, &ModelParams::new(-omega, k, -m)).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn tail_bound(r in 1e-9f64..1e-6, omega in -5.0f64..5.0, m in -6i32..=6) {
            let p = ModelParams::new(omega, K, m);
            let mf = f64::from(m);
            // |V - Vinf| <= C / r for r >= 1 nm.
            let c = p.prefactor() * ((mf * mf - 0.25).abs() / 1e-9 + 2.0 * p.coupling().abs());
            let d = (v_eff_coulomb(r, &p).unwrap() - threshold_energy(&p)).abs();
            prop_assert!(d <= c / r * (1.0 + 1e-12));
        }

        #[test]
        fn well_lies_below_threshold(omega in 0.01f64..10.0, m in 1i32..8, k in 1e8f64..1e10) {
            let p = ModelParams::new(omega, k, m);
            let (r, v) = potential_minimum(&p).unwrap();
            prop_assert!(v < threshold_energy(&p));
            let vr = v_eff_coulomb(r, &p).unwrap();
            prop_assert!((vr - v).abs() <= 1e-9 * v.abs().max(threshold_energy(&p)));
            prop_assert!(v_eff_coulomb(r * 1.01, &p).unwrap() >= vr);
            prop_assert!(v_eff_coulomb(r * 0.99, &p).unwrap() >= vr);
        }

        #[test]
        fn oscillator_minus_coulomb(r in 1e-11f64..1e-8, omega in -5.0f64..5.0, m in -4i32..=4, w0 in 1e12f64..1e16) {
            let p = ModelParams::new(omega, 1e9, m);
            let d = v_eff_oscillator(r, &OscillatorModel::new(p, w0)).unwrap() - v_eff_coulomb(r, &p).unwrap();
            let expect = 0.5 * p.mu * w0 * w0 * r * r;
            let scale = v_eff_oscillator(r, &OscillatorModel::new(p, w0)).unwrap().abs().max(expect);
            prop_assert!((d - expect).abs() <= 1e-12 * scale);
        }
    }
}
