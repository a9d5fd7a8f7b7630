//! Pinned physical constants (CODATA 2018) and unit conversions.
//!
//! All library arithmetic is SI. Electron-volts appear only where results
//! leave the library.

use crate::error::{domain, Result};

/// Reduced Planck constant, J s.
pub const HBAR: f64 = 1.054571817e-34;
/// Electron rest mass, kg. Default effective mass of the model.
pub const ELECTRON_MASS: f64 = 9.1093837015e-31;
/// One electron-volt in joules.
pub const EV: f64 = 1.602176634e-19;

/// The constant set as a value, for callers that want to carry it around.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub electron_mass: f64,
    pub ev: f64,
}

impl PhysicalConstants {
    pub const CODATA_2018: Self = Self {
        hbar: HBAR,
        electron_mass: ELECTRON_MASS,
        ev: EV,
    };
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}

#[inline]
pub fn joules_to_ev(e: f64) -> f64 {
    e / EV
}

#[inline]
pub fn ev_to_joules(e: f64) -> f64 {
    e * EV
}

/// hbar^2 / (2 mu), in J m^2.
#[inline]
pub(crate) fn kinetic_prefactor(mu: f64) -> f64 {
    HBAR * HBAR / (2.0 * mu)
}

/// The energy unit hbar^2 k^2 / (2 mu) that scales the whole spectrum, in J.
pub fn unit_energy(k: f64, mu: f64) -> Result<f64> {
    if !(mu > 0.0) || !mu.is_finite() {
        return Err(domain(format!("mass must be positive and finite, got {mu}")));
    }
    Ok(kinetic_prefactor(mu) * k * k)
}

/// [`unit_energy`] expressed in eV.
pub fn unit_energy_ev(k: f64, mu: f64) -> Result<f64> {
    unit_energy(k, mu).map(joules_to_ev)
}
