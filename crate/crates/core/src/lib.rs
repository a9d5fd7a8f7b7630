//! Bound states of a quantum particle in a helically twisted space.
//!
//! The torsion of the metric couples the azimuthal and longitudinal momenta
//! and produces an attractive `1/r` term in the radial equation. This crate
//! provides
//!
//! * the metric and a discrete check of the separation of variables
//!   ([`geometry`]),
//! * the effective potentials of the torsion-only and harmonically confined
//!   models ([`potentials`]),
//! * closed-form spectra and normalized wavefunctions ([`spectrum`]), built
//!   on the special functions in [`specfun`],
//! * an independent finite-difference eigensolver with state following for
//!   parameter sweeps ([`fd`]),
//! * the published benchmark tables ([`reference`]).
//!
//! All quantities are SI unless a name says otherwise.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod constants;
pub mod error;
pub mod fd;
pub mod geometry;
pub mod potentials;
pub mod reference;
pub mod specfun;
pub mod spectrum;

pub use constants::{
    ev_to_joules, joules_to_ev, unit_energy, unit_energy_ev, PhysicalConstants, ELECTRON_MASS, EV, HBAR,
};
pub use error::{Error, Result};
pub use fd::{Eigenpair, Model, RadialGrid, SweepResult};
pub use potentials::{ModelParams, OscillatorModel, OscillatorParams};
pub use spectrum::{BoundState, CoulombParameters};
