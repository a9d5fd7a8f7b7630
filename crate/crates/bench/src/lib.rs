//! Fixtures shared by the criterion benches in `benches/`.

use hqm_core::fd::TridiagonalOperator;
use hqm_core::reference::{TABLE1_K, TABLE2_K, TABLE2_M, TABLE2_OMEGA0};
use hqm_core::{Model, ModelParams, OscillatorModel, RadialGrid};

/// Table I mesh: 12 nm, 24000 interior points.
pub fn table1_mesh() -> RadialGrid {
    RadialGrid::new(12e-9, 24_000).expect("valid mesh")
}

pub fn coulomb(omega: f64, m: i32) -> Model {
    Model::Coulomb(ModelParams::new(omega, TABLE1_K, m))
}

/// Table II setup at the given torsion.
pub fn oscillator(omega: f64) -> Model {
    let base = ModelParams::new(omega, TABLE2_K, TABLE2_M);
    Model::Oscillator(OscillatorModel::new(base, TABLE2_OMEGA0))
}

pub fn table1_operator() -> TridiagonalOperator {
    coulomb(2.0, 1).assemble(&table1_mesh()).expect("finite potential")
}
