use super::eigen::eigenvalues_below;
use super::grid::RadialGrid;
use super::operator::TridiagonalOperator;
use super::solve::{check_resolution, Model};
use crate::error::{domain, Error, Result};

/// Ground-state energies on successively halved meshes and the observed
/// convergence orders `log2((E_i - E_{i+1}) / (E_{i+1} - E_{i+2}))`.
#[derive(Debug, Clone, PartialEq)]
pub struct RichardsonReport {
    /// Mesh spacings, m.
    pub spacings: Vec<f64>,
    /// Ground-state energies, J.
    pub energies: Vec<f64>,
    pub orders: Vec<f64>,
    /// Order from the finest triple.
    pub order: f64,
    /// False when successive differences sink into the bisection noise floor.
    pub reliable: bool,
}

/// Differences below this multiple of `eps * scale` are treated as noise.
const NOISE_FLOOR: f64 = 100.0;

pub fn richardson_order(model: &Model, grid: &RadialGrid, refinements: usize) -> Result<RichardsonReport> {
    check_resolution(model, grid)?;
    richardson_order_with(|g| model.assemble(g), grid, refinements)
}

/// Richardson estimate for any mesh-to-operator builder.
pub fn richardson_order_with(
    build: impl Fn(&RadialGrid) -> Result<TridiagonalOperator>,
    grid: &RadialGrid,
    refinements: usize,
) -> Result<RichardsonReport> {
    if refinements < 2 {
        return Err(domain("Richardson estimate needs at least two refinements"));
    }
    let mut grids = vec![*grid];
    for _ in 0..refinements {
        let next = grids.last().unwrap().refined();
        grids.push(next);
    }
    let mut energies = Vec::with_capacity(grids.len());
    let mut floor: f64 = 0.0;
    for g in &grids {
        let op = build(g)?;
        let set = eigenvalues_below(&op, f64::INFINITY, 1)?;
        let e = *set
            .values
            .first()
            .ok_or_else(|| domain("operator has no eigenvalues"))?;
        floor = floor.max(NOISE_FLOOR * f64::EPSILON * op.scale());
        energies.push(e);
    }
    let diffs: Vec<f64> = energies.windows(2).map(|w| w[0] - w[1]).collect();
    let reliable = diffs.iter().all(|d| d.abs() > floor);
    if reliable && diffs.windows(2).any(|w| w[0].signum() != w[1].signum()) {
        return Err(Error::NonMonotoneRefinement(format!(
            "energy differences {diffs:?} change sign"
        )));
    }
    let orders: Vec<f64> = diffs.windows(2).map(|w| (w[0] / w[1]).abs().log2()).collect();
    Ok(RichardsonReport {
        spacings: grids.iter().map(RadialGrid::spacing).collect(),
        energies,
        order: *orders.last().unwrap(),
        orders,
        reliable,
    })
}
