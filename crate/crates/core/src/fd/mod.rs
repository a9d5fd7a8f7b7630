//! Finite-difference eigensolver for the reduced radial equation.
//!
//! The operator `-hbar^2/(2 mu) d^2/dr^2 + V(r)` is discretized with the
//! three-point stencil on a uniform Dirichlet mesh. Eigenvalues come from
//! Sturm-sequence bisection, eigenvectors from inverse iteration.

mod eigen;
mod follow;
mod grid;
mod operator;
mod richardson;
mod solve;

pub use eigen::{eigenvalues_below, eigenvector, eigenvector_orthogonal_to, EigenvalueSet};
pub use follow::{follow_states, sweep, SweepResult, SweepStep, TrackWarning, MIN_TRACK_OVERLAP};
pub use grid::RadialGrid;
pub use operator::{assemble, TridiagonalOperator};
pub use richardson::{richardson_order, richardson_order_with, RichardsonReport};
pub use solve::{check_resolution, solve_bound_states, Eigenpair, Model, POINTS_PER_LENGTH};
