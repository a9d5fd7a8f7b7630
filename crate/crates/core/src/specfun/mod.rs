//! Special functions used by the closed-form bound states.

mod bessel;
mod hypergeometric;
mod laguerre;
mod quadrature;

pub use bessel::{bessel_j, bessel_j_sequence, bessel_y};
pub use hypergeometric::{confluent_1f1_truncated, PolynomialCoefficients};
pub use laguerre::{laguerre, pochhammer};
pub use quadrature::gauss_laguerre;
