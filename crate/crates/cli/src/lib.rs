//! Command-line harness: every published table and figure as CSV or JSON.
//!
//! The binary is a thin shell around [`run_to_string`]; the same entry
//! points are available to scripts and tests.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod config;
pub mod output;

pub use args::parse_config;
pub use commands::{run, Report, NO_BOUND_STATE, REPRODUCTIONS};
pub use config::{CliError, Command, Convention, Format, Method, ModelKind, RunConfig, SweepVar};
pub use output::{format_sci, Cell, Table};

/// Runs `cfg` and renders the result in its configured format.
pub fn run_to_string(cfg: &RunConfig) -> Result<(String, Report), CliError> {
    let report = run(cfg)?;
    Ok((report.table.render(cfg.format), report))
}
