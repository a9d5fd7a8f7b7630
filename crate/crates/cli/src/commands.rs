//! One function per subcommand. Each returns a [`Report`]: the table to print
//! plus any per-row warnings. Rows whose bound state does not exist carry
//! the `no_bound_state` status and empty numeric cells instead of aborting.
//!
//! Column reference (CSV header order):
//!
//! | subcommand | columns |
//! |---|---|
//! | spectrum | omega, n, m, energy_ev, status |
//! | table1 | omega, n, m, e_num_ev, e_analytic_ev, delta_ev, published_num_ev, published_analytic_ev |
//! | potential | model, omega, m, r_m, v_ev |
//! | density | omega, n, m, r_m, density_per_m, peak_r_m, status |
//! | sweep | omega, m, step, track, energy_ev, overlap, status |
//! | oscillator | omega, e0_ev..e4_ev, ref_e0_ev..ref_e4_ev, dev_e0_ev..dev_e4_ev |
//! | list-reproductions | artifact, subcommand, invocation |
//!
//! Sweep rows with `m = 0` on the mesh solver are marked `approximate`.

use std::collections::BTreeMap;

use hqm_core::fd::{self, solve_bound_states, Eigenpair, Model, RadialGrid};
use hqm_core::potentials::{v_eff_coulomb, v_eff_oscillator};
use hqm_core::reference::{self, TABLE1_K, TABLE2_K, TABLE2_M, TABLE2_OMEGA0};
use hqm_core::spectrum::{coulomb_parameters, energy_paper, energy_physical, probability_density};
use hqm_core::{joules_to_ev, ModelParams, OscillatorModel};
use rayon::prelude::*;

use crate::config::{CliError, Command, Convention, Method, ModelKind, RunConfig, SweepVar};
use crate::output::{Cell, Table};

pub const NO_BOUND_STATE: &str = "no_bound_state";

/// Mesh used for the torsion-only comparison table.
pub const TABLE1_R_MAX: f64 = 12e-9;
pub const TABLE1_NPTS: usize = 24_000;

const COULOMB_K: f64 = 5e9;
/// Levels solved per oscillator point.
const OSCILLATOR_LEVELS: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub table: Table,
    pub warnings: Vec<String>,
}

impl Report {
    fn new(table: Table) -> Self {
        Self {
            table,
            warnings: Vec::new(),
        }
    }

    /// 0 for a clean run, 4 when some rows carry warnings.
    pub fn exit_code(&self) -> i32 {
        if self.warnings.is_empty() {
            0
        } else {
            4
        }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    cfg.validate()?;
    match cfg.command {
        Command::Spectrum => cmd_spectrum(cfg),
        Command::Table1 => cmd_table1(cfg),
        Command::Potential => cmd_potential(cfg),
        Command::Density => cmd_density(cfg),
        Command::Sweep => cmd_sweep(cfg),
        Command::Oscillator => cmd_oscillator(cfg),
        Command::ListReproductions => Ok(list_reproductions()),
    }
}

fn params(cfg: &RunConfig, omega: f64, k: f64, m: i32) -> Result<ModelParams, CliError> {
    let p = ModelParams::new(omega, k, m).with_mass(cfg.mu);
    p.validate()?;
    Ok(p)
}

fn omega0(cfg: &RunConfig) -> f64 {
    cfg.omega0.unwrap_or(TABLE2_OMEGA0)
}

fn default_k(cfg: &RunConfig) -> f64 {
    cfg.k.unwrap_or(match cfg.model {
        ModelKind::Coulomb => COULOMB_K,
        ModelKind::Oscillator => TABLE2_K,
    })
}

/// Closed-form Coulomb energy (J) in the requested convention.
fn analytic_energy(n: u32, p: &ModelParams, convention: Convention) -> Result<f64, CliError> {
    Ok(match convention {
        Convention::Paper => energy_paper(n, p),
        Convention::Physical => energy_physical(n, p)?,
    })
}

/// FD eigenvalue (J, physical) in the requested convention for `model`.
fn fd_energy(e: f64, kind: ModelKind, convention: Convention) -> f64 {
    match (kind, convention) {
        (ModelKind::Coulomb, Convention::Paper) => -e,
        _ => e,
    }
}

fn require_coulomb(cfg: &RunConfig, what: &str) -> Result<(), CliError> {
    match cfg.model {
        ModelKind::Coulomb => Ok(()),
        ModelKind::Oscillator => Err(CliError::Config(format!(
            "{what} has a closed form only for the coulomb model"
        ))),
    }
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![a];
    }
    let step = (b - a) / (n - 1) as f64;
    (0..n)
        .map(|i| if i == n - 1 { b } else { a + step * i as f64 })
        .collect()
}

fn grid(cfg: &RunConfig, model: &Model, count: usize) -> Result<RadialGrid, CliError> {
    let default = model.default_grid(count, fd::POINTS_PER_LENGTH)?;
    Ok(RadialGrid::new(
        cfg.r_max.unwrap_or(default.r_max()),
        cfg.npts.unwrap_or(default.npts()),
    )?)
}

/// Closed-form energies over the `(omega, m, n)` grid.
pub fn cmd_spectrum(cfg: &RunConfig) -> Result<Report, CliError> {
    require_coulomb(cfg, "spectrum")?;
    let k = default_k(cfg);
    let mut report = Report::new(Table::new(&["omega", "n", "m", "energy_ev", "status"]));
    for omega in cfg.omegas_or(&[2.0]) {
        for m in cfg.ms_or(&[1]) {
            let p = params(cfg, omega, k, m)?;
            for n in 0..=cfg.n_max.unwrap_or(2) {
                if p.binds() {
                    let e = joules_to_ev(analytic_energy(n, &p, cfg.convention)?);
                    report
                        .table
                        .push(vec![omega.into(), n.into(), m.into(), e.into(), "ok".into()]);
                } else {
                    report.table.push(vec![
                        omega.into(),
                        n.into(),
                        m.into(),
                        Cell::Empty,
                        NO_BOUND_STATE.into(),
                    ]);
                    report
                        .warnings
                        .push(format!("omega={omega} m={m} n={n}: no bound state (omega k m <= 0)"));
                }
            }
        }
    }
    Ok(report)
}

/// FD against closed form on the fixed torsion-only benchmark set.
pub fn cmd_table1(cfg: &RunConfig) -> Result<Report, CliError> {
    let rows = reference::table1();
    let mesh = RadialGrid::new(cfg.r_max.unwrap_or(TABLE1_R_MAX), cfg.npts.unwrap_or(TABLE1_NPTS))?;
    let count = rows.iter().map(|r| r.n as usize + 1).max().unwrap_or(1);

    // One solve per (omega, m).
    let mut keys: Vec<(u64, i32)> = rows.iter().map(|r| (r.omega.to_bits(), r.m)).collect();
    keys.sort_unstable();
    keys.dedup();
    let solved: BTreeMap<(u64, i32), Vec<Eigenpair>> = keys
        .par_iter()
        .map(|&(w, m)| {
            let p = params(cfg, f64::from_bits(w), TABLE1_K, m)?;
            let pairs = solve_bound_states(&Model::Coulomb(p), &mesh, count)?;
            Ok(((w, m), pairs))
        })
        .collect::<Result<_, CliError>>()?;

    let mut report = Report::new(Table::new(&[
        "omega",
        "n",
        "m",
        "e_num_ev",
        "e_analytic_ev",
        "delta_ev",
        "published_num_ev",
        "published_analytic_ev",
    ]));
    for row in &rows {
        let p = params(cfg, row.omega, TABLE1_K, row.m)?;
        let analytic = joules_to_ev(analytic_energy(row.n, &p, cfg.convention)?);
        let flip = if cfg.convention == Convention::Paper { 1.0 } else { -1.0 };
        let fd = solved[&(row.omega.to_bits(), row.m)].get(row.n as usize);
        let (num, delta) = match fd {
            Some(pair) => {
                let e = fd_energy(pair.energy_ev(), ModelKind::Coulomb, cfg.convention);
                (Cell::Float(e), Cell::Float((e - analytic).abs()))
            }
            None => {
                report.warnings.push(format!(
                    "omega={} n={} m={}: level not found on the mesh",
                    row.omega, row.n, row.m
                ));
                (Cell::Empty, Cell::Empty)
            }
        };
        report.table.push(vec![
            row.omega.into(),
            row.n.into(),
            row.m.into(),
            num,
            analytic.into(),
            delta,
            (flip * row.e_num_ev).into(),
            (flip * row.e_analytic_ev).into(),
        ]);
    }
    Ok(report)
}

/// Sampled effective potential for each `(omega, m)`.
pub fn cmd_potential(cfg: &RunConfig) -> Result<Report, CliError> {
    let k = default_k(cfg);
    let (default_omegas, default_to): (&[f64], f64) = match cfg.model {
        ModelKind::Coulomb => (&[0.3, 0.5, 0.7], 5e-9),
        ModelKind::Oscillator => (&[1.0, 2.0, 3.0, 4.0, 5.0], 2e-9),
    };
    let r_from = cfg.r_from.unwrap_or(default_to / 250.0);
    let r_to = cfg.r_to.unwrap_or(default_to);
    if !(r_from > 0.0 && r_to > r_from) {
        return Err(CliError::Config(format!(
            "radial range must satisfy 0 < r-from < r-to, got [{r_from}, {r_to}]"
        )));
    }
    let radii = linspace(r_from, r_to, cfg.samples);
    let label = match cfg.model {
        ModelKind::Coulomb => "coulomb",
        ModelKind::Oscillator => "oscillator",
    };
    let mut report = Report::new(Table::new(&["model", "omega", "m", "r_m", "v_ev"]));
    for omega in cfg.omegas_or(default_omegas) {
        for m in cfg.ms_or(&[1]) {
            let p = params(cfg, omega, k, m)?;
            let osc = OscillatorModel::new(p, omega0(cfg));
            for &r in &radii {
                let v = match cfg.model {
                    ModelKind::Coulomb => v_eff_coulomb(r, &p)?,
                    ModelKind::Oscillator => v_eff_oscillator(r, &osc)?,
                };
                report.table.push(vec![
                    label.into(),
                    omega.into(),
                    m.into(),
                    r.into(),
                    joules_to_ev(v).into(),
                ]);
            }
        }
    }
    Ok(report)
}

/// Normalized radial densities `|f(r)|^2` (1/m) for each `(omega, m, n)`.
///
/// Without `--r-to` each state is sampled on `[0, (4N + 30) / (2 rho)]`,
/// which leaves a tail mass far below the truncation tolerance.
pub fn cmd_density(cfg: &RunConfig) -> Result<Report, CliError> {
    require_coulomb(cfg, "density")?;
    let k = default_k(cfg);
    let mut report = Report::new(Table::new(&[
        "omega",
        "n",
        "m",
        "r_m",
        "density_per_m",
        "peak_r_m",
        "status",
    ]));
    for omega in cfg.omegas_or(&[0.3, 0.5, 0.7]) {
        for m in cfg.ms_or(&[1]) {
            let p = params(cfg, omega, k, m)?;
            for n in 0..=cfg.n_max.unwrap_or(2) {
                if !p.binds() {
                    report.table.push(vec![
                        omega.into(),
                        n.into(),
                        m.into(),
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        NO_BOUND_STATE.into(),
                    ]);
                    report
                        .warnings
                        .push(format!("omega={omega} m={m} n={n}: no bound state (omega k m <= 0)"));
                    continue;
                }
                let cp = coulomb_parameters(n, &p)?;
                let r_to = cfg.r_to.unwrap_or((4.0 * cp.big_n + 30.0) / (2.0 * cp.rho));
                let r_from = cfg.r_from.unwrap_or(0.0);
                if !(r_from >= 0.0 && r_to > r_from) {
                    return Err(CliError::Config(format!(
                        "radial range must satisfy 0 <= r-from < r-to, got [{r_from}, {r_to}]"
                    )));
                }
                let profile = probability_density(n, &p, &linspace(r_from, r_to, cfg.samples))?;
                let status = if profile.truncated {
                    report.warnings.push(format!(
                        "omega={omega} m={m} n={n}: {:.3e} of the probability lies beyond r={r_to:e}",
                        profile.missing_mass
                    ));
                    "truncated"
                } else {
                    "ok"
                };
                for (&r, &d) in profile.radii.iter().zip(&profile.density) {
                    report.table.push(vec![
                        omega.into(),
                        n.into(),
                        m.into(),
                        r.into(),
                        d.into(),
                        profile.peak_r.into(),
                        status.into(),
                    ]);
                }
            }
        }
    }
    Ok(report)
}

/// Sweep values: evenly spaced torsion, or every integer `m` in range.
fn sweep_values(cfg: &RunConfig) -> Result<Vec<f64>, CliError> {
    match cfg.vary {
        SweepVar::Omega => {
            if cfg.steps < 2 {
                return Err(CliError::Config(format!("steps must be at least 2, got {}", cfg.steps)));
            }
            Ok(linspace(cfg.from, cfg.to, cfg.steps))
        }
        SweepVar::M => {
            if cfg.from.fract() != 0.0 || cfg.to.fract() != 0.0 || cfg.to <= cfg.from {
                return Err(CliError::Config(format!(
                    "an m sweep needs integer bounds with from < to, got {}..{}",
                    cfg.from, cfg.to
                )));
            }
            Ok((cfg.from as i64..=cfg.to as i64).map(|m| m as f64).collect())
        }
    }
}

fn model_at(cfg: &RunConfig, omega: f64, m: i32) -> Result<Model, CliError> {
    let p = params(cfg, omega, default_k(cfg), m)?;
    Ok(match cfg.model {
        ModelKind::Coulomb => Model::Coulomb(p),
        ModelKind::Oscillator => Model::Oscillator(OscillatorModel::new(p, omega0(cfg))),
    })
}

/// Level tracks along a torsion or `m` sweep.
///
/// The analytic path labels tracks by `n`. The FD path solves every point on
/// a shared mesh (fine enough for the most compact point, large enough for
/// the most extended one) and labels tracks by eigenvector overlap, so
/// `track` follows a state through near-crossings.
pub fn cmd_sweep(cfg: &RunConfig) -> Result<Report, CliError> {
    let values = sweep_values(cfg)?;
    let levels = cfg.n_max.unwrap_or(match cfg.model {
        ModelKind::Coulomb => 2,
        ModelKind::Oscillator => OSCILLATOR_LEVELS as u32 - 1,
    }) as usize
        + 1;
    let fixed: Vec<f64> = match cfg.vary {
        SweepVar::Omega => cfg.ms_or(&[1]).into_iter().map(f64::from).collect(),
        SweepVar::M => cfg.omegas_or(&[2.0]),
    };
    let point = |series: f64, value: f64| match cfg.vary {
        SweepVar::Omega => (value, series as i32),
        SweepVar::M => (series, value as i32),
    };

    let mut report = Report::new(Table::new(&[
        "omega",
        "m",
        "step",
        "track",
        "energy_ev",
        "overlap",
        "status",
    ]));
    for &series in &fixed {
        match cfg.method {
            Method::Analytic => {
                require_coulomb(cfg, "an analytic sweep")?;
                for (step, &value) in values.iter().enumerate() {
                    let (omega, m) = point(series, value);
                    let p = params(cfg, omega, default_k(cfg), m)?;
                    for n in 0..levels as u32 {
                        let (energy, status) = if p.binds() {
                            (Cell::Float(joules_to_ev(analytic_energy(n, &p, cfg.convention)?)), "ok")
                        } else {
                            report
                                .warnings
                                .push(format!("omega={omega} m={m} n={n}: no bound state"));
                            (Cell::Empty, NO_BOUND_STATE)
                        };
                        report.table.push(vec![
                            omega.into(),
                            m.into(),
                            step.into(),
                            n.into(),
                            energy,
                            Cell::Empty,
                            status.into(),
                        ]);
                    }
                }
            }
            Method::Fd => fd_sweep(cfg, series, &values, levels, &point, &mut report)?,
        }
    }
    Ok(report)
}

/// With m = 0 the reduced wavefunction goes like sqrt(r), which the Dirichlet
/// stencil resolves only logarithmically.
const S_WAVE_NOTE: &str = "m=0 levels from the Dirichlet mesh converge slowly and are approximate";

fn fd_sweep(
    cfg: &RunConfig,
    series: f64,
    values: &[f64],
    levels: usize,
    point: &dyn Fn(f64, f64) -> (f64, i32),
    report: &mut Report,
) -> Result<(), CliError> {
    let points: Vec<(f64, Model)> = values
        .iter()
        .map(|&v| {
            let (omega, m) = point(series, v);
            model_at(cfg, omega, m).map(|model| (v, model))
        })
        .collect::<Result<_, _>>()?;
    let mesh = shared_grid(cfg, &points, levels)?;
    let result = fd::sweep(&points, &mesh, levels)?;
    if points.iter().any(|(_, model)| model.params().m == 0) {
        report.warnings.push(format!("series {series}: {S_WAVE_NOTE}"));
    }
    if result.track_count() < levels {
        report.warnings.push(format!(
            "series {series}: only {} of {levels} levels exist at every sweep point",
            result.track_count()
        ));
    }
    for w in &result.warnings {
        report.warnings.push(format!(
            "series {series}: track {} jumps at step {} (overlap {:.3})",
            w.track, w.step, w.overlap
        ));
    }
    for (step, energies) in result.energies.iter().enumerate() {
        let (omega, m) = point(series, result.params[step]);
        for (track, &e) in energies.iter().enumerate() {
            let overlap = if step == 0 {
                Cell::Empty
            } else {
                result.overlaps[step - 1][track].into()
            };
            let jumped = result.warnings.iter().any(|w| w.step == step && w.track == track);
            let status = match (jumped, m) {
                (true, _) => "discontinuous",
                (false, 0) => "approximate",
                _ => "ok",
            };
            report.table.push(vec![
                omega.into(),
                m.into(),
                step.into(),
                track.into(),
                fd_energy(joules_to_ev(e), cfg.model, cfg.convention).into(),
                overlap,
                status.into(),
            ]);
        }
    }
    Ok(())
}

/// Largest default domain and finest default spacing over all points,
/// unless overridden.
fn shared_grid(cfg: &RunConfig, points: &[(f64, Model)], levels: usize) -> Result<RadialGrid, CliError> {
    let mut r_max: f64 = 0.0;
    let mut h = f64::INFINITY;
    for (_, model) in points {
        let g = model.default_grid(levels, fd::POINTS_PER_LENGTH)?;
        r_max = r_max.max(g.r_max());
        h = h.min(g.spacing());
    }
    let r_max = cfg.r_max.unwrap_or(r_max);
    let npts = cfg.npts.unwrap_or((r_max / h).ceil() as usize);
    Ok(RadialGrid::new(r_max, npts)?)
}

/// FD oscillator levels with the shipped reference table alongside.
pub fn cmd_oscillator(cfg: &RunConfig) -> Result<Report, CliError> {
    let table = reference::table2();
    let default_omegas: Vec<f64> = table.iter().map(|r| r.omega).collect();
    let omegas = cfg.omegas_or(&default_omegas);
    let m = cfg.ms.first().copied().unwrap_or(TABLE2_M);
    let k = cfg.k.unwrap_or(TABLE2_K);

    let solved: Vec<Vec<Eigenpair>> = omegas
        .par_iter()
        .map(|&omega| {
            let model = Model::Oscillator(OscillatorModel::new(params(cfg, omega, k, m)?, omega0(cfg)));
            let mesh = grid(cfg, &model, OSCILLATOR_LEVELS)?;
            Ok(solve_bound_states(&model, &mesh, OSCILLATOR_LEVELS)?)
        })
        .collect::<Result<_, CliError>>()?;

    let mut columns: Vec<String> = vec!["omega".into()];
    for prefix in ["e", "ref_e", "dev_e"] {
        columns.extend((0..OSCILLATOR_LEVELS).map(|n| format!("{prefix}{n}_ev")));
    }
    let mut report = Report::new(Table {
        columns,
        rows: Vec::new(),
    });
    if m == 0 {
        report.warnings.push(S_WAVE_NOTE.to_string());
    }
    for (&omega, pairs) in omegas.iter().zip(&solved) {
        if pairs.len() < OSCILLATOR_LEVELS {
            return Err(CliError::Numerical(format!(
                "omega={omega}: found {} of {OSCILLATOR_LEVELS} levels",
                pairs.len()
            )));
        }
        let reference = table
            .iter()
            .find(|r| (r.omega - omega).abs() <= 1e-9 * omega.abs().max(1.0))
            .map(|r| r.levels_ev);
        let mut row: Vec<Cell> = vec![omega.into()];
        row.extend(pairs.iter().map(|p| Cell::Float(p.energy_ev())));
        row.extend((0..OSCILLATOR_LEVELS).map(|n| Cell::from(reference.map(|l| l[n]))));
        row.extend((0..OSCILLATOR_LEVELS).map(|n| Cell::from(reference.map(|l| pairs[n].energy_ev() - l[n]))));
        report.table.push(row);
    }
    Ok(report)
}

/// Every published table and figure, with the invocation that regenerates it.
pub const REPRODUCTIONS: &[(&str, &str, &str)] = &[
    ("table-1", "table1", "hqm table1"),
    ("table-2", "oscillator", "hqm oscillator"),
    (
        "figure-1",
        "potential",
        "hqm potential --omega 0.3,0.5,0.7 --m 1 --k 5e9",
    ),
    (
        "figure-2",
        "density",
        "hqm density --omega 0.3,0.5,0.7 --m 1 --n-max 2 --k 5e9",
    ),
    (
        "figure-3",
        "sweep",
        "hqm sweep --vary m --from 1 --to 6 --omega 2,3,4 --k 5e9",
    ),
    (
        "figure-4",
        "sweep",
        "hqm sweep --vary omega --from 0.5 --to 5 --steps 46 --m 1,2,3 --k 5e9",
    ),
    (
        "figure-5",
        "potential",
        "hqm potential --model oscillator --omega 1,2,3,4,5 --m 1 --k 1e10 --omega0 5.0265482e13",
    ),
    (
        "figure-6",
        "sweep",
        "hqm sweep --model oscillator --method fd --vary m --from -6 --to 6 --omega 5 --k 1e9 --n-max 4",
    ),
    (
        "figure-7",
        "sweep",
        "hqm sweep --model oscillator --method fd --vary omega --from 1 --to 30 --steps 50 --m 1 --k 1e9 --n-max 4",
    ),
];

pub fn list_reproductions() -> Report {
    let mut report = Report::new(Table::new(&["artifact", "subcommand", "invocation"]));
    for &(artifact, sub, inv) in REPRODUCTIONS {
        report.table.push(vec![artifact.into(), sub.into(), inv.into()]);
    }
    report
}
