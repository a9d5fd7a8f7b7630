use super::grid::RadialGrid;
use super::solve::{solve_bound_states, Eigenpair, Model};
use crate::error::{domain, Result};
use rayon::prelude::*;

/// Tracks whose best overlap drops below this are flagged as discontinuous.
pub const MIN_TRACK_OVERLAP: f64 = 0.5;

/// Eigenpairs at one sweep parameter, ascending in energy.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepStep {
    pub param: f64,
    pub pairs: Vec<Eigenpair>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrackWarning {
    /// Index of the later step of the transition.
    pub step: usize,
    pub track: usize,
    pub overlap: f64,
}

/// Level tracks across a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub params: Vec<f64>,
    /// `energies[step][track]`, J.
    pub energies: Vec<Vec<f64>>,
    /// `permutations[step][track]` is the energy-ordered index assigned to
    /// the track at that step.
    pub permutations: Vec<Vec<usize>>,
    /// `overlaps[step - 1][track]`: normalized overlap between the track's
    /// vectors at `step - 1` and `step`.
    pub overlaps: Vec<Vec<f64>>,
    pub warnings: Vec<TrackWarning>,
}

impl SweepResult {
    pub fn track_count(&self) -> usize {
        self.energies.first().map_or(0, Vec::len)
    }

    /// Energies of one track along the sweep, J.
    pub fn track(&self, t: usize) -> Vec<f64> {
        self.energies.iter().map(|row| row[t]).collect()
    }
}

fn normalized_overlap(a: &[f64], b: &[f64]) -> f64 {
    let ab: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let aa: f64 = a.iter().map(|x| x * x).sum();
    let bb: f64 = b.iter().map(|x| x * x).sum();
    (ab / (aa * bb).sqrt()).abs()
}

/// Greedy assignment: repeatedly take the largest remaining overlap, ties
/// going to the lower eigenvalue index and then the lower track.
fn greedy_assign(overlap: &[Vec<f64>]) -> Vec<usize> {
    let tracks = overlap.len();
    let candidates = overlap.first().map_or(0, Vec::len);
    let mut pairs: Vec<(usize, usize)> = (0..tracks).flat_map(|t| (0..candidates).map(move |b| (t, b))).collect();
    pairs.sort_by(|&(t1, b1), &(t2, b2)| {
        overlap[t2][b2]
            .total_cmp(&overlap[t1][b1])
            .then(b1.cmp(&b2))
            .then(t1.cmp(&t2))
    });
    let mut assignment = vec![usize::MAX; tracks];
    let mut taken = vec![false; candidates];
    for (t, b) in pairs {
        if assignment[t] == usize::MAX && !taken[b] {
            assignment[t] = b;
            taken[b] = true;
        }
    }
    assignment
}

/// Connects eigenpairs across consecutive steps by eigenvector overlap.
///
/// Track `t` starts at the `t`-th lowest level of the first step. All steps
/// must carry vectors of the same length; the number of tracks is the
/// smallest number of pairs found at any step.
pub fn follow_states(sweep: &[SweepStep]) -> Result<SweepResult> {
    let first = sweep.first().ok_or_else(|| domain("sweep is empty"))?;
    let tracks = sweep.iter().map(|s| s.pairs.len()).min().unwrap_or(0);
    let dim = first.pairs.first().map_or(0, |p| p.vector.len());
    if sweep.iter().flat_map(|s| &s.pairs).any(|p| p.vector.len() != dim) {
        return Err(domain("all eigenvectors in a sweep must live on the same mesh"));
    }

    let mut permutations = vec![(0..tracks).collect::<Vec<_>>()];
    let mut overlaps = Vec::with_capacity(sweep.len().saturating_sub(1));
    let mut warnings = Vec::new();
    for (j, pair) in sweep.windows(2).enumerate() {
        let (prev, next) = (&pair[0], &pair[1]);
        let prev_perm = permutations.last().unwrap();
        let matrix: Vec<Vec<f64>> = (0..tracks)
            .map(|t| {
                let v = &prev.pairs[prev_perm[t]].vector;
                next.pairs.iter().map(|q| normalized_overlap(v, &q.vector)).collect()
            })
            .collect();
        let perm = greedy_assign(&matrix);
        let chosen: Vec<f64> = (0..tracks).map(|t| matrix[t][perm[t]]).collect();
        for (t, &o) in chosen.iter().enumerate() {
            if o < MIN_TRACK_OVERLAP {
                warnings.push(TrackWarning {
                    step: j + 1,
                    track: t,
                    overlap: o,
                });
            }
        }
        overlaps.push(chosen);
        permutations.push(perm);
    }
    let energies = sweep
        .iter()
        .zip(&permutations)
        .map(|(s, perm)| perm.iter().map(|&b| s.pairs[b].energy).collect())
        .collect();
    Ok(SweepResult {
        params: sweep.iter().map(|s| s.param).collect(),
        energies,
        permutations,
        overlaps,
        warnings,
    })
}

/// Solves every `(param, model)` point in parallel on a shared mesh and
/// follows the lowest `count` levels. Output order follows the input.
pub fn sweep(points: &[(f64, Model)], grid: &RadialGrid, count: usize) -> Result<SweepResult> {
    let steps = points
        .par_iter()
        .map(|(param, model)| solve_bound_states(model, grid, count).map(|pairs| SweepStep { param: *param, pairs }))
        .collect::<Result<Vec<_>>>()?;
    follow_states(&steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fd::{eigenvalues_below, eigenvector, TridiagonalOperator};

    fn step_from_matrix(param: f64, diag: Vec<f64>, off: Vec<f64>) -> SweepStep {
        let op = TridiagonalOperator::new(diag, off, 1.0).unwrap();
        let set = eigenvalues_below(&op, f64::INFINITY, op.len()).unwrap();
        let pairs = set
            .values
            .iter()
            .map(|&e| Eigenpair {
                energy: e,
                vector: eigenvector(&op, e).unwrap(),
            })
            .collect();
        SweepStep { param, pairs }
    }

    #[test]
    fn identical_steps_keep_identity() {
        let steps: Vec<SweepStep> = (0..4)
            .map(|i| step_from_matrix(i as f64, vec![1.0, 2.0, 3.5], vec![0.3, 0.2]))
            .collect();
        let res = follow_states(&steps).unwrap();
        for p in &res.permutations {
            assert_eq!(p, &vec![0, 1, 2]);
        }
        assert!(res.warnings.is_empty());
    }

    #[test]
    fn crossing_swaps_labels() {
        // diag(t, -t): levels cross at t = 0 with fixed eigenvectors.
        let ts = [-1.0, -0.5, -0.1, 0.1, 0.5, 1.0];
        let steps: Vec<SweepStep> = ts
            .iter()
            .map(|&t| step_from_matrix(t, vec![t, -t], vec![0.0]))
            .collect();
        let res = follow_states(&steps).unwrap();
        for (j, &t) in ts.iter().enumerate() {
            let expect = if t < 0.0 { vec![0, 1] } else { vec![1, 0] };
            assert_eq!(res.permutations[j], expect, "t={t}");
            // Track 0 always carries the e_1 level, E = t.
            assert!((res.energies[j][0] - t).abs() < 1e-14);
        }
        assert!(res.overlaps.iter().flatten().all(|&o| (o - 1.0).abs() < 1e-12));
    }

    #[test]
    fn greedy_prefers_largest_overlap() {
        let m = vec![vec![0.6, 0.8], vec![0.1, 0.9]];
        // (1,1) = 0.9 goes first, then track 0 takes the remaining column.
        assert_eq!(greedy_assign(&m), vec![0, 1]);
        let tie = vec![vec![0.7, 0.7], vec![0.7, 0.7]];
        assert_eq!(greedy_assign(&tie), vec![0, 1]);
    }

    #[test]
    fn discontinuity_is_flagged() {
        let a = SweepStep {
            param: 0.0,
            pairs: vec![Eigenpair {
                energy: 0.0,
                vector: vec![1.0, 0.0, 0.0],
            }],
        };
        let b = SweepStep {
            param: 1.0,
            pairs: vec![Eigenpair {
                energy: 0.0,
                vector: vec![0.1, 1.0, 0.0],
            }],
        };
        let res = follow_states(&[a, b]).unwrap();
        assert_eq!(res.warnings.len(), 1);
        assert_eq!(res.warnings[0].step, 1);
    }

    #[test]
    fn rejects_mixed_meshes() {
        let a = SweepStep {
            param: 0.0,
            pairs: vec![Eigenpair {
                energy: 0.0,
                vector: vec![1.0, 0.0],
            }],
        };
        let b = SweepStep {
            param: 1.0,
            pairs: vec![Eigenpair {
                energy: 0.0,
                vector: vec![1.0],
            }],
        };
        assert!(follow_states(&[a, b]).is_err());
        assert!(follow_states(&[]).is_err());
    }
}
