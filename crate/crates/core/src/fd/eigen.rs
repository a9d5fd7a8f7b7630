use super::operator::TridiagonalOperator;
use crate::error::{domain, Error, Result};

const MAX_INVERSE_ITERATIONS: usize = 50;
const RESIDUAL_TOLERANCE: f64 = 1e-8;

/// Lowest eigenvalues below a bound, with the Sturm count at the bound.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenvalueSet {
    /// Ascending.
    pub values: Vec<f64>,
    /// Number of eigenvalues strictly below the bound.
    pub count_below: usize,
}

/// Bisects for the `index`-th eigenvalue (0-based) inside `[lo, hi]`.
fn bisect(op: &TridiagonalOperator, index: usize, mut lo: f64, mut hi: f64) -> f64 {
    let floor = f64::EPSILON * op.scale();
    loop {
        let mid = 0.5 * (lo + hi);
        let width = hi - lo;
        if mid <= lo || mid >= hi || width <= floor || width <= 2.0 * f64::EPSILON * lo.abs().max(hi.abs()) {
            return mid;
        }
        if op.sturm_count(mid) > index {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// The lowest `min(max_count, count_below(bound))` eigenvalues, bisected to
/// machine precision (well inside `1e-12 * scale`).
pub fn eigenvalues_below(op: &TridiagonalOperator, bound: f64, max_count: usize) -> Result<EigenvalueSet> {
    if max_count == 0 {
        return Err(domain("max_count must be at least 1"));
    }
    let (g_lo, g_hi) = op.gershgorin();
    let pad = f64::EPSILON * op.scale() * 4.0;
    let upper = bound.min(g_hi + pad);
    let count_below = if bound > g_hi { op.len() } else { op.sturm_count(bound) };
    let wanted = count_below.min(max_count);
    let mut values = Vec::with_capacity(wanted);
    let mut lo = g_lo - pad;
    for index in 0..wanted {
        let v = bisect(op, index, lo, upper);
        values.push(v);
        lo = v.min(upper);
    }
    Ok(EigenvalueSet { values, count_below })
}

/// LU factors of `T - shift` with partial pivoting (LAPACK gttrf layout).
struct ShiftedLu {
    d: Vec<f64>,
    dl: Vec<f64>,
    du: Vec<f64>,
    du2: Vec<f64>,
    swapped: Vec<bool>,
}

impl ShiftedLu {
    fn factor(op: &TridiagonalOperator, shift: f64) -> Self {
        let n = op.len();
        let tiny = f64::EPSILON * op.scale();
        let mut d: Vec<f64> = op.diag().iter().map(|x| x - shift).collect();
        let mut dl = op.offdiag().to_vec();
        let mut du = op.offdiag().to_vec();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= dl[i].abs() {
                if d[i] == 0.0 {
                    d[i] = tiny;
                }
                let fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
            } else {
                let fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                let temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] *= -fact;
                }
                swapped[i] = true;
            }
        }
        if d[n - 1] == 0.0 {
            d[n - 1] = tiny;
        }
        Self {
            d,
            dl,
            du,
            du2,
            swapped,
        }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = self.d.len();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                let t = b[i];
                b[i] = b[i + 1];
                b[i + 1] = t - self.dl[i] * b[i];
            } else {
                b[i + 1] -= self.dl[i] * b[i];
            }
        }
        b[n - 1] /= self.d[n - 1];
        if n > 1 {
            b[n - 2] = (b[n - 2] - self.du[n - 2] * b[n - 1]) / self.d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.du[i] * b[i + 1] - self.du2[i] * b[i + 2]) / self.d[i];
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &mut [f64]) {
    let norm = dot(v, v).sqrt();
    for x in v.iter_mut() {
        *x /= norm;
    }
}

/// Inverse iteration at `lambda`, returning `v` with `sum v_i^2 h = 1`.
pub fn eigenvector(op: &TridiagonalOperator, lambda: f64) -> Result<Vec<f64>> {
    eigenvector_orthogonal_to(op, lambda, &[])
}

/// Inverse iteration that also projects out previously found eigenvectors
/// (given in the same discrete norm), for nearly degenerate levels.
pub fn eigenvector_orthogonal_to(op: &TridiagonalOperator, lambda: f64, previous: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = op.len();
    let scale = op.scale();
    let h = op.spacing();
    let lu = ShiftedLu::factor(op, lambda);
    // Deterministic, non-degenerate start vector.
    let mut v: Vec<f64> = (0..n)
        .map(|i| 1.0 + 0.5 * ((i as f64) * 0.618_033_988_749_895).sin())
        .collect();
    normalize(&mut v);
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_INVERSE_ITERATIONS {
        lu.solve(&mut v);
        for p in previous {
            let c = dot(&v, p) * h;
            for (x, y) in v.iter_mut().zip(p) {
                *x -= c * y;
            }
        }
        normalize(&mut v);
        let r = op.apply_shifted(&v, lambda);
        residual = dot(&r, &r).sqrt();
        if residual <= RESIDUAL_TOLERANCE * scale {
            fix_phase(&mut v);
            let s = h.sqrt().recip();
            v.iter_mut().for_each(|x| *x *= s);
            return Ok(v);
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_INVERSE_ITERATIONS,
        residual,
    })
}

/// First non-negligible component positive.
fn fix_phase(v: &mut [f64]) {
    let peak = v.iter().fold(0.0_f64, |a, x| a.max(x.abs()));
    if let Some(first) = v.iter().find(|x| x.abs() > 1e-3 * peak) {
        if *first < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn laplacian(n: usize) -> TridiagonalOperator {
        TridiagonalOperator::new(vec![2.0; n], vec![-1.0; n - 1], 1.0).unwrap()
    }

    #[test]
    fn diagonal_matrix() {
        let op = TridiagonalOperator::new(vec![1e-19, 2e-19, 3e-19], vec![0.0, 0.0], 1.0).unwrap();
        let set = eigenvalues_below(&op, 2.5e-19, 10).unwrap();
        assert_eq!(set.count_below, 2);
        assert_eq!(set.values.len(), 2);
        assert!((set.values[0] - 1e-19).abs() < 1e-12 * 3e-19);
        assert!((set.values[1] - 2e-19).abs() < 1e-12 * 3e-19);

        let v = eigenvector(&op, set.values[1]).unwrap();
        assert!((v[1].abs() - 1.0).abs() < 1e-12);
        assert!(v[0].abs() < 1e-12 && v[2].abs() < 1e-12);
    }

    #[test]
    fn one_by_one() {
        let op = TridiagonalOperator::new(vec![4.2], vec![], 1.0).unwrap();
        let set = eigenvalues_below(&op, 10.0, 3).unwrap();
        assert_eq!(set.values.len(), 1);
        assert!((set.values[0] - 4.2).abs() < 1e-14);
    }

    #[test]
    fn empty_when_nothing_below() {
        let op = laplacian(10);
        let set = eigenvalues_below(&op, 0.0, 3).unwrap();
        assert!(set.values.is_empty());
        assert_eq!(set.count_below, 0);
        assert!(eigenvalues_below(&op, 1.0, 0).is_err());
    }

    #[test]
    fn discrete_laplacian_closed_form() {
        for &n in &[3usize, 50, 400] {
            let op = laplacian(n);
            let set = eigenvalues_below(&op, 5.0, n).unwrap();
            assert_eq!(set.values.len(), n);
            for (j, v) in set.values.iter().enumerate() {
                let exact = 2.0 - 2.0 * (PI * (j + 1) as f64 / (n + 1) as f64).cos();
                assert!((v - exact).abs() <= 1e-12 * exact.max(1e-3) + 1e-15, "n={n} j={j}");
            }
            assert!(set.values.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn sine_mode() {
        let n = 200;
        let op = laplacian(n);
        let set = eigenvalues_below(&op, 5.0, 1).unwrap();
        let v = eigenvector(&op, set.values[0]).unwrap();
        let mut s: Vec<f64> = (1..=n).map(|i| (PI * i as f64 / (n + 1) as f64).sin()).collect();
        normalize(&mut s);
        let overlap = dot(&v, &s).abs();
        assert!(overlap >= 1.0 - 1e-10);
        assert!((dot(&v, &v) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn orthogonal_eigenvectors() {
        let n = 300;
        let diag: Vec<f64> = (0..n).map(|i| 2.0 + 1e-3 * (i as f64 - 150.0).powi(2)).collect();
        let op = TridiagonalOperator::new(diag, vec![-1.0; n - 1], 0.5).unwrap();
        let set = eigenvalues_below(&op, 1e9, 8).unwrap();
        let mut vecs: Vec<Vec<f64>> = Vec::new();
        for &l in &set.values {
            let v = eigenvector_orthogonal_to(&op, l, &vecs).unwrap();
            vecs.push(v);
        }
        for i in 0..vecs.len() {
            for j in 0..vecs.len() {
                let d = dot(&vecs[i], &vecs[j]) * 0.5;
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((d - expect).abs() < 1e-8);
            }
        }
    }
}
