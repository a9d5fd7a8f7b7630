use crate::error::{domain, Result};

pub const MAX_POINTS: usize = 200;

/// Gauss-Laguerre nodes and weights for `int_0^inf e^-t f(t) dt`.
///
/// Nodes are Newton-refined roots of `L_n`; the recurrence is rescaled on the
/// fly so that weights for large nodes underflow gracefully instead of
/// overflowing the intermediate polynomial values.
pub fn gauss_laguerre(npts: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if npts == 0 || npts > MAX_POINTS {
        return Err(domain(format!(
            "Gauss-Laguerre order must be in 1..={MAX_POINTS}, got {npts}"
        )));
    }
    let n = npts as f64;
    let mut nodes: Vec<f64> = Vec::with_capacity(npts);
    let mut weights = Vec::with_capacity(npts);
    let mut z = 0.0;
    for i in 0..npts {
        z = match i {
            0 => 3.0 / (1.0 + 2.4 * n),
            1 => z + 15.0 / (1.0 + 2.5 * n),
            _ => {
                let ai = (i - 1) as f64;
                z + (1.0 + 2.55 * ai) / (1.9 * ai) * (z - nodes[i - 2])
            }
        };
        // Newton stalls at a few ulps once roundoff in L_n dominates, so
        // stop on either a tiny step or a step that no longer shrinks.
        let mut last = f64::INFINITY;
        let mut converged = false;
        for _ in 0..100 {
            let (p1, p2, _) = laguerre_pair(npts, z);
            let dp = n * (p1 - p2) / z;
            let step = p1 / dp;
            z -= step;
            let size = step.abs();
            if size <= 4.0 * f64::EPSILON * z.abs() || (size >= last && size <= 1e-12 * z.abs()) {
                converged = true;
                break;
            }
            last = size;
        }
        if !converged {
            return Err(domain(format!("Gauss-Laguerre root {i} of {npts} did not converge")));
        }
        let (p1, p2, log_scale) = laguerre_pair(npts, z);
        let dp = n * (p1 - p2) / z;
        // w = -1 / (n L_n'(z) L_{n-1}(z)), with both factors carrying exp(log_scale).
        let w = (-1.0 / (n * dp * p2)) * (-2.0 * log_scale).exp();
        nodes.push(z);
        weights.push(w);
    }
    Ok((nodes, weights))
}

/// `(L_n(z), L_{n-1}(z), ln s)` where both values are divided by `s`.
fn laguerre_pair(n: usize, z: f64) -> (f64, f64, f64) {
    let (mut p1, mut p2) = (1.0_f64, 0.0_f64);
    let mut log_scale = 0.0;
    for j in 0..n {
        let jf = j as f64;
        let p3 = p2;
        p2 = p1;
        p1 = ((2.0 * jf + 1.0 - z) * p2 - jf * p3) / (jf + 1.0);
        if p1.abs() > 1e150 {
            p1 /= 1e150;
            p2 /= 1e150;
            log_scale += 150.0 * std::f64::consts::LN_10;
        }
    }
    (p1, p2, log_scale)
}
