use crate::error::{domain, Result};

/// Rising factorial `(a)_n`.
pub fn pochhammer(a: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, j| acc * (a + f64::from(j)))
}

/// Generalized Laguerre polynomial `L_n^(alpha)(x)` by the three-term
/// recurrence.
pub fn laguerre(n: u32, alpha: f64, x: f64) -> Result<f64> {
    if !(alpha > -1.0) {
        return Err(domain(format!("Laguerre alpha must exceed -1, got {alpha}")));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let kf = f64::from(k);
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{confluent_1f1_truncated, gauss_laguerre};

    #[test]
    fn base_cases() {
        assert_eq!(laguerre(0, 3.7, 12.0).unwrap(), 1.0);
        assert_eq!(laguerre(1, 2.0, 1.0).unwrap(), 2.0);
        assert!(laguerre(2, -1.0, 1.0).is_err());
    }

    #[test]
    fn matches_confluent_series() {
        // 1F1(-n; alpha + 1; x) = n! / (alpha + 1)_n L_n^(alpha)(x)
        for n in 0..=5u32 {
            for &alpha in &[0.0, 2.0, 4.0] {
                for &x in &[0.5, 2.0, 10.0] {
                    let lag = laguerre(n, alpha, x).unwrap();
                    let fact: f64 = (1..=n).map(f64::from).product();
                    let via_lag = fact / pochhammer(alpha + 1.0, n) * lag;
                    let f11 = confluent_1f1_truncated(n, alpha + 1.0, x).unwrap();
                    assert!((via_lag - f11).abs() <= 1e-12 * f11.abs().max(1.0), "{n} {alpha} {x}");
                }
            }
        }
    }

    #[test]
    fn orthogonality_under_gauss_laguerre() {
        // Weight t^alpha e^-t: integrate t^alpha L_i L_j against e^-t.
        let (nodes, weights) = gauss_laguerre(40).unwrap();
        for &alpha in &[0.0, 2.0, 4.0] {
            for i in 0..=5u32 {
                for j in 0..=5u32 {
                    let s: f64 = nodes
                        .iter()
                        .zip(&weights)
                        .map(|(&t, &w)| {
                            w * t.powf(alpha) * laguerre(i, alpha, t).unwrap() * laguerre(j, alpha, t).unwrap()
                        })
                        .sum();
                    if i != j {
                        assert!(s.abs() < 1e-9, "alpha={alpha} i={i} j={j} s={s}");
                    } else {
                        // Gamma(n + alpha + 1) / n!
                        let expect = pochhammer(f64::from(i) + 1.0, alpha as u32);
                        assert!((s - expect).abs() < 1e-9 * expect);
                    }
                }
            }
        }
    }
}
