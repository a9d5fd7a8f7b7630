use crate::error::{domain, Result};

/// Coefficients `c_0..c_n` of a real polynomial in ascending powers.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialCoefficients {
    coeffs: Vec<f64>,
}

impl PolynomialCoefficients {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.iter().any(|c| !c.is_finite()) {
            return Err(domain("polynomial coefficients must be non-empty and finite"));
        }
        Ok(Self { coeffs })
    }

    /// Coefficients of `1F1(-n; b; x) = sum_j (-n)_j / (b)_j x^j / j!`.
    pub fn confluent(n: u32, b: f64) -> Result<Self> {
        if !(b > 0.0) || !b.is_finite() {
            return Err(domain(format!("1F1 lower parameter must be positive, got {b}")));
        }
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        let mut c = 1.0;
        coeffs.push(c);
        for j in 0..n {
            let jf = f64::from(j);
            c *= (jf - f64::from(n)) / ((b + jf) * (jf + 1.0));
            coeffs.push(c);
        }
        Ok(Self { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }
}

/// Terminating confluent hypergeometric series `1F1(-n; b; x)`.
///
/// The terms alternate in sign, so the relative error grows like
/// `eps * sum|c_j x^j| / |1F1|`. That ratio stays small for the low radial
/// modes but reaches 1e6 to 1e8 around `n >= 9`, `x >= 10`; use
/// [`super::laguerre`] there.
pub fn confluent_1f1_truncated(n: u32, b: f64, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(domain("1F1 argument must be finite"));
    }
    Ok(PolynomialCoefficients::confluent(n, b)?.eval(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(confluent_1f1_truncated(0, 3.0, 7.3).unwrap(), 1.0);
        assert!(confluent_1f1_truncated(1, 3.0, 3.0).unwrap().abs() < 1e-15);
        assert!(confluent_1f1_truncated(2, 3.0, 2.0).unwrap().abs() < 1e-15);
    }

    #[test]
    fn unity_at_origin() {
        for n in 0..20 {
            for &b in &[1.0, 2.5, 3.0, 7.0] {
                assert_eq!(confluent_1f1_truncated(n, b, 0.0).unwrap(), 1.0);
            }
        }
    }

    #[test]
    fn rejects_nonpositive_b() {
        assert!(confluent_1f1_truncated(2, 0.0, 1.0).is_err());
        assert!(confluent_1f1_truncated(2, -3.0, 1.0).is_err());
    }

    #[test]
    fn degree_matches_n() {
        let p = PolynomialCoefficients::confluent(4, 3.0).unwrap();
        assert_eq!(p.degree(), 4);
        // Leading coefficient (-4)_4 / ((3)_4 4!) = 24 / (360 * 24).
        assert!((p.coeffs()[4] - 1.0 / 360.0).abs() < 1e-17);
    }
}
