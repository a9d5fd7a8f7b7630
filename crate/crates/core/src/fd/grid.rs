use crate::error::{domain, Result};

/// Uniform mesh `r_i = i h`, `i = 1..=npts`, with `h = r_max / (npts + 1)`.
/// The wavefunction vanishes at `r_0 = 0` and `r_{npts+1} = r_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    r_max: f64,
    npts: usize,
}

impl RadialGrid {
    pub fn new(r_max: f64, npts: usize) -> Result<Self> {
        if !(r_max > 0.0) || !r_max.is_finite() {
            return Err(domain(format!("r_max must be positive and finite, got {r_max}")));
        }
        if npts == 0 {
            return Err(domain("grid needs at least one interior point"));
        }
        Ok(Self { r_max, npts })
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn npts(&self) -> usize {
        self.npts
    }

    pub fn spacing(&self) -> f64 {
        self.r_max / (self.npts + 1) as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        (i + 1) as f64 * self.spacing()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.npts).map(|i| self.node(i)).collect()
    }

    /// Same `r_max`, spacing halved.
    pub fn refined(&self) -> Self {
        Self {
            r_max: self.r_max,
            npts: 2 * (self.npts + 1) - 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout() {
        let g = RadialGrid::new(1.0, 3).unwrap();
        assert_eq!(g.spacing(), 0.25);
        assert_eq!(g.nodes(), vec![0.25, 0.5, 0.75]);
        let f = g.refined();
        assert_eq!(f.npts(), 7);
        assert_eq!(f.spacing(), 0.125);
        assert!(RadialGrid::new(0.0, 3).is_err());
        assert!(RadialGrid::new(1.0, 0).is_err());
    }
}
