use crate::error::{Error, Result};

/// Uniform mesh `x_j = x_min + j h`, `j = 0..n_points`, walls included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    n_points: usize,
    x_min: f64,
    x_max: f64,
}

impl Grid {
    /// Five-point stencil plus one boundary row on each side.
    pub const MIN_POINTS: usize = 7;

    pub fn new(n_points: usize, x_min: f64, x_max: f64) -> Result<Self> {
        if n_points < Self::MIN_POINTS {
            return Err(Error::domain(format!(
                "grid needs at least {} points, got {n_points}",
                Self::MIN_POINTS
            )));
        }
        if !(x_min.is_finite() && x_max.is_finite() && x_max > x_min) {
            return Err(Error::domain(format!("invalid grid span [{x_min}, {x_max}]")));
        }
        Ok(Self { n_points, x_min, x_max })
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    pub fn x(&self, j: usize) -> f64 {
        self.x_min + j as f64 * self.spacing()
    }

    pub fn points(&self) -> Vec<f64> {
        let h = self.spacing();
        (0..self.n_points).map(|j| self.x_min + j as f64 * h).collect()
    }

    /// True when the grid covers `[lo, hi]` up to a relative tolerance.
    pub fn spans(&self, lo: f64, hi: f64) -> bool {
        let scale = (hi - lo).abs().max(1.0);
        (self.x_min - lo).abs() <= 1e-12 * scale && (self.x_max - hi).abs() <= 1e-12 * scale
    }
}
