use crate::error::{Error, Result};
use crate::grid::Grid;

/// Value of the confining potential at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PotentialValue {
    Finite(f64),
    /// At or beyond a hard wall.
    Wall,
}

/// Harmonic well `1/2 k (x - center)²` inside impenetrable walls at `left`, `right`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfinedPotential {
    k: f64,
    center: f64,
    left: f64,
    right: f64,
}

impl ConfinedPotential {
    pub fn new(k: f64, center: f64, left: f64, right: f64) -> Result<Self> {
        if !(k.is_finite() && k >= 0.0) {
            return Err(Error::domain(format!("force constant must be >= 0, got {k}")));
        }
        if !center.is_finite() {
            return Err(Error::domain("well center must be finite"));
        }
        if !(left.is_finite() && right.is_finite() && left < right) {
            return Err(Error::domain(format!("walls must satisfy b1 < b2, got [{left}, {right}]")));
        }
        Ok(Self { k, center, left, right })
    }

    /// Centred well in `[-half_width, half_width]`.
    pub fn symmetric(k: f64, half_width: f64) -> Result<Self> {
        if !(half_width > 0.0) {
            return Err(Error::domain(format!("half width must be > 0, got {half_width}")));
        }
        Self::new(k, 0.0, -half_width, half_width)
    }

    /// Off-centre well with unit force constant in the box `[-1, 1]`.
    pub fn shifted(center: f64) -> Result<Self> {
        Self::new(1.0, center, -1.0, 1.0)
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn left(&self) -> f64 {
        self.left
    }

    pub fn right(&self) -> f64 {
        self.right
    }

    pub fn width(&self) -> f64 {
        self.right - self.left
    }

    pub fn is_symmetric(&self) -> bool {
        self.center == 0.0 && self.left == -self.right
    }

    /// `x_c` for a symmetric box.
    pub fn half_width(&self) -> Option<f64> {
        self.is_symmetric().then_some(self.right)
    }

    pub fn value(&self, x: f64) -> PotentialValue {
        if x > self.left && x < self.right {
            PotentialValue::Finite(self.harmonic(x))
        } else {
            PotentialValue::Wall
        }
    }

    /// Harmonic part without the wall test.
    pub fn harmonic(&self, x: f64) -> f64 {
        let u = x - self.center;
        0.5 * self.k * u * u
    }

    /// Largest finite value inside the box (reached at a wall).
    pub fn max_inside(&self) -> f64 {
        self.harmonic(self.left).max(self.harmonic(self.right))
    }

    pub fn min_inside(&self) -> f64 {
        self.harmonic(self.center.clamp(self.left, self.right))
    }

    pub fn mirrored(&self) -> Self {
        Self {
            k: self.k,
            center: -self.center,
            left: -self.right,
            right: -self.left,
        }
    }

    pub fn grid(&self, n_points: usize) -> Result<Grid> {
        Grid::new(n_points, self.left, self.right)
    }
}
