use crate::grid::Grid;
use crate::quadrature::{simpson, simpson_dot};
use std::fmt;

/// Which solver produced a state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Itp,
    Exact,
    Variational,
    Perturbative,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Itp => "itp",
            Provenance::Exact => "exact",
            Provenance::Variational => "variational",
            Provenance::Perturbative => "pt",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A stationary state sampled on a grid that includes the walls.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenpair {
    pub index: usize,
    pub energy: f64,
    pub grid: Grid,
    pub values: Vec<f64>,
    pub provenance: Provenance,
}

impl Eigenpair {
    pub fn density(&self) -> Vec<f64> {
        self.values.iter().map(|v| v * v).collect()
    }

    pub fn norm_squared(&self) -> f64 {
        simpson(&self.density(), self.grid.spacing())
    }

    pub fn overlap(&self, other: &Eigenpair) -> f64 {
        simpson_dot(&self.values, &other.values, self.grid.spacing())
    }

    /// Sign changes strictly inside the box, ignoring samples below
    /// `1e-8 max|ψ|` so that exponentially small tails do not count.
    pub fn interior_sign_changes(&self) -> usize {
        let cut = 1e-8 * self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let n = self.values.len();
        let mut last = 0.0f64;
        let mut changes = 0;
        for &v in &self.values[1..n - 1] {
            if v.abs() <= cut {
                continue;
            }
            if last != 0.0 && last.signum() != v.signum() {
                changes += 1;
            }
            last = v;
        }
        changes
    }
}
