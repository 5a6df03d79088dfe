//! Five-point finite-difference Hamiltonian on the interior of a walled grid.
//!
//! The row next to each wall needs `ψ` one step beyond the wall. Dirichlet
//! eigenfunctions continue oddly through the wall, so that ghost value is
//! taken as `-ψ_1`; the matrix stays symmetric and fourth order up to the
//! boundary.

use crate::grid::Grid;
use crate::penta::PentaSystem;
use crate::potential::ConfinedPotential;

const C0: f64 = -5.0 / 2.0;
const C1: f64 = 4.0 / 3.0;
const C2: f64 = -1.0 / 12.0;

/// `H = -1/2 D₂ + V` acting on samples `1..n_points-1` of a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridHamiltonian {
    h: f64,
    diag: Vec<f64>,
    potential: Vec<f64>,
    near: f64,
    far: f64,
}

impl GridHamiltonian {
    pub fn new(pot: &ConfinedPotential, grid: &Grid) -> Self {
        let h = grid.spacing();
        let m = grid.n_points() - 2;
        let scale = -0.5 / (h * h);
        let potential: Vec<f64> = (1..=m).map(|j| pot.harmonic(grid.x(j))).collect();
        let mut diag: Vec<f64> = potential.iter().map(|v| scale * C0 + v).collect();
        // Odd reflection folds the far stencil tap back onto the first row.
        diag[0] -= scale * C2;
        diag[m - 1] -= scale * C2;
        Self {
            h,
            diag,
            potential,
            near: scale * C1,
            far: scale * C2,
        }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn spacing(&self) -> f64 {
        self.h
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diag
    }

    pub fn near_coupling(&self) -> f64 {
        self.near
    }

    pub fn far_coupling(&self) -> f64 {
        self.far
    }

    /// `out = H psi` on interior samples.
    pub fn apply(&self, psi: &[f64], out: &mut [f64]) {
        let m = self.dim();
        debug_assert!(psi.len() == m && out.len() == m);
        for i in 0..m {
            let mut s = self.diag[i] * psi[i];
            if i >= 1 {
                s += self.near * psi[i - 1];
            }
            if i >= 2 {
                s += self.far * psi[i - 2];
            }
            if i + 1 < m {
                s += self.near * psi[i + 1];
            }
            if i + 2 < m {
                s += self.far * psi[i + 2];
            }
            out[i] = s;
        }
    }

    /// Rayleigh quotient `<ψ|H|ψ> / <ψ|ψ>` with the plain grid inner product.
    ///
    /// The kinetic part is summed by parts as squared differences, which
    /// avoids the cancellation of `Σ ψ (D₂ψ)` when `1/h²` is large.
    pub fn rayleigh(&self, psi: &[f64]) -> f64 {
        let m = psi.len();
        let at = |i: isize| -> f64 {
            if i < 0 || i >= m as isize {
                0.0
            } else {
                psi[i as usize]
            }
        };
        let mut near = 0.0;
        let mut far = 0.0;
        for i in -2..m as isize {
            let d1 = at(i + 1) - at(i);
            let d2 = at(i + 2) - at(i);
            near += d1 * d1;
            far += d2 * d2;
        }
        let ghost = psi[0] * psi[0] + psi[m - 1] * psi[m - 1];
        let kinetic = (C1 * near + C2 * far + C2 * ghost) / (2.0 * self.h * self.h);
        let potential: f64 = psi.iter().zip(&self.potential).map(|(a, v)| v * a * a).sum();
        let norm: f64 = psi.iter().map(|a| a * a).sum();
        (kinetic + potential) / norm
    }

    /// Upper bound on the spectrum: largest symbol of the stencil plus max V.
    pub fn spectral_bound(&self) -> f64 {
        let vmax = self.potential.iter().fold(0.0f64, |m, v| m.max(*v));
        8.0 / (3.0 * self.h * self.h) + vmax
    }

    /// Banded form of `1 + c H`.
    pub fn shifted_system(&self, c: f64) -> PentaSystem {
        let m = self.dim();
        let mut sys = PentaSystem::zeros(m);
        for i in 0..m {
            sys.diag[i] = 1.0 + c * self.diag[i];
            sys.sub1[i] = c * self.near;
            sys.sup1[i] = c * self.near;
            sys.sub2[i] = c * self.far;
            sys.sup2[i] = c * self.far;
        }
        sys
    }
}

/// Five-point second derivative of samples on a walled grid, with the same
/// odd-reflection ghost points. End samples are returned as zero.
pub fn second_derivative(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    let mut out = vec![0.0; n];
    if n < 5 {
        return out;
    }
    let at = |j: isize| -> f64 {
        if j < 0 {
            -values[(-j) as usize]
        } else if j as usize >= n {
            -values[2 * (n - 1) - j as usize]
        } else {
            values[j as usize]
        }
    };
    let inv = 1.0 / (h * h);
    for j in 1..n - 1 {
        let k = j as isize;
        out[j] = inv
            * (C2 * (at(k - 2) + at(k + 2)) + C1 * (at(k - 1) + at(k + 1)) + C0 * values[j]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn free_particle_row() {
        let pot = ConfinedPotential::symmetric(0.0, 1.0).unwrap();
        let grid = pot.grid(101).unwrap();
        let h = grid.spacing();
        let ham = GridHamiltonian::new(&pot, &grid);
        let dtau = 1e-4;
        let sys = ham.shifted_system(0.5 * dtau);
        let expect = 1.0 + 0.5 * dtau * (5.0 / (4.0 * h * h));
        assert!((sys.diag[10] - expect).abs() < 1e-14 * expect);
    }

    #[test]
    fn annihilates_constants_on_a_ring() {
        // Periodic version of the same stencil: the coefficients sum to zero.
        let n = 32;
        let h = 0.1;
        let dtau = 1e-3;
        let c = vec![0.7; n];
        let lap = |v: &[f64], i: usize| {
            let g = |k: isize| v[((i as isize + k).rem_euclid(n as isize)) as usize];
            (C2 * (g(-2) + g(2)) + C1 * (g(-1) + g(1)) + C0 * g(0)) / (h * h)
        };
        for i in 0..n {
            let rhs = c[i] + 0.5 * dtau * 0.5 * lap(&c, i);
            let lhs = c[i] - 0.5 * dtau * 0.5 * lap(&c, i);
            assert!((rhs - c[i]).abs() < 1e-10 && (lhs - c[i]).abs() < 1e-10);
        }
    }

    #[test]
    fn box_levels_converge_at_fourth_order() {
        let pot = ConfinedPotential::symmetric(0.0, 1.0).unwrap();
        let exact = PI * PI / 8.0;
        let err = |n: usize| {
            let grid = pot.grid(n).unwrap();
            let ham = GridHamiltonian::new(&pot, &grid);
            let psi: Vec<f64> = (1..n - 1).map(|j| (PI * (grid.x(j) + 1.0) / 2.0).sin()).collect();
            // Rayleigh quotient of the exact mode differs from the lowest
            // eigenvalue at second order only.
            (ham.rayleigh(&psi) - exact).abs()
        };
        let (e1, e2) = (err(41), err(81));
        assert!(e1 / e2 > 14.0, "ratio {}", e1 / e2);
    }

    #[test]
    fn rayleigh_matches_direct_product() {
        let pot = ConfinedPotential::new(1.7, 0.3, -1.0, 1.5).unwrap();
        let grid = Grid::new(41, -1.0, 1.5).unwrap();
        let ham = GridHamiltonian::new(&pot, &grid);
        let psi: Vec<f64> = (0..ham.dim()).map(|i| ((i * 7 % 11) as f64 - 4.0) * 0.1).collect();
        let mut hpsi = vec![0.0; psi.len()];
        ham.apply(&psi, &mut hpsi);
        let direct: f64 = psi.iter().zip(&hpsi).map(|(a, b)| a * b).sum::<f64>()
            / psi.iter().map(|a| a * a).sum::<f64>();
        assert!((ham.rayleigh(&psi) - direct).abs() < 1e-10 * direct.abs());
    }

    #[test]
    fn second_derivative_of_sine_mode() {
        let n = 401;
        let h = 2.0 / (n - 1) as f64;
        let f: Vec<f64> = (0..n).map(|j| (PI * j as f64 * h).sin()).collect();
        let d2 = second_derivative(&f, h);
        for j in 1..n - 1 {
            assert!((d2[j] + PI * PI * f[j]).abs() < 1e-7);
        }
    }
}
