//! Closed-form and root-found solutions for the centred well.
//!
//! Even and odd eigenfunctions of `-1/2 d²/dx² + 1/2 ω² x²` are
//! `e^{-ωx²/2} ₁F₁(1/4 - ε/2ω; 1/2; ωx²)` and
//! `x e^{-ωx²/2} ₁F₁(3/4 - ε/2ω; 3/2; ωx²)`; the walls at `±L` quantize `ε`
//! through the zeros of the `₁F₁` factor at `x = L`.

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::hypergeom::kummer_1f1;
use crate::potential::ConfinedPotential;
use crate::quadrature::simpson;
use crate::state::{Eigenpair, Parity, Provenance};
use std::f64::consts::PI;

/// Energy step of the bracketing scan.
pub const SCAN_STEP: f64 = 0.1;
/// Default bisection tolerance on the energy.
pub const ROOT_TOL: f64 = 1e-12;

/// Oscillator of angular frequency `omega` between walls at `±half_width`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxedOscillator {
    omega: f64,
    half_width: f64,
}

impl BoxedOscillator {
    pub fn new(omega: f64, half_width: f64) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::domain(format!("omega must be positive, got {omega}")));
        }
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(Error::domain(format!("half width must be positive, got {half_width}")));
        }
        Ok(Self { omega, half_width })
    }

    /// Requires a centred well with `k > 0`.
    pub fn from_potential(pot: &ConfinedPotential) -> Result<Self> {
        let half = pot
            .half_width()
            .ok_or_else(|| Error::domain("exact solutions need a centred well in a symmetric box"))?;
        Self::new(pot.k().sqrt(), half)
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    fn series_params(parity: Parity) -> (f64, f64) {
        match parity {
            Parity::Even => (0.25, 0.5),
            Parity::Odd => (0.75, 1.5),
        }
    }

    /// `₁F₁` factor of the `parity` solution evaluated at the wall.
    pub fn quantization(&self, parity: Parity, energy: f64) -> Result<f64> {
        let (a0, b) = Self::series_params(parity);
        let l = self.half_width;
        kummer_1f1(a0 - energy / (2.0 * self.omega), b, self.omega * l * l)
    }

    /// Scan ceiling used when bracketing the lowest `count` levels.
    pub fn ceiling(&self, count: usize) -> f64 {
        let l = self.half_width;
        let pib = (count as f64 * PI / l).powi(2) / 8.0;
        10.0 * (pib + 0.5 * self.omega * self.omega * l * l)
    }

    /// The lowest `count` levels in ascending order.
    ///
    /// Both parities are scanned upward from zero in steps of [`SCAN_STEP`];
    /// each sign change is refined by bisection to `tol`.
    pub fn eigenvalues(&self, count: usize, tol: f64) -> Result<Vec<f64>> {
        let want_even = count.div_ceil(2);
        let want_odd = count / 2;
        let mut even = Vec::with_capacity(want_even);
        let mut odd = Vec::with_capacity(want_odd);
        let ceiling = self.ceiling(count);
        let mut lo = 0.0;
        let mut f_even = self.quantization(Parity::Even, lo)?;
        let mut f_odd = self.quantization(Parity::Odd, lo)?;
        let mut k = 0usize;
        while even.len() < want_even || odd.len() < want_odd {
            k += 1;
            let hi = k as f64 * SCAN_STEP;
            if hi > ceiling {
                let state = if even.len() < want_even { 2 * even.len() } else { 2 * odd.len() + 1 };
                return Err(Error::RootSearch { state, ceiling });
            }
            if even.len() < want_even {
                let f = self.quantization(Parity::Even, hi)?;
                if f == 0.0 || f.signum() != f_even.signum() {
                    even.push(self.bisect(Parity::Even, lo, hi, f_even, tol)?);
                }
                f_even = f;
            }
            if odd.len() < want_odd {
                let f = self.quantization(Parity::Odd, hi)?;
                if f == 0.0 || f.signum() != f_odd.signum() {
                    odd.push(self.bisect(Parity::Odd, lo, hi, f_odd, tol)?);
                }
                f_odd = f;
            }
            lo = hi;
        }
        let mut all: Vec<f64> = even.into_iter().chain(odd).collect();
        all.sort_by(f64::total_cmp);
        Ok(all)
    }

    fn bisect(&self, parity: Parity, mut lo: f64, mut hi: f64, mut f_lo: f64, tol: f64) -> Result<f64> {
        if f_lo == 0.0 {
            return Ok(lo);
        }
        for _ in 0..200 {
            if hi - lo <= tol {
                break;
            }
            let mid = 0.5 * (lo + hi);
            let f = self.quantization(parity, mid)?;
            if f == 0.0 {
                return Ok(mid);
            }
            if f.signum() == f_lo.signum() {
                lo = mid;
                f_lo = f;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    pub fn eigenvalue(&self, n: usize, tol: f64) -> Result<f64> {
        Ok(self.eigenvalues(n + 1, tol)?[n])
    }

    /// Unnormalized eigenfunction shape at energy `energy`.
    pub fn profile(&self, parity: Parity, energy: f64, x: f64) -> Result<f64> {
        let (a0, b) = Self::series_params(parity);
        let z = self.omega * x * x;
        let f = kummer_1f1(a0 - energy / (2.0 * self.omega), b, z)? * (-0.5 * z).exp();
        Ok(match parity {
            Parity::Even => f,
            Parity::Odd => x * f,
        })
    }

    /// Normalized state `n` sampled on a grid spanning `[-L, L]`.
    pub fn wavefunction(&self, n: usize, grid: &Grid, tol: f64) -> Result<Eigenpair> {
        let energy = self.eigenvalue(n, tol)?;
        self.wavefunction_at(n, energy, grid)
    }

    /// Samples state `n` at an already known energy.
    pub fn wavefunction_at(&self, n: usize, energy: f64, grid: &Grid) -> Result<Eigenpair> {
        let l = self.half_width;
        if !grid.spans(-l, l) {
            return Err(Error::domain(format!(
                "grid [{}, {}] does not span [-{l}, {l}]",
                grid.x_min(),
                grid.x_max()
            )));
        }
        let parity = Parity::of(n);
        let mut values = grid
            .points()
            .iter()
            .map(|&x| self.profile(parity, energy, x))
            .collect::<Result<Vec<f64>>>()?;
        let density: Vec<f64> = values.iter().map(|v| v * v).collect();
        let norm = simpson(&density, grid.spacing()).sqrt();
        values.iter_mut().for_each(|v| *v /= norm);
        Ok(Eigenpair {
            index: n,
            energy,
            grid: *grid,
            values,
            provenance: Provenance::Exact,
        })
    }
}

/// Level `n` of the unit-force-constant well in `[-x_c, x_c]`.
pub fn scho_eigenvalue(n: usize, x_c: f64, tol: f64) -> Result<f64> {
    BoxedOscillator::new(1.0, x_c)?.eigenvalue(n, tol)
}

/// State `n` of the unit-force-constant well on a grid spanning `[-x_c, x_c]`.
pub fn scho_wavefunction(n: usize, x_c: f64, grid: &Grid) -> Result<Eigenpair> {
    BoxedOscillator::new(1.0, x_c)?.wavefunction(n, grid, ROOT_TOL)
}

/// Particle-in-a-box level `n` (0-based) for the box `[-x_c, x_c]`.
pub fn pib_energy(n: usize, x_c: f64) -> f64 {
    ((n + 1) as f64 * PI).powi(2) / (8.0 * x_c * x_c)
}

/// Normalized box eigenfunction `n` (0-based) on a grid spanning `[b1, b2]`.
pub fn pib_wavefunction(n: usize, grid: &Grid) -> Eigenpair {
    let width = grid.x_max() - grid.x_min();
    let k = (n + 1) as f64 * PI / width;
    let amp = (2.0 / width).sqrt();
    let mut values: Vec<f64> = grid.points().iter().map(|x| amp * (k * (x - grid.x_min())).sin()).collect();
    values[0] = 0.0;
    *values.last_mut().unwrap() = 0.0;
    Eigenpair {
        index: n,
        energy: k * k / 2.0,
        grid: *grid,
        values,
        provenance: Provenance::Exact,
    }
}

/// Position-space measures of a box eigenstate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PibMeasures {
    pub shannon: f64,
    pub onicescu: f64,
    pub fisher: f64,
}

/// Closed forms for box level `level = 1, 2, ...` in `[-x_c, x_c]`.
pub fn pib_measures(level: usize, x_c: f64) -> Result<PibMeasures> {
    if level == 0 {
        return Err(Error::domain("box levels are numbered from 1"));
    }
    let n = level as f64;
    Ok(PibMeasures {
        shannon: (4.0 * x_c).ln() - 1.0,
        onicescu: 3.0 / (4.0 * x_c),
        fisher: (n * PI / x_c).powi(2),
    })
}
