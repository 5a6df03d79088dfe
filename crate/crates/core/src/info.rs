//! Shannon, Fisher and Onicescu measures of position and momentum densities.

use crate::quadrature::simpson;
use crate::spectral::MomentumDensity;
use crate::state::Eigenpair;
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use std::f64::consts::PI;

/// Lower bound on `S_x + S_p`.
pub const SHANNON_BOUND: f64 = 2.144_729_885_849_400_2; // 1 + ln π
/// Lower bound on `I_x I_p`.
pub const FISHER_BOUND: f64 = 4.0;
/// Upper bound on `E_x E_p`.
pub const ONICESCU_BOUND: f64 = 1.0 / (2.0 * PI);
/// One-sided tolerance applied to every bound check.
pub const BOUND_SLACK: f64 = 1e-9;
/// Relative density below which the Fisher integrand is clipped.
pub const FISHER_FLOOR: f64 = 1e-12;
/// Mesh refinement applied to momentum densities before the entropy sum.
pub const MOMENTUM_REFINEMENT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Position,
    Momentum,
}

/// Sampled probability density.
///
/// Position profiles are integrated with Simpson's rule over a walled grid;
/// momentum profiles with the periodic trapezoid rule over the FFT mesh.
#[derive(Debug, Clone)]
pub struct DensityProfile {
    pub values: Vec<f64>,
    pub spacing: f64,
    pub space: Space,
    /// Exact derivative of the density, when available.
    pub gradient: Option<Vec<f64>>,
}

impl DensityProfile {
    pub fn position(state: &Eigenpair) -> Self {
        Self {
            values: state.density(),
            spacing: state.grid.spacing(),
            space: Space::Position,
            gradient: None,
        }
    }

    pub fn momentum(md: &MomentumDensity) -> Self {
        Self {
            values: md.density.clone(),
            spacing: md.dp,
            space: Space::Momentum,
            gradient: Some(md.gradient.clone()),
        }
    }

    pub fn integrate(&self, f: &[f64]) -> f64 {
        match self.space {
            Space::Position => simpson(f, self.spacing),
            Space::Momentum => f.iter().sum::<f64>() * self.spacing,
        }
    }

    pub fn total(&self) -> f64 {
        self.integrate(&self.values)
    }
}

/// `-∫ ρ ln ρ`, with `0 ln 0 = 0` below `1e-300`.
///
/// At the zeros of a momentum density the integrand behaves like
/// `t² ln|t|`, which limits the mesh sum to third order in the spacing.
/// Momentum profiles are therefore resampled [`MOMENTUM_REFINEMENT`] times
/// more finely first; see [`refine_periodic`].
pub fn shannon(d: &DensityProfile) -> f64 {
    let entropy = |values: &[f64]| -> Vec<f64> {
        values.iter().map(|&r| if r < 1e-300 { 0.0 } else { -r * r.ln() }).collect()
    };
    match d.space {
        Space::Position => d.integrate(&entropy(&d.values)),
        Space::Momentum => match refine_periodic(&d.values, MOMENTUM_REFINEMENT) {
            Some(fine) => entropy(&fine).iter().sum::<f64>() * d.spacing / MOMENTUM_REFINEMENT as f64,
            None => d.integrate(&entropy(&d.values)),
        },
    }
}

/// Resamples a periodic, centred momentum density at `factor` times the
/// rate.
///
/// `|φ|²` of a state on `n` grid points is a trigonometric polynomial in
/// `p h` whose coefficients are the autocorrelation of the samples, so it is
/// determined exactly by its values on any mesh with at least `2n - 1`
/// points and can be re-evaluated by zero-padding the coefficients. Returns
/// `None` when the mesh is too coarse to hold the coefficients, detected by
/// a non-negligible highest coefficient.
pub fn refine_periodic(values: &[f64], factor: usize) -> Option<Vec<f64>> {
    let m = values.len();
    if factor < 2 || m < 4 || m % 2 != 0 {
        return None;
    }
    let half = m / 2;
    let mut coeffs: Vec<Complex<f64>> = (0..m).map(|k| Complex::new(values[(k + half) % m], 0.0)).collect();
    let mut planner = FftPlanner::new();
    planner.plan_fft_inverse(m).process(&mut coeffs);
    let largest = coeffs.iter().fold(0.0f64, |a, c| a.max(c.norm()));
    if coeffs[half].norm() > 1e-12 * largest {
        return None;
    }
    let big = m * factor;
    let mut fine = vec![Complex::new(0.0, 0.0); big];
    for l in 0..half {
        fine[l] = coeffs[l];
        if l > 0 {
            fine[big - l] = coeffs[m - l];
        }
    }
    planner.plan_fft_forward(big).process(&mut fine);
    let big_half = big / 2;
    Some((0..big).map(|s| (fine[(s + big_half) % big].re / m as f64).max(0.0)).collect())
}

/// `∫ ρ²`.
pub fn onicescu(d: &DensityProfile) -> f64 {
    let f: Vec<f64> = d.values.iter().map(|r| r * r).collect();
    d.integrate(&f)
}

/// `∫ ρ'² / ρ` with the default floor.
pub fn fisher(d: &DensityProfile) -> f64 {
    fisher_with_floor(d, FISHER_FLOOR)
}

/// `∫ ρ'² / ρ`, clipping the integrand where `ρ < floor · max ρ`.
///
/// Isolated clipped points (runs of at most two, such as a hard wall or a
/// node that falls on the mesh) are filled from their neighbours, since the
/// integrand there has a finite limit. Longer runs are deep tails and
/// contribute zero.
pub fn fisher_with_floor(d: &DensityProfile, floor: f64) -> f64 {
    let rho = &d.values;
    let n = rho.len();
    if n < 5 {
        return 0.0;
    }
    let gradient = match &d.gradient {
        Some(g) => g.clone(),
        None => finite_gradient(rho, d.spacing),
    };
    let cut = floor * rho.iter().fold(0.0f64, |m, v| m.max(*v));
    let mut f = vec![0.0; n];
    let mut clipped = vec![false; n];
    for j in 0..n {
        if rho[j] < cut || rho[j] <= 0.0 {
            clipped[j] = true;
        } else {
            f[j] = gradient[j] * gradient[j] / rho[j];
        }
    }
    fill_short_runs(&mut f, &clipped);
    d.integrate(&f)
}

/// Fourth-order central differences inside, lower order at the ends.
fn finite_gradient(rho: &[f64], h: f64) -> Vec<f64> {
    let n = rho.len();
    let mut g = vec![0.0; n];
    for j in 2..n - 2 {
        g[j] = (rho[j - 2] - 8.0 * rho[j - 1] + 8.0 * rho[j + 1] - rho[j + 2]) / (12.0 * h);
    }
    g[1] = (rho[2] - rho[0]) / (2.0 * h);
    g[n - 2] = (rho[n - 1] - rho[n - 3]) / (2.0 * h);
    g[0] = (-3.0 * rho[0] + 4.0 * rho[1] - rho[2]) / (2.0 * h);
    g[n - 1] = (3.0 * rho[n - 1] - 4.0 * rho[n - 2] + rho[n - 3]) / (2.0 * h);
    g
}

fn fill_short_runs(f: &mut [f64], clipped: &[bool]) {
    let n = f.len();
    let mut j = 0;
    while j < n {
        if !clipped[j] {
            j += 1;
            continue;
        }
        let start = j;
        while j < n && clipped[j] {
            j += 1;
        }
        let end = j; // exclusive
        if end - start > 2 {
            continue;
        }
        let left = start.checked_sub(1);
        let right = (end < n).then_some(end);
        match (left, right) {
            (Some(a), Some(b)) => {
                let (fa, fb) = (f[a], f[b]);
                for k in start..end {
                    let t = (k - a) as f64 / (b - a) as f64;
                    f[k] = fa + t * (fb - fa);
                }
            }
            (None, Some(b)) if b + 1 < n && !clipped[b + 1] => {
                let slope = f[b + 1] - f[b];
                for k in start..end {
                    f[k] = f[b] - slope * (b - k) as f64;
                }
            }
            (Some(a), None) if a >= 1 && !clipped[a - 1] => {
                let slope = f[a] - f[a - 1];
                for k in start..end {
                    f[k] = f[a] + slope * (k - a) as f64;
                }
            }
            _ => {}
        }
    }
}

/// All nine measures of a state and its momentum density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfoReport {
    pub s_x: f64,
    pub s_p: f64,
    pub s: f64,
    pub i_x: f64,
    pub i_p: f64,
    pub i: f64,
    pub e_x: f64,
    pub e_p: f64,
    pub e: f64,
    pub shannon_bound_ok: bool,
    pub fisher_bound_ok: bool,
    pub onicescu_bound_ok: bool,
}

impl InfoReport {
    pub fn from_parts(s_x: f64, s_p: f64, i_x: f64, i_p: f64, e_x: f64, e_p: f64) -> Self {
        let s = s_x + s_p;
        let i = i_x * i_p;
        let e = e_x * e_p;
        Self {
            s_x,
            s_p,
            s,
            i_x,
            i_p,
            i,
            e_x,
            e_p,
            e,
            shannon_bound_ok: s >= SHANNON_BOUND - BOUND_SLACK,
            fisher_bound_ok: i >= FISHER_BOUND - BOUND_SLACK,
            onicescu_bound_ok: e <= ONICESCU_BOUND + BOUND_SLACK,
        }
    }

    pub fn bounds_ok(&self) -> bool {
        self.shannon_bound_ok && self.fisher_bound_ok && self.onicescu_bound_ok
    }
}

pub fn full_report(state: &Eigenpair, md: &MomentumDensity) -> InfoReport {
    let x = DensityProfile::position(state);
    let p = DensityProfile::momentum(md);
    InfoReport::from_parts(shannon(&x), shannon(&p), fisher(&x), fisher(&p), onicescu(&x), onicescu(&p))
}
