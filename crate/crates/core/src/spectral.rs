//! Momentum-space densities from grid wavefunctions.
//!
//! `φ(p) = (1/√(2π)) ∫ ψ(x) e^{-ipx} dx` is evaluated on the whole FFT mesh
//! as `(h/√(2π)) Σ_j ψ_j e^{-ip x_j}`. The sum is exact for the sampled
//! function, so the discrete Parseval identity holds to rounding.

use crate::error::{Error, Result};
use crate::state::Eigenpair;
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use std::f64::consts::PI;

/// Default zero-padding multiplier.
pub const DEFAULT_PAD_FACTOR: usize = 16;

/// `|φ(p)|²` and its derivative on a centred, uniform momentum mesh.
#[derive(Debug, Clone)]
pub struct MomentumDensity {
    pub p_values: Vec<f64>,
    pub density: Vec<f64>,
    /// `d|φ|²/dp`, evaluated from the transform of `x ψ(x)`.
    pub gradient: Vec<f64>,
    pub dp: f64,
    /// Position mesh spacing of the source state.
    pub spacing: f64,
}

impl MomentumDensity {
    /// `Σ ρ dp`; the periodic trapezoid rule on the FFT mesh.
    pub fn total(&self) -> f64 {
        self.density.iter().sum::<f64>() * self.dp
    }
}

/// Transforms a grid state, zero-padded to `pad_factor` times the next power
/// of two above its length. A `pad_factor` of zero is treated as one.
pub fn to_momentum(state: &Eigenpair, pad_factor: usize) -> MomentumDensity {
    let grid = &state.grid;
    let n = state.values.len();
    let m = n.next_power_of_two() * pad_factor.max(1);
    let h = grid.spacing();

    let mut plain: Vec<Complex<f64>> = vec![Complex::new(0.0, 0.0); m];
    let mut moment: Vec<Complex<f64>> = vec![Complex::new(0.0, 0.0); m];
    for (j, &v) in state.values.iter().enumerate() {
        plain[j] = Complex::new(v, 0.0);
        moment[j] = Complex::new(grid.x(j) * v, 0.0);
    }
    let fft = FftPlanner::new().plan_fft_forward(m);
    fft.process(&mut plain);
    fft.process(&mut moment);

    // The DFT runs over j from 0; the physical phase e^{-ip x_min} is common
    // to both transforms and drops out of |φ|² and of Im(φ̄ φ').
    let scale2 = h * h / (2.0 * PI);
    let dp = 2.0 * PI / (m as f64 * h);
    let half = m / 2;
    let mut p_values = Vec::with_capacity(m);
    let mut density = Vec::with_capacity(m);
    let mut gradient = Vec::with_capacity(m);
    for s in 0..m {
        let k = (s + half) % m;
        let signed = k as isize - if k >= half { m as isize } else { 0 };
        p_values.push(signed as f64 * dp);
        let f = plain[k];
        let g = moment[k];
        density.push(scale2 * f.norm_sqr());
        gradient.push(2.0 * scale2 * (f.conj() * g).im);
    }
    MomentumDensity { p_values, density, gradient, dp, spacing: h }
}

/// `⟨p⟩` or `⟨p²⟩` of the state.
///
/// A hard-wall state has `ρ(p) ~ p⁻⁴`, so a plain mesh sum of `p² ρ`
/// converges only like the mesh spacing. Instead the moments are those of
/// the piecewise-linear interpolant of the samples, whose transform is the
/// mesh transform times `sinc²(ph/2)` on every alias band. Summing the bands
/// in closed form replaces `p` by `sin(ph)/h` and `p²` by `(2 sin(ph/2)/h)²`.
pub fn momentum_moment(md: &MomentumDensity, order: u32) -> Result<f64> {
    let h = md.spacing;
    let kernel: fn(f64, f64) -> f64 = match order {
        1 => |p, h| (p * h).sin() / h,
        2 => |p, h| (2.0 * (0.5 * p * h).sin() / h).powi(2),
        _ => return Err(Error::domain(format!("moment order must be 1 or 2, got {order}"))),
    };
    Ok(md.p_values.iter().zip(&md.density).map(|(&p, r)| kernel(p, h) * r).sum::<f64>() * md.dp)
}
