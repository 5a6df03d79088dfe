//! Imaginary-time propagation to ground and excited states.
//!
//! Each step solves `(1 + Δτ/2 H) ψ' = (1 - Δτ/2 H) ψ`, projects out the
//! lower states, renormalizes and re-evaluates `<H>` with the same stencil.

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::hamiltonian::GridHamiltonian;
use crate::penta::{PentaLu, PentaSystem};
use crate::potential::ConfinedPotential;
use crate::state::{Eigenpair, Provenance};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub dtau: f64,
    pub energy_tol: f64,
    pub max_steps: usize,
    /// Steps between Gram–Schmidt projections.
    pub ortho_interval: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            dtau: 1e-4,
            energy_tol: 1e-12,
            max_steps: 2_000_000,
            ortho_interval: 1,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.dtau > 0.0 && self.dtau.is_finite()) {
            return Err(Error::domain(format!("dtau must be positive, got {}", self.dtau)));
        }
        if !(self.energy_tol > 0.0) {
            return Err(Error::domain("energy_tol must be positive"));
        }
        if self.max_steps == 0 || self.ortho_interval == 0 {
            return Err(Error::domain("max_steps and ortho_interval must be >= 1"));
        }
        Ok(())
    }
}

/// Number of consecutive sub-tolerance energy changes that count as converged.
pub const SETTLED_CHECKS: usize = 3;

/// Full-grid samples (walls included) and the running energy.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffusionState {
    pub values: Vec<f64>,
    pub step_index: usize,
    pub energy_estimate: f64,
}

/// Physicists' Hermite polynomial by the three-term recurrence.
pub fn hermite(m: usize, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * x);
    if m == 0 {
        return prev;
    }
    for k in 1..m {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `H_m(x - d) exp(-(x - d)²)` on the grid, zero at the walls, unit norm.
pub fn initial_guess(m: usize, grid: &Grid, pot: &ConfinedPotential) -> DiffusionState {
    let n = grid.n_points();
    let mut values = vec![0.0; n];
    for (j, v) in values.iter_mut().enumerate().take(n - 1).skip(1) {
        let u = grid.x(j) - pot.center();
        *v = hermite(m, u) * (-u * u).exp();
    }
    normalize(&mut values, grid.spacing());
    DiffusionState { values, step_index: 0, energy_estimate: f64::NAN }
}

fn normalize(values: &mut [f64], h: f64) {
    let norm = (values.iter().map(|v| v * v).sum::<f64>() * h).sqrt();
    if norm > 0.0 {
        values.iter_mut().for_each(|v| *v /= norm);
    }
}

/// Factored propagator for one `(potential, grid, Δτ)`.
#[derive(Debug, Clone)]
pub struct Propagator {
    hamiltonian: GridHamiltonian,
    lhs: PentaLu,
    rhs: PentaSystem,
    dtau: f64,
}

impl Propagator {
    pub fn new(pot: &ConfinedPotential, grid: &Grid, dtau: f64) -> Result<Self> {
        let hamiltonian = GridHamiltonian::new(pot, grid);
        let half = 0.5 * dtau;
        let lhs = hamiltonian.shifted_system(half).factor().map_err(|e| match e {
            Error::StepSize { row, pivot, .. } => Error::StepSize { row, pivot, dtau },
            other => other,
        })?;
        let rhs = hamiltonian.shifted_system(-half);
        Ok(Self { hamiltonian, lhs, rhs, dtau })
    }

    pub fn dtau(&self) -> f64 {
        self.dtau
    }

    pub fn hamiltonian(&self) -> &GridHamiltonian {
        &self.hamiltonian
    }

    /// Energy of full-grid samples under the propagation stencil.
    pub fn energy(&self, values: &[f64]) -> f64 {
        let n = values.len();
        self.hamiltonian.rayleigh(&values[1..n - 1])
    }
}

/// One propagation step followed by projection, normalization and energy update.
pub fn step(state: &mut DiffusionState, prop: &Propagator, lower: &[Eigenpair], project: bool) {
    let n = state.values.len();
    let h = prop.hamiltonian.spacing();
    let inner = &mut state.values[1..n - 1];
    let mut next = vec![0.0; inner.len()];
    prop.rhs.mul(inner, &mut next);
    prop.lhs.solve_in_place(&mut next);
    if project {
        for phi in lower {
            let p = &phi.values[1..n - 1];
            let (dot, pp) = p
                .iter()
                .zip(&next)
                .fold((0.0, 0.0), |(d, q), (a, b)| (d + a * b, q + a * a));
            let c = dot / pp;
            next.iter_mut().zip(p).for_each(|(v, a)| *v -= c * a);
        }
    }
    normalize(&mut next, h);
    inner.copy_from_slice(&next);
    state.step_index += 1;
    state.energy_estimate = prop.hamiltonian.rayleigh(&next);
}

/// Step size used for state `n`.
///
/// The propagator damps mode `λ` by `(1 - Δτλ/2)/(1 + Δτλ/2)`, whose magnitude
/// returns towards one for the stiffest grid modes. Those modes fall away
/// faster than the target only while `Δτ² λ_n λ_max` stays small, so the
/// requested step is capped at `1/√(λ_n λ_max)` using a min-max upper bound
/// for `λ_n`.
pub fn stable_dtau(pot: &ConfinedPotential, grid: &Grid, n: usize, dtau: f64) -> f64 {
    let width = pot.width();
    let level = ((n + 1) as f64 * PI / width).powi(2) / 2.0 + pot.max_inside();
    let h = grid.spacing();
    let stiffest = 8.0 / (3.0 * h * h) + pot.max_inside();
    dtau.min(1.0 / (level * stiffest).sqrt())
}

/// Longest imaginary time between successive convergence checks.
pub const CHECK_SPAN: f64 = 0.5;

/// Imaginary time between convergence checks for state `n`: [`CHECK_SPAN`],
/// shortened to the inverse of the bare box spacing above level `n` when
/// the box is small and the gaps are large.
pub fn check_span(pot: &ConfinedPotential, n: usize) -> f64 {
    let width = pot.width();
    let gap = (2 * n + 3) as f64 * PI * PI / (2.0 * width * width);
    CHECK_SPAN.min(1.0 / gap)
}

/// Propagates state `n` until the energy settles.
///
/// The energy is compared across spans of [`check_span`] imaginary time
/// rather than single steps: a per-step change shrinks with `Δτ`, so a
/// per-step test would stop while the state still carries an excited
/// admixture of order `√(tol / (gap Δτ))`. A check passes when the change is
/// below `energy_tol · max(1, |ε|)`; [`SETTLED_CHECKS`] consecutive passes
/// end the run.
///
/// `lower` must hold the converged states `0..n`.
pub fn solve_state(
    pot: &ConfinedPotential,
    grid: &Grid,
    n: usize,
    config: &SolverConfig,
    lower: &[Eigenpair],
) -> Result<Eigenpair> {
    config.validate()?;
    let dtau = stable_dtau(pot, grid, n, config.dtau);
    let prop = Propagator::new(pot, grid, dtau)?;
    let span = ((check_span(pot, n) / dtau).ceil() as usize).max(1);
    let mut state = initial_guess(n, grid, pot);
    step(&mut state, &prop, lower, true);
    let mut settled = 0;
    let mut reference = state.energy_estimate;
    while state.step_index < config.max_steps {
        let project = state.step_index % config.ortho_interval == 0;
        step(&mut state, &prop, lower, project);
        if state.step_index % span != 0 {
            continue;
        }
        let energy = state.energy_estimate;
        if (energy - reference).abs() < config.energy_tol * energy.abs().max(1.0) {
            settled += 1;
        } else {
            settled = 0;
        }
        reference = energy;
        if settled >= SETTLED_CHECKS {
            if !project {
                step(&mut state, &prop, lower, true);
            }
            return Ok(Eigenpair {
                index: n,
                energy: state.energy_estimate,
                grid: *grid,
                values: state.values,
                provenance: Provenance::Itp,
            });
        }
    }
    Err(Error::Convergence {
        state: n,
        steps: state.step_index,
        last_energy: state.energy_estimate,
    })
}

/// States `0..=n_max`, each orthogonalized against the ones below.
pub fn solve_spectrum(
    pot: &ConfinedPotential,
    grid: &Grid,
    n_max: usize,
    config: &SolverConfig,
) -> Result<Vec<Eigenpair>> {
    let mut states: Vec<Eigenpair> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let s = solve_state(pot, grid, n, config, &states)
            .map_err(|e| Error::Ladder { index: n, source: Box::new(e) })?;
        states.push(s);
    }
    Ok(states)
}
