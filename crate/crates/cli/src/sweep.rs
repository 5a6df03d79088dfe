//! Runs a sweep specification point by point on a worker pool.

use crate::config::{Mode, Settings, Solver, SweepSpec, EXACT_CROSS_TOL, VARIATIONAL_CROSS_TOL};
use crate::report::{Measures, ReportRow};
use cho_core::exact::{BoxedOscillator, ROOT_TOL};
use cho_core::info::{fisher, onicescu, shannon, DensityProfile};
use cho_core::itp::solve_state;
use cho_core::perturbation::{pt_fisher_x, pt_onicescu_x0, pt_wavefunction, DEFAULT_TERMS};
use cho_core::semiclassical::{phase_area, tunneling_onset, tunneling_probability, turning_points};
use cho_core::spectral::to_momentum;
use cho_core::variational::solve_acho;
use cho_core::{ConfinedPotential, Eigenpair, Grid};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Tunneling probability above which a series counts as tunneling.
pub const ONSET_THRESHOLD: f64 = 1e-6;

/// Potential of one sweep point.
pub fn potential(mode: Mode, value: f64, settings: &Settings) -> cho_core::Result<ConfinedPotential> {
    match mode {
        Mode::SchoEta => ConfinedPotential::symmetric(value, 1.0),
        Mode::SchoXc => ConfinedPotential::symmetric(1.0, value),
        Mode::AchoDm => ConfinedPotential::shifted(value),
        Mode::AchoEta => ConfinedPotential::new(value, settings.center, -1.0, 1.0),
    }
}

/// Agreement between ITP and a reference solver over a whole sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossCheck {
    pub reference: Solver,
    /// Largest energy difference; relative for the variational reference.
    pub max_delta: f64,
    pub relative: bool,
    pub tol: f64,
    /// Points compared (both solvers succeeded).
    pub compared: usize,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.max_delta <= self.tol
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    /// Sweep value major, state minor, solvers in configured order.
    pub rows: Vec<ReportRow>,
    pub cross_checks: Vec<CrossCheck>,
}

impl SweepReport {
    pub fn error_rows(&self) -> usize {
        self.rows.iter().filter(|r| r.outcome.is_err()).count()
    }

    pub fn cross_checks_pass(&self) -> bool {
        self.cross_checks.iter().all(CrossCheck::passed)
    }
}

/// Solves every `(value, solver)` point, `workers` at a time.
pub fn run_sweep(spec: &SweepSpec, workers: usize) -> SweepReport {
    let jobs: Vec<(usize, Solver)> =
        (0..spec.values.len()).flat_map(|v| spec.solvers.iter().map(move |&s| (v, s))).collect();
    let slots: Vec<Mutex<Option<Vec<ReportRow>>>> = jobs.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers.clamp(1, jobs.len().max(1)) {
            scope.spawn(|| loop {
                let j = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(v, solver)) = jobs.get(j) else { break };
                let rows = solve_point(spec, spec.values[v], solver);
                *slots[j].lock().expect("no worker panics while holding a slot") = Some(rows);
            });
        }
    });
    let per_job: Vec<Vec<ReportRow>> =
        slots.into_iter().map(|s| s.into_inner().expect("slot lock").expect("every job ran")).collect();

    let n_solvers = spec.solvers.len();
    let mut rows = Vec::with_capacity(jobs.len() * spec.n_states());
    for v in 0..spec.values.len() {
        for k in 0..spec.n_states() {
            for s in 0..n_solvers {
                rows.push(per_job[v * n_solvers + s][k].clone());
            }
        }
    }
    fill_onsets(&mut rows, spec);
    let cross_checks = cross_checks(&rows, spec);
    SweepReport { rows, cross_checks }
}

fn fill_onsets(rows: &mut [ReportRow], spec: &SweepSpec) {
    for &solver in &spec.solvers {
        for n in spec.states.0..=spec.states.1 {
            let series: Vec<(f64, f64)> = rows
                .iter()
                .filter(|r| r.solver == solver && r.n == n)
                .filter_map(|r| r.measures().map(|m| (r.value, m.t_n)))
                .collect();
            let onset = tunneling_onset(&series, ONSET_THRESHOLD);
            for r in rows.iter_mut().filter(|r| r.solver == solver && r.n == n && r.outcome.is_ok()) {
                r.t_onset = onset;
            }
        }
    }
}

fn cross_checks(rows: &[ReportRow], spec: &SweepSpec) -> Vec<CrossCheck> {
    if !spec.solvers.contains(&Solver::Itp) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for reference in [Solver::Exact, Solver::Variational] {
        if !spec.solvers.contains(&reference) {
            continue;
        }
        let relative = reference == Solver::Variational;
        let tol = spec.settings.cross_tol.unwrap_or(if relative { VARIATIONAL_CROSS_TOL } else { EXACT_CROSS_TOL });
        let energy = |solver: Solver, value: f64, n: usize| {
            rows.iter()
                .find(|r| r.solver == solver && r.value == value && r.n == n)
                .and_then(|r| r.measures().map(|m| m.energy))
        };
        let mut max_delta = 0.0f64;
        let mut compared = 0;
        for r in rows.iter().filter(|r| r.solver == Solver::Itp) {
            if let (Some(a), Some(b)) = (r.measures().map(|m| m.energy), energy(reference, r.value, r.n)) {
                let d = if relative { ((a - b) / b).abs() } else { (a - b).abs() };
                max_delta = max_delta.max(d);
                compared += 1;
            }
        }
        out.push(CrossCheck { reference, max_delta, relative, tol, compared });
    }
    out
}

/// Rows `n_lo..=n_hi` for one sweep value and solver. Failures become error
/// rows; a ladder failure at state `k` also fails every state above `k`.
pub fn solve_point(spec: &SweepSpec, value: f64, solver: Solver) -> Vec<ReportRow> {
    let (lo, hi) = spec.states;
    let row = |n: usize, outcome: Result<Measures, String>| ReportRow {
        mode: spec.mode,
        value,
        n,
        solver,
        outcome,
        t_onset: None,
    };
    let settings = &spec.settings;
    let setup = potential(spec.mode, value, settings).and_then(|pot| Ok((pot, pot.grid(settings.grid_points)?)));
    let (pot, grid) = match setup {
        Ok(v) => v,
        Err(e) => return (lo..=hi).map(|n| row(n, Err(e.to_string()))).collect(),
    };
    let states = solve_states(&pot, &grid, spec, value, solver);
    (lo..=hi)
        .zip(states)
        .map(|(n, state)| {
            let outcome = state.map_err(|e| e.to_string()).and_then(|s| {
                let m = measure(&s, &pot, settings.pad_factor);
                let m = if solver == Solver::Pt { with_closed_forms(m, n, value) } else { m };
                check_finite(m)
            });
            row(n, outcome)
        })
        .collect()
}

fn solve_states(
    pot: &ConfinedPotential,
    grid: &Grid,
    spec: &SweepSpec,
    value: f64,
    solver: Solver,
) -> Vec<cho_core::Result<Eigenpair>> {
    let (lo, hi) = spec.states;
    let settings = &spec.settings;
    match solver {
        Solver::Exact => match BoxedOscillator::from_potential(pot).and_then(|o| Ok((o, o.eigenvalues(hi + 1, ROOT_TOL)?))) {
            Ok((osc, levels)) => (lo..=hi).map(|n| osc.wavefunction_at(n, levels[n], grid)).collect(),
            Err(e) => (lo..=hi).map(|_| Err(e.clone())).collect(),
        },
        Solver::Itp => {
            let mut ladder: Vec<Eigenpair> = Vec::with_capacity(hi + 1);
            let mut failure = None;
            for n in 0..=hi {
                match solve_state(pot, grid, n, &settings.itp, &ladder) {
                    Ok(s) => ladder.push(s),
                    Err(e) => {
                        failure = Some(cho_core::Error::Ladder { index: n, source: Box::new(e) });
                        break;
                    }
                }
            }
            (lo..=hi)
                .map(|n| match ladder.get(n) {
                    Some(s) => Ok(s.clone()),
                    None => Err(failure.clone().expect("missing state implies a failure")),
                })
                .collect()
        }
        Solver::Variational => match solve_acho(pot, grid, &settings.variational, hi + 1) {
            Ok(spectrum) => spectrum.states[lo..=hi].iter().cloned().map(Ok).collect(),
            Err(e) => (lo..=hi).map(|_| Err(e.clone())).collect(),
        },
        Solver::Pt => (lo..=hi).map(|n| pt_wavefunction(n, value, grid, DEFAULT_TERMS)).collect(),
    }
}

/// All report measures of a state in `pot`.
pub fn measure(state: &Eigenpair, pot: &ConfinedPotential, pad_factor: usize) -> Measures {
    let md = to_momentum(state, pad_factor);
    let x = DensityProfile::position(state);
    let p = DensityProfile::momentum(&md);
    let (s_x, s_p) = (shannon(&x), shannon(&p));
    let (i_x, i_p) = (fisher(&x), fisher(&p));
    let (e_x, e_p) = (onicescu(&x), onicescu(&p));
    let region = turning_points(pot, state.energy);
    Measures {
        energy: state.energy,
        s_x,
        s_p,
        s: s_x + s_p,
        i_x,
        i_p,
        i: i_x * i_p,
        e_x,
        e_p,
        e: e_x * e_p,
        a_n: phase_area(pot, state.energy),
        t_n: tunneling_probability(state, pot),
        l_allowed: region.l_allowed(),
        l_right_gap: region.l_right_gap(),
        parseval_defect: (p.total() - x.total()).abs(),
    }
}

/// Replaces the position Fisher and Onicescu values by the first-order
/// closed forms where they exist (`n ≤ 2` and `n = 0`).
fn with_closed_forms(mut m: Measures, n: usize, eta: f64) -> Measures {
    if let Ok(i_x) = pt_fisher_x(n, eta) {
        m.i_x = i_x;
        m.i = i_x * m.i_p;
    }
    if n == 0 {
        m.e_x = pt_onicescu_x0(eta);
        m.e = m.e_x * m.e_p;
    }
    m
}

fn check_finite(m: Measures) -> Result<Measures, String> {
    let all = crate::report::Field::ALL.iter().all(|f| f.get(&m).is_finite());
    if all {
        Ok(m)
    } else {
        Err("non-finite measure".into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{render_rows, Format};

    fn small(mode: Mode, values: Vec<f64>, states: (usize, usize), solvers: Vec<Solver>) -> SweepSpec {
        let spec = SweepSpec::new(mode, values, states, solvers).unwrap();
        let mut settings = spec.settings;
        settings.grid_points = 401;
        settings.pad_factor = 8;
        settings.variational.size = 20;
        settings.variational.iterations = 12;
        spec.with_settings(settings).unwrap()
    }

    #[test]
    fn rows_are_value_major_state_minor() {
        let spec = small(Mode::SchoXc, vec![2.0, 1.0], (0, 2), vec![Solver::Exact, Solver::Itp]);
        let report = run_sweep(&spec, 3);
        let keys: Vec<(f64, usize, Solver)> = report.rows.iter().map(|r| (r.value, r.n, r.solver)).collect();
        let mut want = Vec::new();
        for v in [2.0, 1.0] {
            for n in 0..3 {
                for s in [Solver::Exact, Solver::Itp] {
                    want.push((v, n, s));
                }
            }
        }
        assert_eq!(keys, want);
        assert_eq!(report.error_rows(), 0);
        assert_eq!(report.cross_checks.len(), 1);
        assert_eq!(report.cross_checks[0].compared, 6);
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let spec = small(Mode::SchoEta, vec![0.1, 1.0, 10.0], (0, 1), vec![Solver::Exact, Solver::Pt]);
        let one = render_rows(&run_sweep(&spec, 1).rows, Format::Csv);
        let four = render_rows(&run_sweep(&spec, 4).rows, Format::Csv);
        assert_eq!(one, four);
    }

    #[test]
    fn failures_become_error_rows() {
        let mut spec = small(Mode::SchoXc, vec![1.0, 2.0], (0, 1), vec![Solver::Itp]);
        spec.settings.itp.max_steps = 5;
        let report = run_sweep(&spec, 2);
        assert_eq!(report.rows.len(), 4);
        assert_eq!(report.error_rows(), 4);
        assert!(report.rows[0].outcome.as_ref().unwrap_err().contains("not converged"));
    }

    #[test]
    fn itp_cross_check_against_variational() {
        let mut spec = small(Mode::AchoDm, vec![1.0], (0, 1), vec![Solver::Variational, Solver::Itp]);
        spec.settings.variational.size = 30;
        let report = run_sweep(&spec, 1);
        let check = &report.cross_checks[0];
        assert!(check.relative);
        assert_eq!(check.compared, 2);
        // Both discretize the same five-point operator on the same grid.
        assert!(check.passed(), "{check:?}");
    }

    #[test]
    fn cross_check_failure_is_reported() {
        let mut spec = small(Mode::SchoXc, vec![1.0], (0, 0), vec![Solver::Exact, Solver::Itp]);
        spec.settings.grid_points = 41;
        spec.settings.cross_tol = Some(1e-12);
        let report = run_sweep(&spec, 1);
        assert!(!report.cross_checks_pass());
    }

    #[test]
    fn closed_forms_replace_numerics_for_pt() {
        let spec = small(Mode::SchoEta, vec![0.1], (0, 0), vec![Solver::Pt]);
        let m = *run_sweep(&spec, 1).rows[0].measures().unwrap();
        assert_eq!(m.i_x, pt_fisher_x(0, 0.1).unwrap());
        assert_eq!(m.e_x, pt_onicescu_x0(0.1));
        assert_eq!(m.i, m.i_x * m.i_p);
    }

    #[test]
    fn onset_marks_first_tunneling_value() {
        let spec = small(Mode::SchoXc, vec![0.5, 1.0, 3.0, 4.0], (0, 0), vec![Solver::Exact]);
        let report = run_sweep(&spec, 1);
        let onset = report.rows[0].t_onset.unwrap();
        let first = report.rows.iter().find(|r| r.measures().unwrap().t_n > ONSET_THRESHOLD).unwrap();
        assert_eq!(onset, first.value);
        assert!(report.rows.iter().all(|r| r.t_onset == Some(onset)));
    }
}
