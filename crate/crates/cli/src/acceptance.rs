//! The acceptance suite: one check per reference result or invariant, each
//! reporting pass/fail with the numbers behind the verdict.

use crate::config::{Mode, Solver, SweepSpec};
use crate::oracle::{kummer_series, symmetric_eigenvalues};
use crate::report::{render_rows, Field, Format, ReportRow};
use crate::sweep::{measure, run_sweep, SweepReport};
use cho_core::eigen::{diagonalize, Matrix};
use cho_core::exact::{scho_wavefunction, BoxedOscillator, ROOT_TOL};
use cho_core::hypergeom::kummer_1f1;
use cho_core::info::{onicescu, shannon, DensityProfile};
use cho_core::itp::solve_spectrum;
use cho_core::perturbation::{pt_energy, pt_fisher_x, pt_onicescu_x0};
use cho_core::semiclassical::phase_area;
use cho_core::spectral::DEFAULT_PAD_FACTOR;
use cho_core::variational::{solve_acho, VariationalConfig};
use cho_core::{ConfinedPotential, Grid, SolverConfig};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

const GRID_POINTS: usize = 2002;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {} ({:.1} s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

pub const TITLES: [&str; 10] = [
    "Table I energies",
    "Table VI position measures",
    "Table VII energies",
    "Table VIII entropies",
    "Table V closed forms",
    "bound suite",
    "semiclassical limits",
    "trend properties",
    "oracle equivalence",
    "determinism",
];

/// Tracks the worst deviation and the entries that miss a tolerance.
struct Tally {
    tol: f64,
    worst: f64,
    worst_at: String,
    misses: Vec<String>,
    checked: usize,
}

impl Tally {
    fn new(tol: f64) -> Self {
        Self { tol, worst: 0.0, worst_at: String::new(), misses: Vec::new(), checked: 0 }
    }

    fn check(&mut self, label: impl Into<String>, got: f64, want: f64, relative: bool) {
        let dev = if relative { ((got - want) / want).abs() } else { (got - want).abs() };
        let label = label.into();
        self.checked += 1;
        if !(dev <= self.worst) {
            self.worst = dev;
            self.worst_at = label.clone();
        }
        if !(dev <= self.tol) {
            self.misses.push(format!("{label}: {got:.10} vs {want} (Δ {dev:.1e})"));
        }
    }

    fn ok(&self) -> bool {
        self.misses.is_empty()
    }

    fn summary(&self, what: &str) -> String {
        let mut s = match self.worst_at.as_str() {
            "" => format!("{what}: {} checked, all exact", self.checked),
            at => format!("{what}: {} checked, worst {:.1e} at {at}", self.checked, self.worst),
        };
        if !self.misses.is_empty() {
            s.push_str(&format!("; {} over {:.0e}: {}", self.misses.len(), self.tol, self.misses.join("; ")));
        }
        s
    }
}

/// Reference Table I exact levels for η = 0.001, 0.01, 0.1 and n = 0..4.
const TABLE_I_EXACT: [(f64, [f64; 5]); 3] = [
    (0.001, [1.2337658950, 4.9349435363, 11.103460360, 19.7393691364, 30.8426763673]),
    (0.01, [1.23435394, 4.93621550, 11.10485905, 19.74081215, 30.84413990]),
    (0.1, [1.240229, 4.948930, 11.118847, 19.755243, 30.858776]),
];

/// Reference Table I first-order levels, as tabulated.
const TABLE_I_PT: [[f64; 5]; 3] = [
    [1.2337658956, 4.9349435369, 11.103460359, 19.7393691362, 30.8426763672],
    [1.23435400, 4.93621556, 11.10485904, 19.74081214, 30.84413989],
    [1.240235, 4.948935, 11.118846, 19.755242, 30.868775],
];

fn criterion_1() -> (bool, String) {
    let start = Instant::now();
    let mut exact = Tally::new(1e-7);
    let mut closed = Tally::new(1e-9);
    let mut printed_pt = Tally::new(1e-7);
    for ((eta, row), pt_row) in TABLE_I_EXACT.iter().zip(TABLE_I_PT) {
        let levels = BoxedOscillator::new(eta.sqrt(), 1.0).and_then(|o| o.eigenvalues(5, ROOT_TOL));
        let levels = match levels {
            Ok(l) => l,
            Err(e) => return (false, format!("eta={eta}: {e}")),
        };
        for n in 0..5 {
            let label = format!("eta={eta} n={n}");
            exact.check(label.clone(), levels[n], row[n], false);
            let q = ((n + 1) as f64 * PI).powi(2);
            let first_order = q / 8.0 + eta * (1.0 / 6.0 - 1.0 / q);
            closed.check(label.clone(), pt_energy(n, *eta), first_order, false);
            printed_pt.check(label, pt_energy(n, *eta), pt_row[n], false);
        }
    }
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(10);
    let detail = format!(
        "{} | {} | reference PT column (informational) {} | runtime {:.2} s < 10 s: {fast}",
        exact.summary("exact vs reference"),
        closed.summary("PT vs first-order formula"),
        printed_pt.summary("PT vs reference"),
        elapsed.as_secs_f64()
    );
    (exact.ok() && closed.ok() && fast, detail)
}

/// Reference Table VI reference values: `(x_c, S_x[n], E_x[n])`.
const TABLE_VI: [(f64, [f64; 5], [f64; 5]); 3] = [
    (
        0.25,
        [-1.0000307, -1.0000019, -1.0000003, -1.0000001, -0.9999999],
        [3.0001200, 3.0000075, 3.0000014, 3.0000005, 3.0000001],
    ),
    (
        2.0,
        [0.9603491, 1.0625421, 1.0749785, 1.0776239, 1.0786018],
        [0.4347291, 0.3832622, 0.3775772, 0.3761693, 0.3755620],
    ),
    (
        5.0,
        [1.0767573, 1.3427277, 1.4986082, 1.6097006, 1.6964627],
        [0.3989422, 0.2992067, 0.2555724, 0.2290810, 0.2106061],
    ),
];

fn criterion_2() -> (bool, String) {
    let start = Instant::now();
    let mut printed = Tally::new(1e-5);
    let mut agree = Tally::new(1e-6);
    for (x_c, s_row, e_row) in TABLE_VI {
        let pot = ConfinedPotential::symmetric(1.0, x_c).expect("valid well");
        let grid = pot.grid(GRID_POINTS).expect("valid grid");
        let itp = match solve_spectrum(&pot, &grid, 4, &SolverConfig::default()) {
            Ok(s) => s,
            Err(e) => return (false, format!("x_c={x_c}: {e}")),
        };
        for n in 0..5 {
            let exact = match scho_wavefunction(n, x_c, &grid) {
                Ok(s) => s,
                Err(e) => return (false, format!("x_c={x_c} n={n}: {e}")),
            };
            let (a, b) = (DensityProfile::position(&itp[n]), DensityProfile::position(&exact));
            let (s_itp, e_itp, s_ex, e_ex) = (shannon(&a), onicescu(&a), shannon(&b), onicescu(&b));
            for (tag, s, e) in [("itp", s_itp, e_itp), ("exact", s_ex, e_ex)] {
                printed.check(format!("S_x {tag} x_c={x_c} n={n}"), s, s_row[n], false);
                printed.check(format!("E_x {tag} x_c={x_c} n={n}"), e, e_row[n], false);
            }
            agree.check(format!("S_x x_c={x_c} n={n}"), s_itp, s_ex, false);
            agree.check(format!("E_x x_c={x_c} n={n}"), e_itp, e_ex, false);
        }
    }
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(120);
    let detail = format!(
        "{} | {} | runtime {:.1} s < 120 s: {fast}",
        printed.summary("vs reference"),
        agree.summary("itp vs exact"),
        elapsed.as_secs_f64()
    );
    (printed.ok() && agree.ok() && fast, detail)
}

/// Reference Table VII levels (doubled convention).
const TABLE_VII: [(f64, [f64; 6]); 4] = [
    (0.36, [2.7177633960054, 10.283146010610, 22.648848755052, 39.929984298830, 62.140768627508, 89.284409553063]),
    (1.92, [6.0383021056781, 13.901445986629, 26.249310409373, 43.513981920357, 65.715672311936, 92.854029622882]),
    (5.0, [26.065225076406, 35.462261039378, 47.817024422796, 64.900200447511, 87.137790461503, 114.244486402564]),
    (10.0, [97.474035270680, 110.51944554927, 123.593144939095, 140.555432078323, 162.519960161732, 189.515389275133]),
];

fn unit_grid() -> Grid {
    Grid::new(GRID_POINTS, -1.0, 1.0).expect("valid grid")
}

fn criterion_3() -> (bool, String) {
    let start = Instant::now();
    let grid = unit_grid();
    let mut printed = Tally::new(1e-8);
    let mut agree = Tally::new(1e-6);
    for (d, row) in TABLE_VII {
        let pot = ConfinedPotential::shifted(d).expect("valid well");
        let var = match solve_acho(&pot, &grid, &VariationalConfig::default(), 0) {
            Ok(s) => s,
            Err(e) => return (false, format!("d={d}: {e}")),
        };
        let itp = match solve_spectrum(&pot, &grid, 5, &SolverConfig::default()) {
            Ok(s) => s,
            Err(e) => return (false, format!("d={d} itp: {e}")),
        };
        for n in 0..6 {
            printed.check(format!("d={d} n={n}"), 2.0 * var.energies[n], row[n], true);
            agree.check(format!("d={d} n={n}"), itp[n].energy, var.energies[n], false);
        }
    }
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(300);
    let detail = format!(
        "{} | {} | runtime {:.1} s < 300 s: {fast}",
        printed.summary("variational vs reference (relative)"),
        agree.summary("itp vs variational"),
        elapsed.as_secs_f64()
    );
    (printed.ok() && agree.ok() && fast, detail)
}

/// Reference Table VIII `(S_x, S_p, S)` for n = 0..2.
const TABLE_VIII: [(f64, [[f64; 3]; 3]); 5] = [
    (0.12, [[0.3783, 1.8296, 2.2079], [0.3857, 2.2212, 2.6069], [0.3862, 2.3692, 2.7554]]),
    (2.04, [[0.3428, 1.8779, 2.2208], [0.3807, 2.2512, 2.6319], [0.3850, 2.3852, 2.7703]]),
    (5.0, [[0.2184, 2.0238, 2.2422], [0.3636, 2.3390, 2.7027], [0.3782, 2.4512, 2.8295]]),
    (8.0, [[0.093, 2.1576, 2.2506], [0.3360, 2.4313, 2.7674], [0.3695, 2.5429, 2.9124]]),
    (10.0, [[0.0233, 2.2294, 2.2527], [0.3108, 2.4900, 2.8009], [0.3611, 2.6057, 2.9668]]),
];

fn criterion_4() -> (bool, String) {
    let grid = unit_grid();
    let mut printed = Tally::new(5e-4);
    for (d, rows) in TABLE_VIII {
        let pot = ConfinedPotential::shifted(d).expect("valid well");
        let spec = match solve_acho(&pot, &grid, &VariationalConfig::default(), 3) {
            Ok(s) => s,
            Err(e) => return (false, format!("d={d}: {e}")),
        };
        for (n, want) in rows.iter().enumerate() {
            let m = measure(&spec.states[n], &pot, DEFAULT_PAD_FACTOR);
            printed.check(format!("S_x d={d} n={n}"), m.s_x, want[0], false);
            printed.check(format!("S_p d={d} n={n}"), m.s_p, want[1], false);
            printed.check(format!("S d={d} n={n}"), m.s, want[2], false);
        }
    }
    (printed.ok(), printed.summary("variational vs reference"))
}

/// Reference Table V first-order closed-form entries: `I_x^0..2` and `E_x^0`
/// at η = 0.001, 0.01, 0.1.
const TABLE_V_PT: [(f64, [f64; 3], f64); 3] = [
    (0.001, [9.869604, 39.478417, 88.826439], 0.750008),
    (0.01, [9.869605, 39.478418, 88.826439], 0.750077),
    (0.1, [9.869652, 39.478462, 88.826429], 0.750771),
];

fn criterion_5() -> (bool, String) {
    let mut fisher = Tally::new(1e-5);
    let mut onicescu = Tally::new(1e-5);
    for (eta, i_row, e0) in TABLE_V_PT {
        for (n, want) in i_row.iter().enumerate() {
            match pt_fisher_x(n, eta) {
                Ok(v) => fisher.check(format!("I_x eta={eta} n={n}"), v, *want, false),
                Err(e) => return (false, e.to_string()),
            }
        }
        onicescu.check(format!("E_x eta={eta} n=0"), pt_onicescu_x0(eta), e0, false);
    }
    let mut detail = format!("{} | {}", fisher.summary("Fisher closed form"), onicescu.summary("Onicescu closed form"));
    if onicescu.ok() {
        detail.push_str(" | numerator with the leading coefficient on both the π¹⁶ and π¹²η terms reproduces the reference values");
    } else {
        detail.push_str(" | DISCREPANCY: the duplicated-coefficient numerator does not reproduce the reference values");
    }
    (fisher.ok() && onicescu.ok(), detail)
}

/// The three sweep grids shared by the bound, trend and determinism checks.
pub fn bound_grids() -> Vec<SweepSpec> {
    let xc: Vec<f64> = (1..=24).map(|i| 0.25 * i as f64).collect();
    let dm: Vec<f64> = (0..=20).map(|i| 0.5 * i as f64).collect();
    vec![
        SweepSpec::new(Mode::SchoEta, vec![0.001, 0.01, 0.1, 25.0, 50.0, 100.0], (0, 4), vec![Solver::Exact]),
        SweepSpec::new(Mode::SchoXc, xc, (0, 4), vec![Solver::Exact]),
        SweepSpec::new(Mode::AchoDm, dm, (0, 4), vec![Solver::Variational]),
    ]
    .into_iter()
    .map(|s| s.expect("built-in grids are valid"))
    .collect()
}

/// Runs the suite's sweeps once and shares the reports.
pub struct Suite {
    workers: usize,
    grids: OnceLock<Vec<SweepReport>>,
}

impl Suite {
    pub fn new(workers: usize) -> Self {
        Self { workers, grids: OnceLock::new() }
    }

    fn grids(&self) -> &[SweepReport] {
        self.grids.get_or_init(|| bound_grids().iter().map(|s| run_sweep(s, self.workers)).collect())
    }

    fn criterion_6(&self) -> (bool, String) {
        let mut failures = Vec::new();
        let (mut rows, mut worst_parseval) = (0, 0.0f64);
        let (mut min_s, mut min_i, mut max_e) = (f64::INFINITY, f64::INFINITY, 0.0f64);
        for report in self.grids() {
            for r in &report.rows {
                rows += 1;
                let label = format!("{} {}={} n={}", r.solver, r.mode.value_label(), r.value, r.n);
                let m = match &r.outcome {
                    Ok(m) => m,
                    Err(e) => {
                        failures.push(format!("{label}: {e}"));
                        continue;
                    }
                };
                min_s = min_s.min(m.s);
                min_i = min_i.min(m.i);
                max_e = max_e.max(m.e);
                worst_parseval = worst_parseval.max(m.parseval_defect);
                if !m.bounds_ok() {
                    failures.push(format!("{label}: S={} I={} E={}", m.s, m.i, m.e));
                }
                if !(m.parseval_defect <= 1e-8) {
                    failures.push(format!("{label}: Parseval defect {:.1e}", m.parseval_defect));
                }
            }
        }
        let mut detail = format!(
            "{rows} states: min S {min_s:.6} (≥ {:.6}), min I {min_i:.6} (≥ 4), max E {max_e:.6} (≤ {:.6}), worst Parseval defect {worst_parseval:.1e}",
            cho_core::info::SHANNON_BOUND,
            cho_core::info::ONICESCU_BOUND
        );
        if !failures.is_empty() {
            detail.push_str(&format!("; {} violations: {}", failures.len(), failures.join("; ")));
        }
        (failures.is_empty(), detail)
    }

    fn criterion_8(&self) -> (bool, String) {
        let grids = self.grids();
        let (xc, dm) = (&grids[1].rows, &grids[2].rows);
        let mut notes = Vec::new();
        let mut ok = true;
        let mut record = |pass: bool, text: String| {
            ok &= pass;
            notes.push(format!("{}{text}", if pass { "" } else { "FAILED " }));
        };
        // The x_c trends are asserted on the grid up to x_c = 5; beyond it the
        // measures have saturated to the unconfined limit and steps fall
        // below the quadrature accuracy.
        let trend_xc = |n, field| -> Vec<(f64, f64)> {
            series(xc, n, field).into_iter().filter(|&(x, _)| x <= TREND_XC_MAX).collect()
        };
        for n in 0..=4 {
            let worst = smallest_step(&trend_xc(n, Field::SX));
            let full = smallest_step(&series(xc, n, Field::SX));
            record(worst >= -TREND_SLACK, format!("S_x(x_c) n={n} smallest step {worst:.1e} (to x_c=6: {full:.1e})"));
        }
        for n in 0..=4 {
            let e = trend_xc(n, Field::E);
            let worst = -smallest_step(&e.iter().map(|&(x, v)| (x, -v)).collect::<Vec<_>>());
            let rising: Vec<String> =
                e.windows(2).filter(|w| w[1].1 >= w[0].1).map(|w| format!("{}→{}", w[0].0, w[1].0)).collect();
            record(worst < 0.0, format!("E(x_c) n={n} largest step {worst:.1e} (rising on [{}])", rising.join(", ")));
        }
        for n in 1..=4 {
            let s_p = series(xc, n, Field::SP);
            let (at, _) = argmin(&s_p);
            record(at > 0 && at + 1 < s_p.len(), format!("S_p(x_c) n={n} minimum at x_c={}", s_p[at].0));
        }
        // Measured from the potential at the box centre, ½d², the level
        // rises and falls; the bare level is dominated by the ½d² offset.
        let e1: Vec<(f64, f64)> = series(dm, 1, Field::Energy).into_iter().map(|(d, e)| (d, e - 0.5 * d * d)).collect();
        let (at, _) = argmin(&e1.iter().map(|&(d, e)| (d, -e)).collect::<Vec<_>>());
        let bare = series(dm, 1, Field::Energy);
        let bare_monotone = bare.windows(2).all(|w| w[1].1 > w[0].1);
        record(
            at > 0 && at + 1 < e1.len(),
            format!("ε_1(d_m)-d_m²/2 maximum at d_m={} (bare ε_1 monotone increasing: {bare_monotone})", e1[at].0),
        );
        for n in 0..=4 {
            let a = series(dm, n, Field::AN);
            let worst = -smallest_step(&a.iter().map(|&(d, v)| (d, -v)).collect::<Vec<_>>());
            record(worst <= TREND_SLACK, format!("A_n(d_m) n={n} largest step {worst:.1e}"));
        }
        (ok, notes.join("; "))
    }

    fn criterion_10(&self) -> (bool, String) {
        let mut notes = Vec::new();
        let mut ok = true;
        for (spec, first) in bound_grids().iter().zip(self.grids()) {
            let a = render_rows(&first.rows, Format::Csv);
            let b = render_rows(&run_sweep(spec, self.workers.max(2)).rows, Format::Csv);
            let same = a == b;
            ok &= same;
            notes.push(format!("{} {} bytes identical: {same}", spec.mode, a.len()));
        }
        (ok, notes.join("; "))
    }

    pub fn run(&self, id: usize) -> CriterionResult {
        let start = Instant::now();
        let (passed, detail) = match id {
            1 => criterion_1(),
            2 => criterion_2(),
            3 => criterion_3(),
            4 => criterion_4(),
            5 => criterion_5(),
            6 => self.criterion_6(),
            7 => criterion_7(),
            8 => self.criterion_8(),
            9 => criterion_9(),
            10 => self.criterion_10(),
            _ => (false, format!("no criterion {id}")),
        };
        CriterionResult {
            id,
            title: TITLES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown"),
            passed,
            detail,
            elapsed: start.elapsed(),
        }
    }

    pub fn run_all(&self) -> Vec<CriterionResult> {
        (1..=TITLES.len()).map(|id| self.run(id)).collect()
    }
}

/// Floating-point slack on "non-decreasing" / "non-increasing" trends.
const TREND_SLACK: f64 = 1e-9;

const TREND_XC_MAX: f64 = 5.0;

fn smallest_step(s: &[(f64, f64)]) -> f64 {
    s.windows(2).map(|w| w[1].1 - w[0].1).fold(f64::INFINITY, f64::min)
}

fn series(rows: &[ReportRow], n: usize, field: Field) -> Vec<(f64, f64)> {
    rows.iter().filter(|r| r.n == n).filter_map(|r| r.get(field).map(|v| (r.value, v))).collect()
}

fn argmin(s: &[(f64, f64)]) -> (usize, f64) {
    s.iter().enumerate().fold((0, f64::INFINITY), |best, (i, &(_, v))| if v < best.1 { (i, v) } else { best })
}

/// `∫_{|x|>1} e^{-x²} dx / √π = erfc(1)`: the forbidden-region mass of the
/// unconfined ground state.
const GAUSSIAN_COMPLEMENT: f64 = 0.157_299_207_050_285_1;

fn criterion_7() -> (bool, String) {
    let x_c = 6.0;
    let pot = ConfinedPotential::symmetric(1.0, x_c).expect("valid well");
    let grid = pot.grid(GRID_POINTS).expect("valid grid");
    let mut areas = Tally::new(1e-3);
    let mut t0 = None;
    for n in 0..=4 {
        let state = match scho_wavefunction(n, x_c, &grid) {
            Ok(s) => s,
            Err(e) => return (false, format!("n={n}: {e}")),
        };
        areas.check(format!("A_{n}"), phase_area(&pot, state.energy), (n as f64 + 0.5) * PI / SQRT_2, false);
        if n == 0 {
            t0 = Some(cho_core::semiclassical::tunneling_probability(&state, &pot));
        }
    }
    let t0 = t0.expect("ground state solved");
    let t_ok = (t0 - 0.15730).abs() <= 1e-3;
    let detail = format!(
        "{} | T_0(x_c=6) = {t0:.8} vs 0.15730 (erfc(1) = {GAUSSIAN_COMPLEMENT:.8}), Δ {:.1e}",
        areas.summary("A_n(x_c=6) vs (n+1/2)π/√2"),
        (t0 - 0.15730).abs()
    );
    (areas.ok() && t_ok, detail)
}

fn criterion_9() -> (bool, String) {
    let mut rng = StdRng::seed_from_u64(0x5eed_0009);
    let mut eig = Tally::new(1e-8);
    for m in 0..5 {
        let n = 10;
        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..=i {
                // Dyadic entries keep the exact characteristic polynomial small.
                let v = f64::from(rng.random_range(-64i32..=64)) / 64.0;
                a[i][j] = v;
                a[j][i] = v;
            }
        }
        let reference = symmetric_eigenvalues(&a, 1e-13);
        let got = match diagonalize(&Matrix::from_fn(n, |i, j| a[i][j])) {
            Ok(e) => e.values,
            Err(e) => return (false, format!("matrix {m}: {e}")),
        };
        for (k, (g, r)) in got.iter().zip(&reference).enumerate() {
            eig.check(format!("matrix {m} λ_{k}"), *g, *r, false);
        }
    }
    let mut kummer = Tally::new(1e-12);
    for k in 0..20 {
        let a: f64 = rng.random_range(-5.0..1.0);
        let b: f64 = rng.random_range(0.5..3.5);
        let z: f64 = rng.random_range(0.0..40.0);
        match kummer_1f1(a, b, z) {
            Ok(v) => kummer.check(format!("#{k} 1F1({a:.4}; {b:.4}; {z:.4})"), v, kummer_series(a, b, z), true),
            Err(e) => return (false, format!("1F1({a}, {b}, {z}): {e}")),
        }
    }
    (
        eig.ok() && kummer.ok(),
        format!("{} | {}", eig.summary("diagonalize vs Sturm roots"), kummer.summary("kummer_1f1 vs rational series")),
    )
}
