use clap::{Args, Parser, Subcommand};
use cho_cli::acceptance::{Suite, TITLES};
use cho_cli::config::{parse_config, parse_states, Mode, Solver, SweepSpec};
use cho_cli::report::{format_number, render, render_rows, Field, Format};
use cho_cli::sweep::{potential, run_sweep, solve_point, SweepReport};
use cho_cli::tables::{default_spec, emit_table, TableId};
use cho_core::semiclassical::{enclosed_area, phase_orbit};
use std::path::PathBuf;
use std::process::ExitCode;

/// Confined harmonic oscillator: spectra, information measures and
/// phase-space data.
#[derive(Parser)]
#[command(name = "cho", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Grid points including both walls.
    #[arg(long, global = true)]
    grid_points: Option<usize>,
    /// Imaginary-time step.
    #[arg(long, global = true)]
    dtau: Option<f64>,
    /// Relative energy convergence tolerance of the ITP solver.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Zero-padding factor of the momentum transform.
    #[arg(long, global = true)]
    pad_factor: Option<usize>,
    /// Solvers to run (comma list), replacing the configured ones.
    #[arg(long, global = true, value_delimiter = ',')]
    solver: Option<Vec<Solver>>,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = default_workers())]
    workers: usize,
    /// Output file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value = "csv")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one parameter value.
    Solve {
        #[command(flatten)]
        point: Point,
    },
    /// Run a sweep described by a config file.
    Sweep { config: PathBuf },
    /// Reproduce one of the reference tables (I..IX).
    Table { id: TableId },
    /// Turning-point, phase-area and tunneling data.
    Phase {
        #[command(flatten)]
        point: Point,
        /// Emit the phase-space orbit with this many samples per branch
        /// instead of the per-state summary.
        #[arg(long)]
        orbit: Option<usize>,
    },
    /// Run the acceptance suite.
    Validate {
        /// Criteria to run (comma list); all by default.
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

#[derive(Args)]
struct Point {
    #[arg(long)]
    mode: Mode,
    #[arg(long)]
    value: f64,
    /// `n` or `lo:hi`.
    #[arg(long, default_value = "0", value_parser = parse_states)]
    states: (usize, usize),
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl Global {
    fn apply(&self, mut spec: SweepSpec) -> Result<SweepSpec, Failure> {
        let mut st = spec.settings;
        if let Some(v) = self.grid_points {
            st.grid_points = v;
        }
        if let Some(v) = self.dtau {
            st.itp.dtau = v;
        }
        if let Some(v) = self.tol {
            st.itp.energy_tol = v;
        }
        if let Some(v) = self.pad_factor {
            st.pad_factor = v;
        }
        if let Some(s) = &self.solver {
            spec.solvers = s.clone();
        }
        spec.with_settings(st).map_err(|e| Failure::Usage(e.to_string()))
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.out {
            Some(path) => std::fs::write(path, text).map_err(|e| Failure::Failed(format!("{}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn point_spec(point: &Point, global: &Global) -> Result<SweepSpec, Failure> {
    let spec = SweepSpec::new(point.mode, vec![point.value], point.states, vec![point.mode.default_solver()])
        .map_err(|e| Failure::Usage(e.to_string()))?;
    global.apply(spec)
}

/// Reports solver errors and cross-check outcomes on stderr.
fn check(report: &SweepReport) -> Result<(), Failure> {
    for c in &report.cross_checks {
        eprintln!(
            "cross-check itp vs {}: max {}|Δε| = {:.3e} over {} points (tol {:.0e}) {}",
            c.reference,
            if c.relative { "relative " } else { "" },
            c.max_delta,
            c.compared,
            c.tol,
            if c.passed() { "ok" } else { "FAILED" }
        );
    }
    let errors = report.error_rows();
    match (errors, report.cross_checks_pass()) {
        (0, true) => Ok(()),
        (0, false) => Err(Failure::Failed("cross-check tolerance exceeded".into())),
        (n, _) => Err(Failure::Failed(format!("{n} rows failed to solve"))),
    }
}

fn phase(point: &Point, orbit: Option<usize>, global: &Global) -> Result<(), Failure> {
    let spec = point_spec(point, global)?;
    let pot = potential(spec.mode, point.value, &spec.settings).map_err(|e| Failure::Usage(e.to_string()))?;
    let solver = spec.solvers[0];
    let rows = solve_point(&spec, point.value, solver);
    let mut records = Vec::new();
    let mut failed = 0;
    for r in &rows {
        let Some(energy) = r.get(Field::Energy) else {
            failed += 1;
            continue;
        };
        let curve = phase_orbit(&pot, energy, orbit.unwrap_or(400));
        match orbit {
            Some(_) => records.extend(
                curve.iter().map(|&(x, p)| vec![r.n.to_string(), format_number(energy), format_number(x), format_number(p)]),
            ),
            None => {
                let mut rec = vec![r.n.to_string(), solver.to_string()];
                rec.extend(
                    [Field::Energy, Field::AN, Field::TN, Field::LAllowed, Field::LRightGap]
                        .map(|f| r.get(f).map(format_number).unwrap_or_default()),
                );
                rec.push(format_number(enclosed_area(&curve)));
                records.push(rec);
            }
        }
    }
    let header: &[&str] = match orbit {
        Some(_) => &["n", "energy", "x", "p"],
        None => &["n", "solver", "energy", "A_n", "T_n", "l_allowed", "l_right_gap", "orbit_area"],
    };
    global.emit(&render(header, &records, global.format))?;
    if failed > 0 {
        return Err(Failure::Failed(format!("{failed} states failed to solve")));
    }
    Ok(())
}

fn validate(only: &[usize], global: &Global) -> Result<(), Failure> {
    let ids: Vec<usize> = if only.is_empty() { (1..=TITLES.len()).collect() } else { only.to_vec() };
    if let Some(bad) = ids.iter().find(|&&id| id == 0 || id > TITLES.len()) {
        return Err(Failure::Usage(format!("no criterion {bad} (expected 1..={})", TITLES.len())));
    }
    let suite = Suite::new(global.workers);
    let mut lines = String::new();
    let mut failed = 0;
    for id in ids {
        let result = suite.run(id);
        // Progress goes to the terminal; the file gets the full listing.
        match global.out {
            Some(_) => eprintln!("{result}"),
            None => println!("{result}"),
        }
        lines.push_str(&format!("{result}\n"));
        failed += usize::from(!result.passed);
    }
    if global.out.is_some() {
        global.emit(&lines)?;
    }
    match failed {
        0 => Ok(()),
        n => Err(Failure::Failed(format!("{n} criteria failed"))),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let g = &cli.global;
    if g.workers == 0 {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }
    match &cli.command {
        Command::Solve { point } => {
            let report = run_sweep(&point_spec(point, g)?, g.workers);
            g.emit(&render_rows(&report.rows, g.format))?;
            check(&report)
        }
        Command::Sweep { config } => {
            let text = std::fs::read_to_string(config)
                .map_err(|e| Failure::Usage(format!("{}: {e}", config.display())))?;
            let spec = parse_config(&text).map_err(|e| Failure::Usage(format!("{}: {e}", config.display())))?;
            let report = run_sweep(&g.apply(spec)?, g.workers);
            g.emit(&render_rows(&report.rows, g.format))?;
            check(&report)
        }
        Command::Table { id } => {
            let report = run_sweep(&g.apply(default_spec(*id))?, g.workers);
            let table = emit_table(&report.rows, *id).map_err(|e| Failure::Failed(e.to_string()))?;
            g.emit(&table.render(g.format))?;
            check(&report)
        }
        Command::Phase { point, orbit } => phase(point, *orbit, g),
        Command::Validate { only } => validate(only, g),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed(msg)) => {
            eprintln!("cho: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("cho: {msg}");
            ExitCode::from(2)
        }
    }
}
