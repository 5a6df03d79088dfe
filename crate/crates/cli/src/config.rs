//! Sweep specification and its line-oriented `key = value` file format.

use cho_core::spectral::DEFAULT_PAD_FACTOR;
use cho_core::variational::VariationalConfig;
use cho_core::SolverConfig;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Default grid: 2000 interior points plus the two wall points.
pub const DEFAULT_GRID_POINTS: usize = 2002;
/// Default well centre for `acho-eta` sweeps.
pub const DEFAULT_ACHO_CENTER: f64 = 1.0;
/// Default energy agreement required between ITP and the exact solver.
pub const EXACT_CROSS_TOL: f64 = 1e-6;
/// Default relative energy agreement required between ITP and the
/// variational solver.
pub const VARIATIONAL_CROSS_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("missing mode")]
    MissingMode,
    #[error("missing values")]
    MissingValues,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key `{key}`")]
    DuplicateKey { line: usize, key: String },
    #[error("{0}")]
    Invalid(String),
}

/// What is swept and which potential family it parametrizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Centred well in `[-1, 1]` with force constant `η`.
    SchoEta,
    /// Unit force constant in `[-x_c, x_c]`.
    SchoXc,
    /// Unit force constant centred at `d_m` in `[-1, 1]`.
    AchoDm,
    /// Force constant `η` centred at a fixed `d_m` in `[-1, 1]`.
    AchoEta,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::SchoEta, Mode::SchoXc, Mode::AchoDm, Mode::AchoEta];

    pub fn name(self) -> &'static str {
        match self {
            Mode::SchoEta => "scho-eta",
            Mode::SchoXc => "scho-xc",
            Mode::AchoDm => "acho-dm",
            Mode::AchoEta => "acho-eta",
        }
    }

    /// Column label of the swept value.
    pub fn value_label(self) -> &'static str {
        match self {
            Mode::SchoEta | Mode::AchoEta => "eta",
            Mode::SchoXc => "xc",
            Mode::AchoDm => "dm",
        }
    }

    pub fn is_symmetric(self) -> bool {
        matches!(self, Mode::SchoEta | Mode::SchoXc)
    }

    pub fn default_solver(self) -> Solver {
        if self.is_symmetric() {
            Solver::Exact
        } else {
            Solver::Variational
        }
    }

    pub fn supports(self, solver: Solver) -> bool {
        match solver {
            Solver::Itp => true,
            Solver::Exact => self.is_symmetric(),
            Solver::Variational => !self.is_symmetric(),
            Solver::Pt => self == Mode::SchoEta,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown mode `{s}` (expected scho-eta, scho-xc, acho-dm or acho-eta)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Solver {
    Itp,
    Exact,
    Variational,
    Pt,
}

impl Solver {
    pub const ALL: [Solver; 4] = [Solver::Itp, Solver::Exact, Solver::Variational, Solver::Pt];

    pub fn name(self) -> &'static str {
        match self {
            Solver::Itp => "itp",
            Solver::Exact => "exact",
            Solver::Variational => "variational",
            Solver::Pt => "pt",
        }
    }
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Solver {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Solver::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown solver `{s}` (expected itp, exact, variational or pt)"))
    }
}

/// Numerical settings shared by every point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    pub grid_points: usize,
    pub itp: SolverConfig,
    pub pad_factor: usize,
    pub variational: VariationalConfig,
    /// Well centre for `acho-eta`.
    pub center: f64,
    /// Overrides both default cross-check tolerances.
    pub cross_tol: Option<f64>,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            grid_points: DEFAULT_GRID_POINTS,
            itp: SolverConfig::default(),
            pad_factor: DEFAULT_PAD_FACTOR,
            variational: VariationalConfig::default(),
            center: DEFAULT_ACHO_CENTER,
            cross_tol: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub mode: Mode,
    pub values: Vec<f64>,
    /// Inclusive state range `(n_lo, n_hi)`.
    pub states: (usize, usize),
    pub solvers: Vec<Solver>,
    pub settings: Settings,
}

impl SweepSpec {
    /// Sweep with default settings, validated.
    pub fn new(mode: Mode, values: Vec<f64>, states: (usize, usize), solvers: Vec<Solver>) -> Result<Self, ConfigError> {
        let spec = Self { mode, values, states, solvers, settings: Settings::default() };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_settings(mut self, settings: Settings) -> Result<Self, ConfigError> {
        self.settings = settings;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let invalid = |m: String| Err(ConfigError::Invalid(m));
        if self.values.is_empty() {
            return invalid("empty value list".into());
        }
        for &v in &self.values {
            if !v.is_finite() {
                return invalid(format!("non-finite sweep value {v}"));
            }
            if self.mode != Mode::AchoDm && v <= 0.0 {
                return invalid(format!("{} values must be positive, got {v}", self.mode.value_label()));
            }
        }
        let (lo, hi) = self.states;
        if hi < lo {
            return invalid(format!("state range {lo}:{hi} is empty"));
        }
        if self.solvers.is_empty() {
            return invalid("no solver selected".into());
        }
        let mut seen = HashSet::new();
        for &s in &self.solvers {
            if !seen.insert(s) {
                return invalid(format!("solver {s} listed twice"));
            }
            if !self.mode.supports(s) {
                return invalid(format!("solver {s} is not available for mode {}", self.mode));
            }
        }
        let st = &self.settings;
        if st.grid_points < cho_core::Grid::MIN_POINTS {
            return invalid(format!("grid_points must be at least {}", cho_core::Grid::MIN_POINTS));
        }
        if st.pad_factor == 0 {
            return invalid("pad_factor must be at least 1".into());
        }
        st.itp.validate().map_err(|e| ConfigError::Invalid(e.to_string()))?;
        st.variational.validate().map_err(|e| ConfigError::Invalid(e.to_string()))?;
        if self.solvers.contains(&Solver::Variational) && hi >= st.variational.size {
            return invalid(format!("state {hi} exceeds the basis size {}", st.variational.size));
        }
        if !st.center.is_finite() {
            return invalid("center must be finite".into());
        }
        if let Some(t) = st.cross_tol {
            if !(t > 0.0) {
                return invalid(format!("cross_tol must be positive, got {t}"));
            }
        }
        Ok(())
    }

    pub fn n_states(&self) -> usize {
        self.states.1 - self.states.0 + 1
    }
}

/// Parses a sweep specification.
///
/// One `key = value` pair per line; `#` starts a comment. Keys: `mode`,
/// `values` (comma list whose items are numbers or `lo:hi:step` ranges),
/// `states` (`n` or `lo:hi`), `solvers` (comma list), `grid_points`, `dtau`,
/// `tol`, `max_steps`, `pad_factor`, `basis_size`, `center`, `cross_tol`.
pub fn parse_config(text: &str) -> Result<SweepSpec, ConfigError> {
    let mut seen: HashSet<String> = HashSet::new();
    let mut mode = None;
    let mut values = None;
    let mut states = None;
    let mut solvers = None;
    let mut settings = Settings::default();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let syntax = |message: String| ConfigError::Syntax { line, message };
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| syntax(format!("expected `key = value`, got `{content}`")))?;
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() {
            return Err(syntax("empty key".into()));
        }
        if value.is_empty() {
            return Err(syntax(format!("empty value for `{key}`")));
        }
        if !seen.insert(key.to_string()) {
            return Err(ConfigError::DuplicateKey { line, key: key.into() });
        }
        match key {
            "mode" => mode = Some(value.parse::<Mode>().map_err(syntax)?),
            "values" => values = Some(parse_values(value).map_err(syntax)?),
            "states" => states = Some(parse_states(value).map_err(syntax)?),
            "solvers" => {
                solvers = Some(
                    value
                        .split(',')
                        .map(|s| s.trim().parse::<Solver>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(syntax)?,
                )
            }
            "grid_points" => settings.grid_points = parse_num(key, value).map_err(syntax)?,
            "dtau" => settings.itp.dtau = parse_num(key, value).map_err(syntax)?,
            "tol" => settings.itp.energy_tol = parse_num(key, value).map_err(syntax)?,
            "max_steps" => settings.itp.max_steps = parse_num(key, value).map_err(syntax)?,
            "pad_factor" => settings.pad_factor = parse_num(key, value).map_err(syntax)?,
            "basis_size" => settings.variational.size = parse_num(key, value).map_err(syntax)?,
            "center" => settings.center = parse_num(key, value).map_err(syntax)?,
            "cross_tol" => settings.cross_tol = Some(parse_num(key, value).map_err(syntax)?),
            _ => return Err(ConfigError::UnknownKey { line, key: key.into() }),
        }
    }

    let mode = mode.ok_or(ConfigError::MissingMode)?;
    let values = values.ok_or(ConfigError::MissingValues)?;
    let spec = SweepSpec {
        mode,
        values,
        states: states.unwrap_or((0, 0)),
        solvers: solvers.unwrap_or_else(|| vec![mode.default_solver()]),
        settings,
    };
    spec.validate()?;
    Ok(spec)
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T, String> {
    value.parse().map_err(|_| format!("invalid number `{value}` for `{key}`"))
}

/// Expands a comma list of numbers and `lo:hi:step` ranges, in order.
pub fn parse_values(text: &str) -> Result<Vec<f64>, String> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim) {
        let parts: Vec<&str> = item.split(':').map(str::trim).collect();
        match parts.as_slice() {
            [v] => out.push(parse_num("values", v)?),
            [lo, hi, step] => out.extend(expand_range(
                parse_num("values", lo)?,
                parse_num("values", hi)?,
                parse_num("values", step)?,
            )?),
            _ => return Err(format!("expected a number or lo:hi:step, got `{item}`")),
        }
    }
    Ok(out)
}

/// `lo, lo + step, ...` up to `hi`, inclusive when `hi` lies on the lattice.
/// Points are computed as `lo + i·step` so errors do not accumulate.
pub fn expand_range(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>, String> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(format!("range step must be positive, got {step}"));
    }
    if !(lo.is_finite() && hi.is_finite()) || hi < lo {
        return Err(format!("range {lo}:{hi} is empty"));
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| lo + i as f64 * step).collect())
}

/// State range `n` or `lo:hi`.
pub fn parse_states(text: &str) -> Result<(usize, usize), String> {
    let bad = || format!("expected `n` or `lo:hi` for states, got `{text}`");
    match text.split_once(':') {
        None => {
            let n = text.parse().map_err(|_| bad())?;
            Ok((n, n))
        }
        Some((lo, hi)) => Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_eight_spec() {
        let spec = parse_config("mode = acho-dm\nvalues = 0.12,2.04,5,8,10\nstates = 0:2\n").unwrap();
        assert_eq!(spec.mode, Mode::AchoDm);
        assert_eq!(spec.values, vec![0.12, 2.04, 5.0, 8.0, 10.0]);
        assert_eq!(spec.states, (0, 2));
        assert_eq!(spec.solvers, vec![Solver::Variational]);
    }

    #[test]
    fn empty_text_is_missing_mode() {
        assert_eq!(parse_config("").unwrap_err().to_string(), "missing mode");
        assert_eq!(parse_config("# only a comment\n\n").unwrap_err(), ConfigError::MissingMode);
    }

    #[test]
    fn duplicate_key_is_named() {
        let err = parse_config("mode = scho-xc\nvalues = 1\nmode = scho-eta\n").unwrap_err();
        assert_eq!(err, ConfigError::DuplicateKey { line: 3, key: "mode".into() });
        assert!(err.to_string().contains("`mode`"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_config("mode = scho-xc\n\nvalues 1,2\n").unwrap_err();
        assert!(matches!(err, ConfigError::Syntax { line: 3, .. }), "{err}");
        let err = parse_config("mode = scho-xc\nvalues = 1\nspeed = 3\n").unwrap_err();
        assert_eq!(err, ConfigError::UnknownKey { line: 3, key: "speed".into() });
        let err = parse_config("mode = scho-xc\nvalues = 1,x\n").unwrap_err();
        assert!(matches!(err, ConfigError::Syntax { line: 2, .. }), "{err}");
    }

    #[test]
    fn ranges_expand_without_drift() {
        let v = parse_values("0.25:6:0.25").unwrap();
        assert_eq!(v.len(), 24);
        assert_eq!(v[0], 0.25);
        assert_eq!(*v.last().unwrap(), 6.0);
        assert_eq!(parse_values("0:10:0.5").unwrap().len(), 21);
        assert_eq!(parse_values("1, 2:3:1, 7").unwrap(), vec![1.0, 2.0, 3.0, 7.0]);
        assert!(parse_values("1:0:1").is_err());
        assert!(parse_values("0:1:0").is_err());
        assert!(parse_values("1:2").is_err());
    }

    #[test]
    fn overrides_and_defaults() {
        let spec = parse_config(
            "mode = scho-eta\nvalues = 0.1\nsolvers = exact, pt, itp\ngrid_points = 401\ndtau = 2e-4\ntol = 1e-10\npad_factor = 8\ncross_tol = 1e-5\n",
        )
        .unwrap();
        assert_eq!(spec.solvers, vec![Solver::Exact, Solver::Pt, Solver::Itp]);
        assert_eq!(spec.settings.grid_points, 401);
        assert_eq!(spec.settings.itp.dtau, 2e-4);
        assert_eq!(spec.settings.itp.energy_tol, 1e-10);
        assert_eq!(spec.settings.pad_factor, 8);
        assert_eq!(spec.settings.cross_tol, Some(1e-5));
        assert_eq!(spec.states, (0, 0));
        let spec = parse_config("mode = scho-xc\nvalues = 2\n").unwrap();
        assert_eq!(spec.settings.grid_points, DEFAULT_GRID_POINTS);
    }

    #[test]
    fn solver_must_suit_mode() {
        let err = parse_config("mode = acho-dm\nvalues = 1\nsolvers = exact\n").unwrap_err();
        assert!(err.to_string().contains("not available"), "{err}");
        assert!(parse_config("mode = scho-xc\nvalues = 1\nsolvers = pt\n").is_err());
        assert!(parse_config("mode = scho-xc\nvalues = 1\nsolvers = itp, itp\n").is_err());
    }

    #[test]
    fn invalid_values_rejected() {
        assert!(parse_config("mode = scho-xc\nvalues = -1\n").is_err());
        assert!(parse_config("mode = acho-dm\nvalues = -1\n").is_ok());
        assert!(parse_config("mode = scho-xc\nstates = 0:2\n").is_err());
        assert!(parse_config("mode = scho-xc\nvalues = 1\nstates = 3:1\n").is_err());
        assert!(SweepSpec::new(Mode::SchoXc, vec![], (0, 0), vec![Solver::Exact]).is_err());
    }
}
