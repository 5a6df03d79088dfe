//! Fixed layouts of the reference tables, filled from sweep rows.

use crate::config::{Mode, Solver, SweepSpec};
use crate::report::{format_number, render, Field, Format, ReportRow};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableId {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
}

impl TableId {
    pub const ALL: [TableId; 9] =
        [TableId::I, TableId::II, TableId::III, TableId::IV, TableId::V, TableId::VI, TableId::VII, TableId::VIII, TableId::IX];

    pub fn name(self) -> &'static str {
        match self {
            TableId::I => "I",
            TableId::II => "II",
            TableId::III => "III",
            TableId::IV => "IV",
            TableId::V => "V",
            TableId::VI => "VI",
            TableId::VII => "VII",
            TableId::VIII => "VIII",
            TableId::IX => "IX",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        TableId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown table `{s}` (expected I..IX)"))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SchemaError {
    #[error("table {table}: no rows")]
    Empty { table: TableId },
    #[error("table {table} needs {expected} rows, got {found}")]
    WrongMode { table: TableId, expected: Mode, found: Mode },
    #[error("table {table}: missing column `{column}`")]
    MissingColumn { table: TableId, column: String },
}

/// One output column: a field of the rows produced by one solver.
#[derive(Debug, Clone, Copy)]
struct Column {
    name: &'static str,
    solver: Solver,
    field: Field,
    /// Factor applied before printing.
    scale: f64,
}

const fn col(name: &'static str, solver: Solver, field: Field) -> Column {
    Column { name, solver, field, scale: 1.0 }
}

/// Energies of the off-centre tables are printed for `-d² + (x-d)²`, twice
/// the atomic-unit Hamiltonian.
const fn doubled(name: &'static str, solver: Solver) -> Column {
    Column { name, solver, field: Field::Energy, scale: 2.0 }
}

fn layout(id: TableId) -> (Mode, Vec<Column>) {
    use Field::*;
    use Solver::*;
    match id {
        TableId::I => (Mode::SchoEta, vec![col("energy_pt", Pt, Energy), col("energy_exact", Exact, Energy)]),
        TableId::II => (Mode::SchoEta, vec![col("S_x", Exact, SX), col("S_p", Exact, SP)]),
        TableId::III => (Mode::SchoEta, vec![col("I_x", Exact, IX), col("I_p", Exact, IP)]),
        TableId::IV => (Mode::SchoEta, vec![col("E_x", Exact, EX), col("E_p", Exact, EP)]),
        TableId::V => (
            Mode::SchoEta,
            vec![
                col("S_x_pt", Pt, SX),
                col("S_x_exact", Exact, SX),
                col("I_x_pt", Pt, IX),
                col("I_x_exact", Exact, IX),
                col("E_x_pt", Pt, EX),
                col("E_x_exact", Exact, EX),
            ],
        ),
        TableId::VI => (
            Mode::SchoXc,
            vec![col("S_x", Itp, SX), col("E_x", Itp, EX), col("S_x_ref", Exact, SX), col("E_x_ref", Exact, EX)],
        ),
        TableId::VII => (Mode::AchoDm, vec![doubled("energy_var", Variational), doubled("energy_itp", Itp)]),
        TableId::VIII => (Mode::AchoDm, vec![col("S_x", Variational, SX), col("S_p", Variational, SP), col("S", Variational, S)]),
        TableId::IX => (
            Mode::AchoEta,
            vec![
                col("I_x", Variational, IX),
                col("I_p", Variational, IP),
                col("S_x", Variational, SX),
                col("S_p", Variational, SP),
                col("E_x", Variational, EX),
                col("E_p", Variational, EP),
            ],
        ),
    }
}

/// Sweep that produces the rows a table needs.
pub fn default_spec(id: TableId) -> SweepSpec {
    use Solver::*;
    let small_eta = vec![0.001, 0.01, 0.1];
    let (mode, values, states, solvers) = match id {
        TableId::I => (Mode::SchoEta, small_eta, (0, 4), vec![Pt, Exact]),
        TableId::II | TableId::III | TableId::IV => {
            (Mode::SchoEta, vec![0.001, 0.01, 0.1, 25.0, 50.0, 100.0], (0, 2), vec![Exact])
        }
        TableId::V => (Mode::SchoEta, small_eta, (0, 2), vec![Pt, Exact]),
        TableId::VI => (Mode::SchoXc, vec![0.25, 2.0, 5.0], (0, 4), vec![Itp, Exact]),
        TableId::VII => (Mode::AchoDm, vec![0.36, 1.92, 5.0, 10.0], (0, 5), vec![Variational, Itp]),
        TableId::VIII => (Mode::AchoDm, vec![0.12, 2.04, 5.0, 8.0, 10.0], (0, 2), vec![Variational]),
        TableId::IX => (Mode::AchoEta, vec![5.0, 10.0, 20.0], (0, 0), vec![Variational]),
    };
    SweepSpec::new(mode, values, states, solvers).expect("built-in table specs are valid")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub id: TableId,
    pub header: Vec<String>,
    pub records: Vec<Vec<String>>,
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        let header: Vec<&str> = self.header.iter().map(String::as_str).collect();
        render(&header, &self.records, format)
    }
}

/// Lays rows out as table `id`: one record per `(value, n)` in order of
/// first appearance. A cell whose row failed is left empty.
pub fn emit_table(rows: &[ReportRow], id: TableId) -> Result<Table, SchemaError> {
    let (mode, columns) = layout(id);
    if rows.is_empty() {
        return Err(SchemaError::Empty { table: id });
    }
    if let Some(r) = rows.iter().find(|r| r.mode != mode) {
        return Err(SchemaError::WrongMode { table: id, expected: mode, found: r.mode });
    }
    for c in &columns {
        if !rows.iter().any(|r| r.solver == c.solver) {
            return Err(SchemaError::MissingColumn { table: id, column: c.name.to_string() });
        }
    }
    let mut keys: Vec<(f64, usize)> = Vec::new();
    for r in rows {
        if !keys.contains(&(r.value, r.n)) {
            keys.push((r.value, r.n));
        }
    }
    let records = keys
        .iter()
        .map(|&(value, n)| {
            let mut rec = vec![format_number(value), n.to_string()];
            rec.extend(columns.iter().map(|c| {
                rows.iter()
                    .find(|r| r.value == value && r.n == n && r.solver == c.solver)
                    .and_then(|r| r.get(c.field))
                    .map(|v| format_number(c.scale * v))
                    .unwrap_or_default()
            }));
            rec
        })
        .collect();
    let mut header = vec![mode.value_label().to_string(), "n".to_string()];
    header.extend(columns.iter().map(|c| c.name.to_string()));
    Ok(Table { id, header, records })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Measures;

    fn row(mode: Mode, value: f64, n: usize, solver: Solver, energy: f64) -> ReportRow {
        let m = Measures {
            energy,
            s_x: 0.1,
            s_p: 2.0,
            s: 2.1,
            i_x: 10.0,
            i_p: 0.5,
            i: 5.0,
            e_x: 0.75,
            e_p: 0.2,
            e: 0.15,
            a_n: 1.0,
            t_n: 0.0,
            l_allowed: 2.0,
            l_right_gap: 0.0,
            parseval_defect: 0.0,
        };
        ReportRow { mode, value, n, solver, outcome: Ok(m), t_onset: None }
    }

    #[test]
    fn roman_names_parse() {
        for id in TableId::ALL {
            assert_eq!(id.name().parse::<TableId>().unwrap(), id);
        }
        assert_eq!("viii".parse::<TableId>().unwrap(), TableId::VIII);
        assert!("X".parse::<TableId>().is_err());
    }

    #[test]
    fn table_six_header() {
        let rows = vec![
            row(Mode::SchoXc, 0.25, 0, Solver::Itp, 1.0),
            row(Mode::SchoXc, 0.25, 0, Solver::Exact, 1.0),
        ];
        let t = emit_table(&rows, TableId::VI).unwrap();
        assert!(t.render(Format::Csv).starts_with("xc,n,S_x,E_x,"));
        assert_eq!(t.records.len(), 1);
    }

    #[test]
    fn table_one_pairs_solvers() {
        let rows = vec![
            row(Mode::SchoEta, 0.1, 0, Solver::Pt, 1.240235),
            row(Mode::SchoEta, 0.1, 0, Solver::Exact, 1.240229),
            row(Mode::SchoEta, 0.1, 1, Solver::Pt, 4.948935),
            row(Mode::SchoEta, 0.1, 1, Solver::Exact, 4.948930),
        ];
        let t = emit_table(&rows, TableId::I).unwrap();
        assert_eq!(t.header, vec!["eta", "n", "energy_pt", "energy_exact"]);
        assert_eq!(t.records[1], vec!["0.1000000000", "1", "4.948935000", "4.948930000"]);
    }

    #[test]
    fn missing_solver_names_the_column() {
        let rows = vec![row(Mode::SchoEta, 0.1, 0, Solver::Exact, 1.0)];
        let err = emit_table(&rows, TableId::I).unwrap_err();
        assert_eq!(err, SchemaError::MissingColumn { table: TableId::I, column: "energy_pt".into() });
        assert!(err.to_string().contains("energy_pt"));
    }

    #[test]
    fn wrong_mode_and_empty_rejected() {
        let rows = vec![row(Mode::SchoXc, 1.0, 0, Solver::Exact, 1.0)];
        assert!(matches!(emit_table(&rows, TableId::II), Err(SchemaError::WrongMode { .. })));
        assert!(matches!(emit_table(&[], TableId::II), Err(SchemaError::Empty { .. })));
    }

    #[test]
    fn off_centre_energies_are_doubled() {
        let rows = vec![
            row(Mode::AchoDm, 5.0, 0, Solver::Variational, 13.0326125382),
            row(Mode::AchoDm, 5.0, 0, Solver::Itp, 13.0326125382),
        ];
        let t = emit_table(&rows, TableId::VII).unwrap();
        assert_eq!(t.records[0][2], "26.06522508");
    }

    #[test]
    fn failed_cells_are_blank() {
        let mut bad = row(Mode::SchoEta, 0.1, 0, Solver::Exact, 1.0);
        bad.outcome = Err("failed".into());
        let rows = vec![bad, row(Mode::SchoEta, 0.1, 0, Solver::Pt, 1.0)];
        let t = emit_table(&rows, TableId::I).unwrap();
        assert_eq!(t.records[0][3], "");
    }

    #[test]
    fn default_specs_match_layout_modes() {
        for id in TableId::ALL {
            let spec = default_spec(id);
            assert_eq!(spec.mode, layout(id).0, "table {id}");
            for c in layout(id).1 {
                assert!(spec.solvers.contains(&c.solver), "table {id} column {}", c.name);
            }
        }
    }
}
