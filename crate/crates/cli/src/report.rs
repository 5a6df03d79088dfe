//! Report rows and their CSV, TSV and aligned-text renderings.

use crate::config::{Mode, Solver};
use cho_core::info::{BOUND_SLACK, FISHER_BOUND, ONICESCU_BOUND, SHANNON_BOUND};
use std::fmt::Write as _;
use std::str::FromStr;
use thiserror::Error;

/// Significant digits written for every floating-point cell.
pub const SIGNIFICANT_DIGITS: usize = 10;

/// Everything measured for one converged state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measures {
    pub energy: f64,
    pub s_x: f64,
    pub s_p: f64,
    pub s: f64,
    pub i_x: f64,
    pub i_p: f64,
    pub i: f64,
    pub e_x: f64,
    pub e_p: f64,
    pub e: f64,
    pub a_n: f64,
    pub t_n: f64,
    pub l_allowed: f64,
    pub l_right_gap: f64,
    /// `|∫ρ(p)dp - ∫ρ(x)dx|`.
    pub parseval_defect: f64,
}

impl Measures {
    pub fn shannon_ok(&self) -> bool {
        self.s >= SHANNON_BOUND - BOUND_SLACK
    }

    pub fn fisher_ok(&self) -> bool {
        self.i >= FISHER_BOUND - BOUND_SLACK
    }

    pub fn onicescu_ok(&self) -> bool {
        self.e <= ONICESCU_BOUND + BOUND_SLACK
    }

    pub fn bounds_ok(&self) -> bool {
        self.shannon_ok() && self.fisher_ok() && self.onicescu_ok()
    }

    fn fields(&self) -> [f64; 15] {
        [
            self.energy,
            self.s_x,
            self.s_p,
            self.s,
            self.i_x,
            self.i_p,
            self.i,
            self.e_x,
            self.e_p,
            self.e,
            self.a_n,
            self.t_n,
            self.l_allowed,
            self.l_right_gap,
            self.parseval_defect,
        ]
    }

    fn from_fields(f: [f64; 15]) -> Self {
        let [energy, s_x, s_p, s, i_x, i_p, i, e_x, e_p, e, a_n, t_n, l_allowed, l_right_gap, parseval_defect] = f;
        Self { energy, s_x, s_p, s, i_x, i_p, i, e_x, e_p, e, a_n, t_n, l_allowed, l_right_gap, parseval_defect }
    }

    /// Copy with every field rounded to [`SIGNIFICANT_DIGITS`].
    pub fn rounded(&self) -> Self {
        Self::from_fields(self.fields().map(|v| format_number(v).parse().expect("formatted number parses")))
    }
}

/// Selectable numeric column of a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Energy,
    SX,
    SP,
    S,
    IX,
    IP,
    I,
    EX,
    EP,
    E,
    AN,
    TN,
    LAllowed,
    LRightGap,
    ParsevalDefect,
}

impl Field {
    pub const ALL: [Field; 15] = [
        Field::Energy,
        Field::SX,
        Field::SP,
        Field::S,
        Field::IX,
        Field::IP,
        Field::I,
        Field::EX,
        Field::EP,
        Field::E,
        Field::AN,
        Field::TN,
        Field::LAllowed,
        Field::LRightGap,
        Field::ParsevalDefect,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Field::Energy => "energy",
            Field::SX => "S_x",
            Field::SP => "S_p",
            Field::S => "S",
            Field::IX => "I_x",
            Field::IP => "I_p",
            Field::I => "I",
            Field::EX => "E_x",
            Field::EP => "E_p",
            Field::E => "E",
            Field::AN => "A_n",
            Field::TN => "T_n",
            Field::LAllowed => "l_allowed",
            Field::LRightGap => "l_right_gap",
            Field::ParsevalDefect => "parseval_defect",
        }
    }

    pub fn get(self, m: &Measures) -> f64 {
        let idx = Field::ALL.iter().position(|&f| f == self).expect("listed field");
        m.fields()[idx]
    }
}

/// One `(sweep value, state, solver)` result, or the reason it failed.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub mode: Mode,
    pub value: f64,
    pub n: usize,
    pub solver: Solver,
    pub outcome: Result<Measures, String>,
    /// First sweep value of this `(solver, n)` series whose tunneling
    /// probability exceeds the onset threshold.
    pub t_onset: Option<f64>,
}

impl ReportRow {
    pub fn measures(&self) -> Option<&Measures> {
        self.outcome.as_ref().ok()
    }

    pub fn get(&self, field: Field) -> Option<f64> {
        self.measures().map(|m| field.get(m))
    }

    /// Copy as it reads back from text output.
    pub fn rounded(&self) -> Self {
        let round = |v: f64| format_number(v).parse::<f64>().expect("formatted number parses");
        Self {
            value: round(self.value),
            outcome: self.outcome.as_ref().map(Measures::rounded).map_err(Clone::clone),
            t_onset: self.t_onset.map(round),
            ..self.clone()
        }
    }
}

/// Column names of the full row layout, in order.
pub fn columns() -> Vec<&'static str> {
    let mut c = vec!["mode", "value", "n", "solver"];
    c.extend(Field::ALL.iter().map(|f| f.name()));
    c.extend(["t_onset", "shannon_ok", "fisher_ok", "onicescu_ok", "error"]);
    c
}

/// `x` with [`SIGNIFICANT_DIGITS`] significant digits, in positional
/// notation for moderate magnitudes and scientific otherwise.
pub fn format_number(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let exp: i32 = sci.split_once('e').and_then(|(_, e)| e.parse().ok()).expect("exponent");
    if (-5..10).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

fn cells(row: &ReportRow) -> Vec<String> {
    let mut out = vec![row.mode.name().to_string(), format_number(row.value), row.n.to_string(), row.solver.name().to_string()];
    let flag = |b: bool| if b { "1" } else { "0" }.to_string();
    match &row.outcome {
        Ok(m) => {
            out.extend(m.fields().iter().map(|&v| format_number(v)));
            out.push(row.t_onset.map(format_number).unwrap_or_default());
            out.extend([flag(m.shannon_ok()), flag(m.fisher_ok()), flag(m.onicescu_ok()), String::new()]);
        }
        Err(msg) => {
            out.extend(std::iter::repeat(String::new()).take(Field::ALL.len() + 4));
            out.push(msg.clone());
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Tsv,
    Pretty,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "tsv" => Ok(Format::Tsv),
            "pretty" => Ok(Format::Pretty),
            _ => Err(format!("unknown format `{s}` (expected csv, tsv or pretty)")),
        }
    }
}

/// Renders a header plus records in the requested format.
pub fn render(header: &[&str], records: &[Vec<String>], format: Format) -> String {
    match format {
        Format::Csv => delimited(header, records, b','),
        Format::Tsv => delimited(header, records, b'\t'),
        Format::Pretty => aligned(header, records),
    }
}

fn delimited(header: &[&str], records: &[Vec<String>], delimiter: u8) -> String {
    let mut w = csv::WriterBuilder::new().delimiter(delimiter).terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
    w.write_record(header).expect("write to memory");
    for r in records {
        w.write_record(r).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 cells")
}

fn aligned(header: &[&str], records: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in records {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let text: Vec<String> = cells.zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        let _ = writeln!(out, "{}", text.join("  ").trim_end());
    };
    line(&mut header.iter().copied());
    for r in records {
        line(&mut r.iter().map(String::as_str));
    }
    out
}

/// Rows in the full layout.
pub fn render_rows(rows: &[ReportRow], format: Format) -> String {
    let records: Vec<Vec<String>> = rows.iter().map(cells).collect();
    render(&columns(), &records, format)
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseRowError {
    #[error("csv: {0}")]
    Csv(String),
    #[error("header mismatch: expected `{expected}`, found `{found}`")]
    Header { expected: String, found: String },
    #[error("record {record}: bad `{column}` value `{value}`")]
    Cell { record: usize, column: &'static str, value: String },
}

/// Reads rows written by [`render_rows`] in CSV format.
pub fn parse_rows(text: &str) -> Result<Vec<ReportRow>, ParseRowError> {
    let mut reader = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let cols = columns();
    let header = reader.headers().map_err(|e| ParseRowError::Csv(e.to_string()))?.clone();
    if header.iter().ne(cols.iter().copied()) {
        return Err(ParseRowError::Header { expected: cols.join(","), found: header.iter().collect::<Vec<_>>().join(",") });
    }
    let mut rows = Vec::new();
    for (idx, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| ParseRowError::Csv(e.to_string()))?;
        let record = idx + 1;
        let cell = |i: usize| rec.get(i).unwrap_or("");
        let bad = |i: usize| ParseRowError::Cell { record, column: cols[i], value: cell(i).to_string() };
        let num = |i: usize| cell(i).parse::<f64>().map_err(|_| bad(i));
        let mode: Mode = cell(0).parse().map_err(|_| bad(0))?;
        let value = num(1)?;
        let n: usize = cell(2).parse().map_err(|_| bad(2))?;
        let solver: Solver = cell(3).parse().map_err(|_| bad(3))?;
        let base = 4;
        let onset_col = base + Field::ALL.len();
        let error_col = cols.len() - 1;
        let outcome = if cell(error_col).is_empty() {
            let mut f = [0.0; 15];
            for (k, slot) in f.iter_mut().enumerate() {
                *slot = num(base + k)?;
            }
            Ok(Measures::from_fields(f))
        } else {
            Err(cell(error_col).to_string())
        };
        let t_onset = if cell(onset_col).is_empty() { None } else { Some(num(onset_col)?) };
        rows.push(ReportRow { mode, value, n, solver, outcome, t_onset });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample_row(error: bool) -> ReportRow {
        let m = Measures {
            energy: 1.2337658950271,
            s_x: 0.3862943611198906,
            s_p: 1.8,
            s: 2.1862943611198906,
            i_x: 9.869604401089358,
            i_p: 0.4,
            i: 3.947841760435743,
            e_x: 0.75,
            e_p: 0.12,
            e: 0.09,
            a_n: 1.1107207345395915,
            t_n: 1.5e-7,
            l_allowed: 2.0,
            l_right_gap: 0.0,
            parseval_defect: 3.1e-15,
        };
        ReportRow {
            mode: Mode::SchoEta,
            value: 0.001,
            n: 0,
            solver: Solver::Exact,
            outcome: if error { Err("state 0: no bracket, \"quoted\"".into()) } else { Ok(m) },
            t_onset: if error { None } else { Some(2.5) },
        }
    }

    #[test]
    fn number_layout() {
        assert_eq!(format_number(1.2337658950271), "1.233765895");
        assert_eq!(format_number(-1.0000307e0), "-1.000030700");
        assert_eq!(format_number(97.474035270680), "97.47403527");
        assert_eq!(format_number(9.99999999999), "10.00000000");
        assert_eq!(format_number(3.1e-15), "3.100000000e-15");
        assert_eq!(format_number(1234567890123.0), "1.234567890e12");
        assert_eq!(format_number(0.0), "0");
        assert!(!format_number(12345.678).contains(','));
    }

    #[test]
    fn csv_round_trip() {
        let rows = vec![sample_row(false), sample_row(true)];
        let text = render_rows(&rows, Format::Csv);
        assert!(text.starts_with("mode,value,n,solver,energy,S_x,S_p,S,"));
        let back = parse_rows(&text).unwrap();
        let want: Vec<ReportRow> = rows.iter().map(ReportRow::rounded).collect();
        assert_eq!(back, want);
        assert_eq!(render_rows(&back, Format::Csv), text);
    }

    #[test]
    fn error_rows_keep_their_message() {
        let text = render_rows(&[sample_row(true)], Format::Csv);
        let back = parse_rows(&text).unwrap();
        assert_eq!(back[0].outcome, Err("state 0: no bracket, \"quoted\"".to_string()));
    }

    #[test]
    fn header_mismatch_is_reported() {
        assert!(matches!(parse_rows("a,b\n1,2\n"), Err(ParseRowError::Header { .. })));
    }

    #[test]
    fn tsv_and_pretty_layouts() {
        let rows = vec![sample_row(false)];
        let tsv = render_rows(&rows, Format::Tsv);
        assert_eq!(tsv.lines().next().unwrap().split('\t').count(), columns().len());
        let pretty = render_rows(&rows, Format::Pretty);
        let lines: Vec<&str> = pretty.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].contains("energy") && lines[1].contains("1.233765895"));
    }

    #[test]
    fn flags_follow_values() {
        let row = sample_row(false);
        let m = row.measures().unwrap();
        assert!(m.shannon_ok() && !m.fisher_ok() && m.onicescu_ok());
        let text = render_rows(&[row], Format::Csv);
        let data: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
        assert_eq!(&data[data.len() - 4..data.len() - 1], &["1", "0", "1"]);
    }

    proptest! {
        #[test]
        fn formatted_numbers_are_stable(x in -1e12f64..1e12, scale in -20i32..20) {
            let v = x * 10f64.powi(scale);
            let once: f64 = format_number(v).parse().unwrap();
            prop_assert_eq!(format_number(once), format_number(v));
            prop_assert!(((once - v) / v).abs() <= 5e-10 || v == 0.0);
        }
    }
}
