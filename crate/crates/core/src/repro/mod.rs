//! Regenerates the published tables from embedded data and compares every
//! cell with the printed value.

mod applications;
mod examples;
pub mod reference;

use std::fmt;
use std::str::FromStr;

pub use applications::{
    application_dataset, application_files, run_application, ApplicationDataset, ApplicationResult,
};
pub use examples::{
    cases_printed, cases_squared, run_example1, run_example2, run_example2_on, run_worked_example,
    sweep_sets, worked_example, CaseTableRow, DeltaSweepRow, CASE_METHODS,
};

use crate::error::Error;
use crate::table::{format_fixed, Cell, Table};

/// Embedded dataset files, same schema as the command-line input.
pub mod data {
    pub const TABLE3: &str = include_str!("../../data/table3.json");
    pub const TABLE3_SQUARED: &str = include_str!("../../data/table3_squared.json");
    pub const WORKED_PATTERNS: &str = include_str!("../../data/worked_patterns.json");
    pub const WORKED_SAMPLES: &str = include_str!("../../data/worked_samples.json");
    pub const APP1_PATIENTS: &str = include_str!("../../data/app1_patients.json");
    pub const APP1_DIAGNOSES: &str = include_str!("../../data/app1_diagnoses.json");
    pub const APP2_PATIENTS: &str = include_str!("../../data/app2_patients.json");
    pub const APP2_DIAGNOSES: &str = include_str!("../../data/app2_diagnoses.json");
    pub const APP3_PATIENTS: &str = include_str!("../../data/app3_patients.json");
    pub const APP3_DIAGNOSES: &str = include_str!("../../data/app3_diagnoses.json");

    pub const ALL: [(&str, &str); 10] = [
        ("table3.json", TABLE3),
        ("table3_squared.json", TABLE3_SQUARED),
        ("worked_patterns.json", WORKED_PATTERNS),
        ("worked_samples.json", WORKED_SAMPLES),
        ("app1_patients.json", APP1_PATIENTS),
        ("app1_diagnoses.json", APP1_DIAGNOSES),
        ("app2_patients.json", APP2_PATIENTS),
        ("app2_diagnoses.json", APP2_DIAGNOSES),
        ("app3_patients.json", APP3_PATIENTS),
        ("app3_diagnoses.json", APP3_DIAGNOSES),
    ];
}

/// Largest accepted gap between a regenerated cell and its printed value.
pub const TOLERANCE: f64 = 0.002;

/// A cell that differs from the printed table. Written as
/// `table,row,col,printed,computed`.
#[derive(Debug, Clone, PartialEq)]
pub struct Discrepancy {
    pub table: String,
    pub row: String,
    pub col: String,
    pub printed: String,
    pub computed: String,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{}",
            self.table, self.row, self.col, self.printed, self.computed
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    Table1,
    Table2,
    Table4,
    App1,
    App2,
    App3,
    All,
}

impl Selector {
    pub const NAMES: [&'static str; 7] =
        ["table1", "table2", "table4", "app1", "app2", "app3", "all"];

    fn expand(self) -> Vec<Selector> {
        use Selector::*;
        match self {
            All => vec![Table1, Table2, Table4, App1, App2, App3],
            one => vec![one],
        }
    }

    pub fn name(self) -> &'static str {
        use Selector::*;
        match self {
            Table1 => "table1",
            Table2 => "table2",
            Table4 => "table4",
            App1 => "app1",
            App2 => "app2",
            App3 => "app3",
            All => "all",
        }
    }
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        use Selector::*;
        Ok(match s {
            "table1" => Table1,
            "table2" => Table2,
            "table4" => Table4,
            "app1" => App1,
            "app2" => App2,
            "app3" => App3,
            "all" => All,
            other => {
                return Err(Error::Config(format!(
                    "unknown table '{other}' (expected one of {})",
                    Self::NAMES.join(", ")
                )))
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub tables: Vec<Table>,
    pub discrepancies: Vec<Discrepancy>,
}

impl Report {
    pub fn matches(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

struct Checker<'a> {
    table: &'a str,
    found: &'a mut Vec<Discrepancy>,
}

impl Checker<'_> {
    fn number(&mut self, row: &str, col: &str, printed: f64, computed: f64) {
        let within = (computed - printed).abs() <= TOLERANCE;
        if !within {
            self.push(
                row,
                col,
                format_fixed(printed, 4),
                format_fixed(computed, 4),
            );
        }
    }

    fn label(&mut self, row: &str, col: &str, printed: &str, computed: &str) {
        if printed != computed {
            self.push(row, col, printed.to_string(), computed.to_string());
        }
    }

    fn push(&mut self, row: &str, col: &str, printed: String, computed: String) {
        self.found.push(Discrepancy {
            table: self.table.to_string(),
            row: row.to_string(),
            col: col.to_string(),
            printed,
            computed,
        });
    }
}

fn table1(report: &mut Report) {
    let mut t = Table::new(
        "Distances over the delta sweep",
        ["delta", "euclidean", "proposed"],
    );
    let mut check = Checker {
        table: "table1",
        found: &mut report.discrepancies,
    };
    for (row, printed) in run_example1().iter().zip(reference::TABLE1_PROPOSED) {
        let name = format_fixed(row.delta, 1);
        check.number(
            &name,
            "euclidean",
            reference::TABLE1_EUCLIDEAN,
            row.euclid.value(),
        );
        check.number(&name, "proposed", printed, row.proposed.value());
        t.push_row(vec![
            Cell::Number(row.delta),
            Cell::Number(row.euclid.value()),
            Cell::Number(row.proposed.value()),
        ]);
    }
    report.tables.push(t);
}

fn table2(report: &mut Report) {
    let mut t = Table::new(
        "Scores over the delta sweep",
        ["delta", "score_a", "score_b", "abs_score_a", "abs_score_b"],
    );
    let mut check = Checker {
        table: "table2",
        found: &mut report.discrepancies,
    };
    let printed = reference::TABLE2_SCORE_A
        .iter()
        .zip(reference::TABLE2_SCORE_B);
    for (row, (&sa, sb)) in run_example1().iter().zip(printed) {
        let name = format_fixed(row.delta, 1);
        check.number(&name, "score_a", sa, row.score_a.value());
        check.number(&name, "score_b", sb, row.score_b.value());
        check.number(&name, "abs_score_a", sa.abs(), row.abs_score_a);
        check.number(&name, "abs_score_b", sb.abs(), row.abs_score_b);
        t.push_row(vec![
            Cell::Number(row.delta),
            Cell::Number(row.score_a.value()),
            Cell::Number(row.score_b.value()),
            Cell::Number(row.abs_score_a),
            Cell::Number(row.abs_score_b),
        ]);
    }
    report.tables.push(t);
}

fn table4(report: &mut Report) {
    let header = std::iter::once("method".to_string()).chain((1..=8).map(|i| format!("case{i}")));
    let mut t = Table::new("Distances over the eight cases", header);
    let mut check = Checker {
        table: "table4",
        found: &mut report.discrepancies,
    };
    for (row, (printed_label, printed)) in run_example2().iter().zip(reference::TABLE4) {
        let label = row.method_name();
        check.label(&label, "method", printed_label, &label);
        let mut cells = vec![Cell::Text(label.clone())];
        for (i, (v, p)) in row.values.iter().zip(printed).enumerate() {
            check.number(&label, &format!("case{}", i + 1), p, v.value());
            cells.push(Cell::Number(v.value()));
        }
        t.push_row(cells);
    }
    report.tables.push(t);
}

fn application(report: &mut Report, id: u8) {
    let name = format!("app{id}");
    let result = run_application(id).expect("embedded applications are valid");
    let printed = reference::application(id).expect("known application");
    let mut check = Checker {
        table: &name,
        found: &mut report.discrepancies,
    };

    let header = std::iter::once("patient".to_string())
        .chain(result.diagnoses.iter().cloned())
        .chain(["diagnosis".to_string()]);
    let mut distances = Table::new(
        format!("Application {id}: distances to each diagnosis"),
        header,
    );
    for (p, patient) in result.patients.iter().enumerate() {
        let mut cells = vec![Cell::Text(patient.clone())];
        for (d, diagnosis) in result.diagnoses.iter().enumerate() {
            let value = result.distances[p][d].value();
            check.number(patient, diagnosis, printed.distances[p][d], value);
            cells.push(Cell::Number(value));
        }
        check.label(
            patient,
            "diagnosis",
            printed.judgments[p],
            &result.judgments[p],
        );
        cells.push(Cell::Text(result.judgments[p].clone()));
        distances.push_row(cells);
    }

    let header = std::iter::once("method".to_string()).chain(result.patients.iter().cloned());
    let mut judgments = Table::new(format!("Application {id}: diagnoses by method"), header);
    for (method, labels) in printed.context {
        let row = std::iter::once(*method).chain(labels.iter().copied());
        judgments.push_row(row.map(Cell::from).collect());
    }
    let row = std::iter::once("proposed".to_string()).chain(result.judgments.iter().cloned());
    judgments.push_row(row.map(Cell::from).collect());

    report.tables.push(distances);
    report.tables.push(judgments);
}

/// Regenerates the selected tables and lists every cell outside [`TOLERANCE`]
/// and every judgment that differs from the printed one.
pub fn reproduce(selector: Selector) -> Report {
    let mut report = Report::default();
    for one in selector.expand() {
        match one {
            Selector::Table1 => table1(&mut report),
            Selector::Table2 => table2(&mut report),
            Selector::Table4 => table4(&mut report),
            Selector::App1 => application(&mut report, 1),
            Selector::App2 => application(&mut report, 2),
            Selector::App3 => application(&mut report, 3),
            Selector::All => unreachable!("expanded above"),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::Dataset;

    #[test]
    fn embedded_files_validate() {
        for (name, text) in data::ALL {
            let d = Dataset::from_json_str(text, crate::DEFAULT_EPSILON);
            assert!(d.is_ok(), "{name}: {d:?}");
        }
    }

    #[test]
    fn selector_names_round_trip() {
        for name in Selector::NAMES {
            assert_eq!(name.parse::<Selector>().unwrap().name(), name);
        }
        assert!("table9".parse::<Selector>().is_err());
    }

    #[test]
    fn discrepancy_line_format() {
        let d = Discrepancy {
            table: "app1".into(),
            row: "P1".into(),
            col: "Malaria".into(),
            printed: "0.2235".into(),
            computed: "0.2291".into(),
        };
        assert_eq!(d.to_string(), "app1,P1,Malaria,0.2235,0.2291");
    }

    #[test]
    fn sweep_tables_match() {
        assert!(reproduce(Selector::Table1).matches());
        assert!(reproduce(Selector::Table2).matches());
        assert!(reproduce(Selector::Table4).matches());
    }

    #[test]
    fn all_emits_every_table() {
        let r = reproduce(Selector::All);
        assert_eq!(r.tables.len(), 3 + 2 * 3);
    }
}
