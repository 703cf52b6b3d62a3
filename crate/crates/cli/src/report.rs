//! Output model shared by all subcommands and its table, JSON and CSV renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use du2_core::{FrequencyRatio, IrrepLabel, VerificationReport};
use serde_json::{json, Map, Value};

use crate::args::Format;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq)]
pub struct Section {
    pub name: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Section {
    pub fn new(name: &'static str, columns: &[&'static str]) -> Self {
        Section {
            name,
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len(), "section {}", self.name);
        self.rows.push(row);
    }
}

/// Worst residual of one identity class.
#[derive(Debug, Clone, PartialEq)]
pub struct Residual {
    pub worst: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub irrep: Option<IrrepLabel>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub ratio: FrequencyRatio,
    pub sections: Vec<Section>,
    pub residuals: BTreeMap<String, Residual>,
}

impl Report {
    pub fn new(command: &'static str, ratio: FrequencyRatio) -> Self {
        Report {
            command,
            ratio,
            sections: Vec::new(),
            residuals: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.residuals.values().all(|r| r.passed)
    }

    /// Folds every check into its class, keeping the worst residual.
    pub fn absorb(&mut self, label: Option<IrrepLabel>, checks: &VerificationReport) {
        for check in &checks.checks {
            let entry = self.residuals.entry(check.name.clone()).or_insert(Residual {
                worst: 0.0,
                tolerance: check.tolerance,
                passed: true,
                irrep: label,
            });
            if check.residual > entry.worst || check.residual.is_nan() {
                entry.worst = check.residual;
                entry.irrep = label;
            }
            entry.tolerance = entry.tolerance.max(check.tolerance);
            entry.passed &= check.passed();
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut text = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                text.push('\n');
                text
            }
            Format::Table => self.to_table(),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn to_json(&self) -> Value {
        let records: Vec<Value> = self
            .sections
            .iter()
            .flat_map(|s| {
                s.rows.iter().map(move |row| {
                    let mut obj = Map::new();
                    obj.insert("section".into(), Value::from(s.name));
                    for (col, cell) in s.columns.iter().zip(row) {
                        obj.insert((*col).into(), cell.clone());
                    }
                    Value::Object(obj)
                })
            })
            .collect();
        let residuals: Map<String, Value> = self
            .residuals
            .iter()
            .map(|(name, r)| {
                let value = json!({
                    "worst": crate::numeric::residual(r.worst),
                    "tolerance": number(r.tolerance),
                    "passed": r.passed,
                    "irrep": r.irrep.map(|l| l.to_string()),
                });
                (name.clone(), value)
            })
            .collect();
        json!({
            "ratio": { "m": self.ratio.m(), "n": self.ratio.n() },
            "command": self.command,
            "records": records,
            "residuals": residuals,
            "tool_version": TOOL_VERSION,
        })
    }

    fn residual_section(&self) -> Section {
        let mut section = Section::new("residuals", &["class", "worst", "tolerance", "passed", "irrep"]);
        for (name, r) in &self.residuals {
            section.push(vec![
                Value::from(name.as_str()),
                crate::numeric::residual(r.worst),
                number(r.tolerance),
                Value::from(r.passed),
                r.irrep.map_or(Value::Null, |l| Value::from(l.to_string())),
            ]);
        }
        section
    }

    fn to_table(&self) -> String {
        let mut out = format!("du2 {} {}  ratio {}\n", TOOL_VERSION, self.command, self.ratio);
        let residuals = self.residual_section();
        let sections = self
            .sections
            .iter()
            .chain((!residuals.rows.is_empty()).then_some(&residuals));
        for section in sections {
            out.push('\n');
            out.push_str(&format!("[{}]\n", section.name));
            let cells: Vec<Vec<String>> = section.rows.iter().map(|r| r.iter().map(cell_text).collect()).collect();
            let widths: Vec<usize> = section
                .columns
                .iter()
                .enumerate()
                .map(|(i, c)| cells.iter().map(|r| r[i].chars().count()).fold(c.len(), usize::max))
                .collect();
            let line = |items: Vec<&str>| -> String {
                let padded: Vec<String> = items
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:<w$}", w = *w))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(section.columns.clone()));
            for row in &cells {
                let _ = writeln!(out, "{}", line(row.iter().map(String::as_str).collect()));
            }
        }
        out
    }

    fn to_csv(&self) -> String {
        let residuals = self.residual_section();
        let sections: Vec<&Section> = self.sections.iter().chain(std::iter::once(&residuals)).collect();
        let mut columns: Vec<&str> = vec!["section"];
        for section in &sections {
            for col in &section.columns {
                if !columns.contains(col) {
                    columns.push(col);
                }
            }
        }
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&columns).expect("in-memory write");
        for section in &sections {
            for row in &section.rows {
                let record = columns.iter().map(|col| {
                    if *col == "section" {
                        return section.name.to_string();
                    }
                    section
                        .columns
                        .iter()
                        .position(|c| c == col)
                        .map_or_else(String::new, |i| cell_text(&row[i]))
                });
                writer.write_record(record).expect("in-memory write");
            }
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}

/// Floats as JSON numbers; non-finite values become `null`.
pub fn number(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

fn cell_text(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => float_text(x),
            _ => n.to_string(),
        },
        other => other.to_string(),
    }
}

fn float_text(x: f64) -> String {
    if x != 0.0 && x.abs() < 1e-4 {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}
