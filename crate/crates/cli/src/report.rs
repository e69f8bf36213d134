use std::collections::BTreeMap;
use std::fmt::{self, Display, Write as _};

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA: &str = "gordon-verify/report/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Finding,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail | Status::Finding => 1,
        }
    }
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Finding => "finding",
        })
    }
}

/// Whether a failed comparison refutes a proved statement or an open one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckClass {
    Theorem,
    Conjecture,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub check: String,
    pub class: CheckClass,
    pub location: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub args: Vec<String>,
    pub status: Status,
    /// Comparisons performed, by check name.
    pub checks: BTreeMap<String, u64>,
    pub tables: BTreeMap<String, Table>,
    pub mismatches: Vec<Mismatch>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
    pub wall_time_ms: u64,
}

/// Accumulates tables and comparisons while a campaign runs.
#[derive(Debug, Default)]
pub struct Campaign {
    tables: BTreeMap<String, Table>,
    checks: BTreeMap<String, u64>,
    mismatches: Vec<Mismatch>,
    data: Option<Value>,
}

impl Campaign {
    pub fn new() -> Self {
        Campaign::default()
    }

    pub fn table(&mut self, name: &str, columns: &[&str]) -> &mut Table {
        self.tables.entry(name.to_string()).or_insert_with(|| Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        })
    }

    pub fn row(&mut self, name: &str, cells: Vec<String>) {
        self.tables.get_mut(name).expect("table declared before use").rows.push(cells);
    }

    /// Records one exact comparison; returns whether it held.
    pub fn check<T: PartialEq + Display>(
        &mut self,
        class: CheckClass,
        check: &str,
        location: impl Into<String>,
        expected: &T,
        got: &T,
    ) -> bool {
        *self.checks.entry(check.to_string()).or_default() += 1;
        let ok = expected == got;
        if !ok {
            self.mismatches.push(Mismatch {
                check: check.to_string(),
                class,
                location: location.into(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
        ok
    }

    pub fn holds(&mut self, class: CheckClass, check: &str, location: impl Into<String>, ok: bool) -> bool {
        self.check(class, check, location, &true, &ok)
    }

    pub fn set_data(&mut self, value: Value) {
        self.data = Some(value);
    }

    pub fn status(&self) -> Status {
        if self.mismatches.is_empty() {
            Status::Pass
        } else if self.mismatches.iter().all(|m| m.class == CheckClass::Conjecture) {
            Status::Finding
        } else {
            Status::Fail
        }
    }

    pub fn finish(self, command: &str, args: Vec<String>, wall_time_ms: u64) -> Report {
        let status = self.status();
        Report {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            args,
            status,
            checks: self.checks,
            tables: self.tables,
            mismatches: self.mismatches,
            data: self.data,
            wall_time_ms,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    /// Each table as a `# name` line, a header and its rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (name, table) in &self.tables {
            let _ = writeln!(out, "# {name}");
            let _ = writeln!(out, "{}", csv_line(&table.columns));
            for row in &table.rows {
                let _ = writeln!(out, "{}", csv_line(row));
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}: {}", self.command, self.args.join(" "), self.status);
        for (check, n) in &self.checks {
            let _ = writeln!(out, "  {check}: {n} comparisons");
        }
        for m in &self.mismatches {
            let _ = writeln!(out, "  MISMATCH {} at {}: expected {}, got {}", m.check, m.location, m.expected, m.got);
        }
        for (name, table) in &self.tables {
            let _ = writeln!(out, "\n[{name}]");
            let widths: Vec<usize> = (0..table.columns.len())
                .map(|c| {
                    table.rows.iter().map(|r| r[c].len()).chain([table.columns[c].len()]).max().unwrap_or(0)
                })
                .collect();
            let line = |cells: &[String]| {
                cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect::<Vec<_>>().join("  ")
            };
            let _ = writeln!(out, "{}", line(&table.columns));
            for row in &table.rows {
                let _ = writeln!(out, "{}", line(row));
            }
        }
        let _ = writeln!(out, "\n{} ms", self.wall_time_ms);
        out
    }
}

fn csv_line(cells: &[String]) -> String {
    cells
        .iter()
        .map(|c| {
            if c.contains([',', '"', '\n']) {
                format!("\"{}\"", c.replace('"', "\"\""))
            } else {
                c.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_from_mismatch_classes() {
        let mut c = Campaign::new();
        assert!(c.check(CheckClass::Theorem, "x", "n=1", &1, &1));
        assert_eq!(c.status(), Status::Pass);
        c.check(CheckClass::Conjecture, "y", "n=2", &1, &2);
        assert_eq!(c.status(), Status::Finding);
        c.check(CheckClass::Theorem, "x", "n=3", &1, &2);
        assert_eq!(c.status(), Status::Fail);
        assert_eq!(c.checks["x"], 2);
    }

    #[test]
    fn csv_quotes_cells() {
        assert_eq!(csv_line(&["a".into(), "b,c".into(), "d\"e".into()]), "a,\"b,c\",\"d\"\"e\"");
    }
}
