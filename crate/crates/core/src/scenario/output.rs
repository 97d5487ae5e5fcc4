//! CSV curve files and the JSON run summary.
//!
//! A curve file is UTF-8 with LF line endings: `# key=value` metadata lines,
//! one header row, then data rows with every value printed to 17 significant
//! digits.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::Path;

use serde::Serialize;

/// One CSV output: metadata, column names and rows of numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveTable {
    pub name: String,
    pub metadata: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl CurveTable {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Self {
            name: name.to_string(),
            metadata: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.metadata.push((key.to_string(), value.to_string()));
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn metadata_value(&self, key: &str) -> Option<&str> {
        self.metadata
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn file_name(&self) -> String {
        format!("{}.csv", self.name)
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> io::Result<()> {
        for (k, v) in &self.metadata {
            writeln!(w, "# {k}={v}")?;
        }
        let mut csv = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(w);
        csv.write_record(&self.columns)?;
        for row in &self.rows {
            csv.write_record(row.iter().map(|x| format_value(*x)))?;
        }
        csv.flush()?;
        Ok(())
    }

    pub fn write(&self, dir: &Path) -> io::Result<()> {
        let file = fs::File::create(dir.join(self.file_name()))?;
        self.write_to(io::BufWriter::new(file))
    }

    pub fn read(path: &Path) -> io::Result<Self> {
        let text = fs::read(path)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        Self::parse(&name, &text)
    }

    pub fn parse(name: &str, bytes: &[u8]) -> io::Result<Self> {
        let invalid = |m: String| io::Error::new(io::ErrorKind::InvalidData, m);
        let mut metadata = Vec::new();
        let mut body_start = 0;
        for line in bytes.lines() {
            let line = line?;
            let Some(rest) = line.strip_prefix('#') else {
                break;
            };
            body_start += line.len() + 1;
            let (k, v) = rest
                .trim_start()
                .split_once('=')
                .ok_or_else(|| invalid(format!("metadata line without '=': {line}")))?;
            metadata.push((k.to_string(), v.to_string()));
        }
        let mut reader = csv::Reader::from_reader(&bytes[body_start.min(bytes.len())..]);
        let columns: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record?;
            let row = record
                .iter()
                .map(|f| f.parse::<f64>().map_err(|e| invalid(format!("{f:?}: {e}"))))
                .collect::<io::Result<Vec<_>>>()?;
            rows.push(row);
        }
        Ok(Self {
            name: name.to_string(),
            metadata,
            columns,
            rows,
        })
    }
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_value(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

/// Minimum margin and violation count of one bound along a curve.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSummary {
    pub name: String,
    /// `min(truth - floor)` for floors, `min(ceiling - |truth|)` for ceilings.
    pub min_margin: f64,
    pub violations: usize,
    /// Whether a violation makes the run fail.
    pub enforced: bool,
    pub tolerance: f64,
}

impl CheckSummary {
    pub fn from_margins(
        name: &str,
        margins: impl IntoIterator<Item = f64>,
        tolerance: f64,
        enforced: bool,
    ) -> Self {
        let mut min_margin = f64::INFINITY;
        let mut violations = 0;
        for m in margins {
            min_margin = min_margin.min(m);
            if m < -tolerance {
                violations += 1;
            }
        }
        Self {
            name: name.to_string(),
            min_margin,
            violations,
            enforced,
            tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunSummary {
    pub scenario: String,
    pub checks: Vec<CheckSummary>,
    pub crossover_times: BTreeMap<String, f64>,
    /// Violations of enforced checks.
    pub violations: usize,
    pub wall_time_s: f64,
    pub seeds: Vec<u64>,
    pub files: Vec<String>,
}

impl RunSummary {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn write(&self, dir: &Path) -> io::Result<()> {
        let file = fs::File::create(dir.join("summary.json"))?;
        let mut w = io::BufWriter::new(file);
        serde_json::to_writer_pretty(&mut w, self)?;
        writeln!(w)?;
        w.flush()
    }
}
