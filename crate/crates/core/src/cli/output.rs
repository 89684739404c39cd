use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::config::Format;
use crate::{Error, Result};

/// One table cell. Integers (positions, coin indices, signs, step counts)
/// stay integral; everything else is a real.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(i64),
    Real(f64),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            // 17 significant digits round-trip an f64
            Cell::Real(x) => format!("{x:.16e}"),
        }
    }

    pub fn as_f64(&self) -> f64 {
        match *self {
            Cell::Int(i) => i as f64,
            Cell::Real(x) => x,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Column {
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Axis {
    pub name: String,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metadata {
    pub software: String,
    pub version: String,
    pub experiment: String,
    pub hbar: u32,
    pub units_note: String,
    /// Every resolved run parameter, keyed by name.
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub notes: Vec<String>,
}

impl Metadata {
    pub fn new(experiment: &str) -> Self {
        Metadata {
            software: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            experiment: experiment.to_string(),
            hbar: 1,
            units_note: "time in inverse energy units".to_string(),
            parameters: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).unwrap_or(serde_json::Value::Null);
        self.parameters.insert(key.to_string(), v);
    }
}

/// Flat table of grid cells plus the axes that generated it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub metadata: Metadata,
    pub axes: Vec<Axis>,
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Cell>>,
}

impl SweepResult {
    pub fn new(metadata: Metadata, columns: &[&str]) -> Self {
        SweepResult {
            metadata,
            axes: Vec::new(),
            columns: columns
                .iter()
                .map(|c| Column {
                    name: c.to_string(),
                })
                .collect(),
            rows: Vec::new(),
        }
    }

    pub fn axis(&mut self, name: &str, values: &[f64]) {
        self.axes.push(Axis {
            name: name.to_string(),
            values: values.to_vec(),
        });
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c.name == name)
    }

    /// Values of one column across all rows.
    pub fn column_values(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r[i].as_f64()).collect())
    }
}

fn render_csv(result: &SweepResult) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let ser = |e: csv::Error| Error::Serialize(e.to_string());
    w.write_record(result.columns.iter().map(|c| c.name.as_str()))
        .map_err(ser)?;
    for row in &result.rows {
        w.write_record(row.iter().map(Cell::csv)).map_err(ser)?;
    }
    w.into_inner().map_err(|e| Error::Serialize(e.to_string()))
}

fn render_json(value: &impl Serialize) -> Result<Vec<u8>> {
    let mut bytes =
        serde_json::to_vec_pretty(value).map_err(|e| Error::Serialize(e.to_string()))?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// Serializes a result to bytes. Output is a pure function of the result.
pub fn render(result: &SweepResult, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Csv => render_csv(result),
        Format::Json => render_json(result),
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    std::fs::write(path, bytes).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Everything in a [`SweepResult`] except the rows.
#[derive(Serialize)]
struct Sidecar<'a> {
    metadata: &'a Metadata,
    axes: &'a [Axis],
    columns: &'a [Column],
}

fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

/// Writes `result` to `path` (stdout when `None`).
///
/// CSV output carries only the table; metadata, axes and column names go
/// to a `<path>.meta.json` sidecar next to it.
pub fn emit(result: &SweepResult, path: Option<&Path>, format: Format) -> Result<()> {
    let bytes = render(result, format)?;
    match path {
        Some(p) => {
            write_file(p, &bytes)?;
            if format == Format::Csv {
                let sidecar = Sidecar {
                    metadata: &result.metadata,
                    axes: &result.axes,
                    columns: &result.columns,
                };
                write_file(&sidecar_path(p), &render_json(&sidecar)?)?;
            }
            Ok(())
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(&bytes)
                .and_then(|_| lock.flush())
                .map_err(|source| Error::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}
