//! CSV tables and the JSON manifest. Files are written to a temporary sibling and
//! renamed, so a rerun replaces previous results atomically.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;

use crate::config::RunConfig;
use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Table {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: vec![] }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<Vec<u8>, CliError> {
        let mut w = csv::Writer::from_writer(vec![]);
        let err = |e: csv::Error| CliError::Io(e.to_string());
        w.write_record(&self.header).map_err(err)?;
        for r in &self.rows {
            w.write_record(r).map_err(err)?;
        }
        w.into_inner().map_err(|e| CliError::Io(e.to_string()))
    }
}

/// Shortest round-trip form (exponent notation for very small or large values);
/// identical input gives identical text.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}

#[derive(Clone, Debug, Serialize)]
pub struct OutputEntry {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    pub files: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Manifest {
    pub schema_version: u32,
    pub command: String,
    pub config: RunConfig,
    pub outputs: Vec<OutputEntry>,
    pub diagnostics: BTreeMap<String, Value>,
    pub timings_s: BTreeMap<String, f64>,
}

pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(bytes).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

/// Writes every table, then the manifest. Returns the paths written.
pub fn write_results(out: &Path, manifest: &Manifest, tables: &[(String, Table)]) -> Result<Vec<PathBuf>, CliError> {
    std::fs::create_dir_all(out).map_err(|e| CliError::Io(format!("{}: {e}", out.display())))?;
    let mut paths = Vec::with_capacity(tables.len() + 1);
    for (name, t) in tables {
        let p = out.join(name);
        write_atomic(&p, &t.to_csv()?)?;
        paths.push(p);
    }
    let p = out.join("manifest.json");
    let mut json = serde_json::to_vec_pretty(manifest).map_err(|e| CliError::Io(e.to_string()))?;
    json.push(b'\n');
    write_atomic(&p, &json)?;
    paths.push(p);
    Ok(paths)
}
