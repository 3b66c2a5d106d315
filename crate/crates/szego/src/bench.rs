//! Convergence-table experiment harness: for each node count n it solves
//! the Kerzman-Stein system once, evaluates every (method, truncation)
//! column at the same boundary nodes, and records sup-norm discrepancies.

use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{self, AnnulusDomain};
use crate::nystrom::{build_boundary_grid, error_norm, solve_ks};
use crate::parse::complex_str;
use crate::TruncationSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::InvalidArgument(format!("unknown format '{other}' (expected csv|json)"))),
        }
    }
}

/// Full experiment matrix. Defaults mirror the benchmark setup: a = 0.7i,
/// rho = 0.5, series widths 10/50/100 and 10/50, product depths 15/20/25,
/// node counts 16..128.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct ExperimentConfig {
    pub rho: f64,
    #[serde(with = "complex_str")]
    pub a: Complex64,
    pub series4_widths: Vec<usize>,
    pub series5_widths: Vec<usize>,
    pub product_depths: Vec<usize>,
    pub node_counts: Vec<usize>,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            rho: 0.5,
            a: Complex64::new(0.0, 0.7),
            series4_widths: vec![10, 50, 100],
            series5_widths: vec![10, 50],
            product_depths: vec![15, 20, 25],
            node_counts: vec![16, 32, 64, 128],
            format: OutputFormat::Csv,
            out: None,
        }
    }
}

impl ExperimentConfig {
    fn validate(&self) -> Result<()> {
        if self.series4_widths.is_empty()
            && self.series5_widths.is_empty()
            && self.product_depths.is_empty()
        {
            return Err(Error::InvalidArgument("no truncation columns configured".into()));
        }
        if self.node_counts.is_empty() {
            return Err(Error::InvalidArgument("no node counts configured".into()));
        }
        AnnulusDomain::new(self.rho, self.a)?;
        Ok(())
    }
}

/// One family of columns (a single method at several truncations).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyTable {
    pub family: String,
    pub columns: Vec<String>,
    /// cells[row][col], rows ordered like `ErrorTable::node_counts`.
    pub cells: Vec<Vec<f64>>,
}

/// Sup-norm errors against the Nyström reference, per node count and
/// (method, truncation) column.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ErrorTable {
    pub rho: f64,
    #[serde(with = "complex_str")]
    pub a: Complex64,
    pub node_counts: Vec<usize>,
    pub families: Vec<FamilyTable>,
}

impl ErrorTable {
    pub fn family(&self, name: &str) -> Option<&FamilyTable> {
        self.families.iter().find(|f| f.family == name)
    }

    /// Cell lookup by node count and column label, e.g. (128, "S100").
    pub fn cell(&self, n: usize, column: &str) -> Option<f64> {
        let row = self.node_counts.iter().position(|&m| m == n)?;
        for fam in &self.families {
            if let Some(col) = fam.columns.iter().position(|c| c == column) {
                return Some(fam.cells[row][col]);
            }
        }
        None
    }
}

fn annotate(err: Error, n: usize, column: &str) -> Error {
    Error::InvalidArgument(format!("cell (n = {n}, column {column}): {err}"))
}

/// Run the experiment matrix and collect the error table.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ErrorTable> {
    cfg.validate()?;
    let dom = AnnulusDomain::new(cfg.rho, cfg.a)?;

    struct Column {
        family: &'static str,
        label: String,
        method: kernel::Method,
        trunc: TruncationSpec,
    }
    let mut columns = Vec::new();
    for &n in &cfg.series4_widths {
        columns.push(Column {
            family: "series4",
            label: format!("S{n}"),
            method: kernel::Method::Series4,
            trunc: TruncationSpec::series(n),
        });
    }
    for &n in &cfg.series5_widths {
        columns.push(Column {
            family: "series5",
            label: format!("S{n}*"),
            method: kernel::Method::Series5,
            trunc: TruncationSpec::series(n),
        });
    }
    for &p in &cfg.product_depths {
        columns.push(Column {
            family: "product",
            label: format!("S{p}**"),
            method: kernel::Method::Product21,
            trunc: TruncationSpec::product(p),
        });
    }

    let mut families: Vec<FamilyTable> = Vec::new();
    for col in &columns {
        if families.last().map(|f| f.family.as_str()) != Some(col.family) {
            families.push(FamilyTable {
                family: col.family.to_string(),
                columns: Vec::new(),
                cells: vec![Vec::new(); cfg.node_counts.len()],
            });
        }
        families.last_mut().unwrap().columns.push(col.label.clone());
    }

    for (row, &n) in cfg.node_counts.iter().enumerate() {
        let grid = build_boundary_grid(cfg.rho, n)?;
        let reference = solve_ks(&grid, cfg.a)?;
        for col in &columns {
            let values: Result<Vec<Complex64>> = grid
                .nodes
                .iter()
                .map(|&z| kernel::eval_canonical(&dom, z, col.method, &col.trunc))
                .collect();
            let values = values.map_err(|e| annotate(e, n, &col.label))?;
            let err = error_norm(&values, &reference).map_err(|e| annotate(e, n, &col.label))?;
            let fam = families
                .iter_mut()
                .find(|f| f.family == col.family)
                .expect("family pre-registered");
            fam.cells[row].push(err);
        }
    }

    Ok(ErrorTable { rho: cfg.rho, a: cfg.a, node_counts: cfg.node_counts.clone(), families })
}

/// CSV layout: one block per method family with a naming header line,
/// 6-significant-digit scientific cells, ',' separators and LF endings.
pub fn write_csv<W: Write>(table: &ErrorTable, mut out: W) -> io::Result<()> {
    for (idx, fam) in table.families.iter().enumerate() {
        if idx > 0 {
            writeln!(out)?;
        }
        writeln!(out, "family,{}", fam.family)?;
        write!(out, "n")?;
        for col in &fam.columns {
            write!(out, ",{col}")?;
        }
        writeln!(out)?;
        for (row, &n) in table.node_counts.iter().enumerate() {
            write!(out, "{n}")?;
            for cell in &fam.cells[row] {
                write!(out, ",{cell:.5e}")?;
            }
            writeln!(out)?;
        }
    }
    Ok(())
}

/// JSON layout: the table serialized verbatim, binary-faithful floats.
pub fn write_json<W: Write>(table: &ErrorTable, mut out: W) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut out, table)?;
    writeln!(out)
}

pub fn write_table<W: Write>(table: &ErrorTable, format: OutputFormat, out: W) -> io::Result<()> {
    match format {
        OutputFormat::Csv => write_csv(table, out),
        OutputFormat::Json => write_json(table, out),
    }
}
