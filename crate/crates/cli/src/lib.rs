//! Library side of the `octobohr` binary: builds radii tables, verification
//! sweeps and sharpness scans, and renders them as CSV or JSON.
//!
//! Every float cell is printed with `{:.16e}`, which round-trips an `f64`.
//! Identical inputs give byte-identical output.

use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use octobohr::numerics::RootResult;
use octobohr::radii::{
    radius_bernardi, radius_cesaro, radius_fourier, radius_laplace_rstar, RadiusKind,
};
use octobohr::verification::{
    sharpness_scan, verify_inequality, SharpnessReport, VerificationReport,
};
use octobohr::Inequality;
use serde::Serialize;
use thiserror::Error;

pub const RADII_HEADER: [&str; 10] = [
    "kind",
    "beta",
    "gamma",
    "m",
    "root",
    "residual",
    "bracket_lo",
    "bracket_hi",
    "iterations",
    "error",
];
pub const VERIFY_HEADER: [&str; 6] = ["kind", "r", "p", "majorant", "bound", "slack"];
pub const SHARPNESS_HEADER: [&str; 8] = [
    "kind",
    "r",
    "p",
    "majorant_series",
    "majorant_closed",
    "bound",
    "excess",
    "correction",
];

pub const DEFAULT_BETAS: [f64; 3] = [0.5, 1.0, 2.0];
pub const DEFAULT_GAMMA_M: [(f64, usize); 3] = [(1.0, 0), (0.0, 1), (2.0, 0)];

/// Smallest truncation order accepted on the command line.
pub const MIN_ORDER: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or a violated precondition; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// Solver failure or I/O trouble; exit code 1.
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<octobohr::Error> for CliError {
    fn from(e: octobohr::Error) -> Self {
        match e {
            octobohr::Error::Precondition(_) | octobohr::Error::Domain(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(format!("i/o error: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Internal(format!("csv error: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Internal(format!("json error: {e}"))
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Rendered output plus whether the command found a problem that should
/// turn into a nonzero exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub text: String,
    pub failed: bool,
}

pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}

/// Writes `text` to `out`, or to stdout when `out` is `None`. Files are
/// written to a temporary sibling and renamed into place.
pub fn write_output(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(text.as_bytes())?;
            tmp.as_file().sync_all()?;
            tmp.persist(path).map_err(|e| CliError::from(e.error))?;
        }
    }
    Ok(())
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

fn json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// One row of the radii table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RadiusRow {
    pub kind: RadiusKind,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
    pub m: Option<usize>,
    pub root: Option<f64>,
    pub residual: Option<f64>,
    pub bracket_lo: Option<f64>,
    pub bracket_hi: Option<f64>,
    pub iterations: Option<usize>,
    pub error: Option<String>,
}

impl RadiusRow {
    fn new(kind: RadiusKind) -> Self {
        RadiusRow {
            kind,
            beta: None,
            gamma: None,
            m: None,
            root: None,
            residual: None,
            bracket_lo: None,
            bracket_hi: None,
            iterations: None,
            error: None,
        }
    }

    fn with_result(mut self, res: octobohr::Result<RootResult>) -> Self {
        match res {
            Ok(r) => {
                self.root = Some(r.root);
                self.residual = Some(r.residual);
                self.bracket_lo = Some(r.bracket.0);
                self.bracket_hi = Some(r.bracket.1);
                self.iterations = Some(r.iterations);
            }
            Err(e) => self.error = Some(e.to_string()),
        }
        self
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.kind.name().to_string(),
            fmt_opt(self.beta),
            fmt_opt(self.gamma),
            self.m.map(|m| m.to_string()).unwrap_or_default(),
            fmt_opt(self.root),
            fmt_opt(self.residual),
            fmt_opt(self.bracket_lo),
            fmt_opt(self.bracket_hi),
            self.iterations.map(|i| i.to_string()).unwrap_or_default(),
            self.error.clone().unwrap_or_default(),
        ]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RadiiConfig {
    pub betas: Vec<f64>,
    pub gamma_m: Vec<(f64, usize)>,
    pub tol: f64,
}

impl Default for RadiiConfig {
    fn default() -> Self {
        RadiiConfig {
            betas: DEFAULT_BETAS.to_vec(),
            gamma_m: DEFAULT_GAMMA_M.to_vec(),
            tol: octobohr::numerics::DEFAULT_TOL,
        }
    }
}

/// Cesàro rows for each β (β = 1 is labelled `cesaro_beta1`), Bernardi rows
/// for each `(γ, m)`, then the Fourier constant and every `r*` root found.
pub fn radii_rows(cfg: &RadiiConfig) -> Result<Vec<RadiusRow>> {
    if !(cfg.tol > 0.0) {
        return Err(CliError::Usage(format!(
            "--tol must be positive, got {}",
            cfg.tol
        )));
    }
    let mut rows = Vec::new();
    for &beta in &cfg.betas {
        let kind = if (beta - 1.0).abs() < octobohr::operators::BETA_ONE_TOL {
            RadiusKind::CesaroBeta1
        } else {
            RadiusKind::Cesaro
        };
        let mut row = RadiusRow::new(kind).with_result(radius_cesaro(beta, cfg.tol));
        row.beta = Some(beta);
        rows.push(row);
    }
    for &(gamma, m) in &cfg.gamma_m {
        let mut row =
            RadiusRow::new(RadiusKind::Bernardi).with_result(radius_bernardi(gamma, m, cfg.tol));
        row.gamma = Some(gamma);
        row.m = Some(m);
        rows.push(row);
    }
    let mut fourier = RadiusRow::new(RadiusKind::Fourier);
    fourier.root = Some(radius_fourier());
    fourier.residual = Some(0.0);
    rows.push(fourier);
    match radius_laplace_rstar(cfg.tol) {
        Ok(roots) if roots.is_empty() => {
            let mut row = RadiusRow::new(RadiusKind::LaplaceRstar);
            row.error = Some("no sign change of P on (0, 1)".into());
            rows.push(row);
        }
        Ok(roots) => {
            rows.extend(
                roots
                    .into_iter()
                    .map(|r| RadiusRow::new(RadiusKind::LaplaceRstar).with_result(Ok(r))),
            );
        }
        Err(e) => rows.push(RadiusRow::new(RadiusKind::LaplaceRstar).with_result(Err(e))),
    }
    Ok(rows)
}

/// The radii table. `failed` is set when any row carries an error.
pub fn cmd_radii(cfg: &RadiiConfig, format: Format) -> Result<Output> {
    let rows = radii_rows(cfg)?;
    let failed = rows.iter().any(|r| r.error.is_some());
    let text = match format {
        Format::Csv => csv_string(&RADII_HEADER, rows.iter().map(RadiusRow::cells))?,
        Format::Json => json_string(&rows)?,
    };
    Ok(Output { text, failed })
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub inequality: Inequality,
    /// Explicit radii; when empty the grid is `rmax * i / grid_steps`.
    pub r_list: Vec<f64>,
    /// Defaults to the claimed radius (0.95 for Laplace).
    pub rmax: Option<f64>,
    pub grid_steps: usize,
    pub samples: usize,
    pub seed: u64,
    pub order: usize,
}

fn check_order(order: usize) -> Result<()> {
    if order < MIN_ORDER {
        return Err(CliError::Usage(format!(
            "--order must be at least {MIN_ORDER}, got {order}"
        )));
    }
    Ok(())
}

/// The radius grid a verification run will use.
pub fn verify_grid(cfg: &VerifyConfig) -> Result<Vec<f64>> {
    if !cfg.r_list.is_empty() {
        return Ok(cfg.r_list.clone());
    }
    if cfg.grid_steps == 0 {
        return Err(CliError::Usage("--grid-steps must be at least 1".into()));
    }
    let rmax = match cfg.rmax {
        Some(r) => r,
        None => match cfg.inequality {
            Inequality::Laplace => 0.95,
            ineq => ineq.claimed_radius()?,
        },
    };
    let n = cfg.grid_steps;
    Ok((1..=n).map(|i| rmax * i as f64 / n as f64).collect())
}

pub fn run_verify(cfg: &VerifyConfig) -> Result<VerificationReport> {
    check_order(cfg.order)?;
    let grid = verify_grid(cfg)?;
    Ok(verify_inequality(
        cfg.inequality,
        &grid,
        cfg.samples,
        cfg.seed,
        cfg.order,
    )?)
}

/// A verification sweep. `failed` is set when any violation was found.
pub fn cmd_verify(cfg: &VerifyConfig, format: Format) -> Result<Output> {
    let report = run_verify(cfg)?;
    let kind = cfg.inequality.name();
    let text = match format {
        Format::Csv => csv_string(
            &VERIFY_HEADER,
            report.rows.iter().map(|row| {
                vec![
                    kind.to_string(),
                    fmt_f64(row.r),
                    fmt_f64(row.p),
                    fmt_f64(row.majorant),
                    fmt_f64(row.bound),
                    fmt_f64(row.slack),
                ]
            }),
        )?,
        Format::Json => json_string(&report)?,
    };
    Ok(Output {
        text,
        failed: !report.passed(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SharpnessConfig {
    pub inequality: Inequality,
    /// Defaults to the claimed radius plus 0.02.
    pub r: Option<f64>,
    pub p_list: Vec<f64>,
}

pub fn run_sharpness(cfg: &SharpnessConfig) -> Result<SharpnessReport> {
    let r = match cfg.r {
        Some(r) => r,
        None => cfg.inequality.claimed_radius()? + 0.02,
    };
    Ok(sharpness_scan(cfg.inequality, r, &cfg.p_list)?)
}

/// A sharpness scan, one row per `p`.
pub fn cmd_sharpness(cfg: &SharpnessConfig, format: Format) -> Result<Output> {
    let report = run_sharpness(cfg)?;
    let kind = cfg.inequality.name();
    let text = match format {
        Format::Csv => csv_string(
            &SHARPNESS_HEADER,
            report.rows.iter().map(|row| {
                vec![
                    kind.to_string(),
                    fmt_f64(report.r_test),
                    fmt_f64(row.p),
                    fmt_f64(row.majorant_series),
                    fmt_f64(row.majorant_closed),
                    fmt_f64(row.bound),
                    fmt_f64(row.excess),
                    fmt_f64(row.correction),
                ]
            }),
        )?,
        Format::Json => json_string(&report)?,
    };
    Ok(Output {
        text,
        failed: false,
    })
}


#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
