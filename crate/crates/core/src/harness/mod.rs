//! Parameter sweeps over `(θ, λ)` that record the quantumness of every
//! recorded step and write the rows as CSV.

mod period;
mod presets;

pub use period::{dominant_period, dominant_period_above, linear_trend, DEFAULT_MIN_PERIOD, MIN_PERIOD_SERIES};
pub use presets::{figure_presets, preset, PRESET_NAMES};

use std::fs::File;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channels::NoiseConfig;
use crate::error::{Error, Result};
use crate::measures::{quantumness, SearchPolicy};
use crate::walk::{evolve, Topology, WalkConfig};

/// One sweep: a topology and step count shared by every `(θ, λ)` cell.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub id: String,
    pub topology: Topology,
    pub steps: usize,
    pub thetas: Vec<f64>,
    pub lambdas: Vec<f64>,
    #[serde(default = "default_record_every")]
    pub record_every: usize,
    #[serde(default)]
    pub output_path: Option<PathBuf>,
    #[serde(default)]
    pub search: SearchPolicy,
    /// Free-form provenance shown in preset listings.
    #[serde(default)]
    pub note: String,
}

fn default_record_every() -> usize {
    1
}

impl ExperimentSpec {
    pub fn validate(&self) -> Result<()> {
        if self.thetas.is_empty() || self.lambdas.is_empty() {
            return Err(Error::InvalidSpec("theta and lambda lists must be non-empty".into()));
        }
        if self.record_every == 0 {
            return Err(Error::InvalidSpec("record_every must be positive".into()));
        }
        for cell in self.cells() {
            cell.validate()?;
        }
        Ok(())
    }

    /// Walk configurations in output order: `θ` ascending, then `λ`
    /// ascending. `λ = 0` runs the noiseless walk.
    pub fn cells(&self) -> Vec<WalkConfig> {
        let mut thetas = self.thetas.clone();
        let mut lambdas = self.lambdas.clone();
        thetas.sort_by(f64::total_cmp);
        thetas.dedup();
        lambdas.sort_by(f64::total_cmp);
        lambdas.dedup();
        let mut cells = Vec::with_capacity(thetas.len() * lambdas.len());
        for &theta in &thetas {
            for &lambda in &lambdas {
                let mut config = WalkConfig::unitary(self.topology, theta, self.steps);
                if lambda != 0.0 {
                    config.noise = Some(NoiseConfig {
                        kind: Default::default(),
                        lambda,
                    });
                }
                cells.push(config);
            }
        }
        cells
    }

    fn records(&self, t: usize) -> bool {
        t % self.record_every == 0 || t == self.steps
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub experiment: String,
    pub topology: String,
    /// `n` for a cycle, `t_max` for a line.
    pub size: usize,
    pub theta: f64,
    pub lambda: f64,
    pub t: usize,
    pub mid: f64,
    pub qd: f64,
    pub mutual_info: f64,
    pub s_coin: f64,
    pub s_pos: f64,
    pub s_joint: f64,
    pub qd_alpha: f64,
    pub qd_beta: f64,
    pub degenerate_marginal: bool,
}

/// Column order of the CSV output.
pub const CSV_HEADER: [&str; 15] = [
    "experiment",
    "topology",
    "size",
    "theta",
    "lambda",
    "t",
    "mid",
    "qd",
    "mutual_info",
    "s_coin",
    "s_pos",
    "s_joint",
    "qd_alpha",
    "qd_beta",
    "degenerate_marginal",
];

fn run_cell(spec: &ExperimentSpec, config: &WalkConfig) -> Result<Vec<ResultRow>> {
    let lambda = config.noise.map_or(0.0, |n| n.lambda);
    let mut rows = Vec::new();
    evolve(config, |state| {
        if spec.records(state.t) {
            let q = quantumness(&state.rho, state.t, &spec.search)?;
            rows.push(ResultRow {
                experiment: spec.id.clone(),
                topology: config.topology.name().to_string(),
                size: config.topology.size(),
                theta: config.theta,
                lambda,
                t: q.t,
                mid: q.mid,
                qd: q.qd,
                mutual_info: q.mutual_info,
                s_coin: q.s_coin,
                s_pos: q.s_pos,
                s_joint: q.s_joint,
                qd_alpha: q.qd_argmin.alpha,
                qd_beta: q.qd_argmin.beta,
                degenerate_marginal: q.degenerate_marginal,
            });
        }
        Ok(())
    })?;
    Ok(rows)
}

/// Runs every cell of the sweep. Cells run in parallel; rows come back in
/// `(θ, λ, t)` order regardless of scheduling.
pub fn run(spec: &ExperimentSpec) -> Result<Vec<ResultRow>> {
    spec.validate()?;
    let per_cell = spec
        .cells()
        .par_iter()
        .map(|config| run_cell(spec, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(per_cell.into_iter().flatten().collect())
}

/// Runs the sweep and writes the CSV to `spec.output_path`.
pub fn run_to_file(spec: &ExperimentSpec) -> Result<Vec<ResultRow>> {
    let path = spec
        .output_path
        .as_deref()
        .ok_or_else(|| Error::InvalidSpec(format!("experiment {:?} has no output path", spec.id)))?;
    let rows = run(spec)?;
    write_csv_file(path, &rows)?;
    Ok(rows)
}

/// Nine significant digits, scientific notation, no negative zero.
fn fmt_real(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.8e}")
}

pub fn write_csv<W: Write>(writer: W, rows: &[ResultRow]) -> Result<()> {
    let mut out = csv::Writer::from_writer(writer);
    out.write_record(CSV_HEADER)?;
    for r in rows {
        out.write_record([
            r.experiment.clone(),
            r.topology.clone(),
            r.size.to_string(),
            fmt_real(r.theta),
            fmt_real(r.lambda),
            r.t.to_string(),
            fmt_real(r.mid),
            fmt_real(r.qd),
            fmt_real(r.mutual_info),
            fmt_real(r.s_coin),
            fmt_real(r.s_pos),
            fmt_real(r.s_joint),
            fmt_real(r.qd_alpha),
            fmt_real(r.qd_beta),
            r.degenerate_marginal.to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_csv_file(path: &Path, rows: &[ResultRow]) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    write_csv(File::create(path)?, rows)
}
