//! Run configuration: a TOML file with `[potential]`, `[grid]`, `[solver]` and
//! `[output]` sections. Unknown keys are rejected.
//!
//! ```toml
//! [potential]
//! family = "yukawa"
//! strength = 0.25
//! range = 1.0
//!
//! [solver]
//! m = 1.0
//! lambda = 1.5          # or [1.2, 1.5], or { start = 1.1, stop = 2.0, count = 20 }
//! ```

use std::path::Path;

use dirac_scatter::discretization::lebedev_degrees;
use dirac_scatter::potentials::PotentialSpec;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub potential: PotentialSpec,
    #[serde(default)]
    pub grid: GridConfig,
    pub solver: SolverConfig,
    #[serde(default)]
    pub output: OutputConfig,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    /// Radial extent of the volume grid; defaults to `12 × potential range`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_max: Option<f64>,
    #[serde(default = "default_n_r")]
    pub n_r: usize,
    /// Exactness degree of the product rule on the direction sphere.
    #[serde(default = "default_sphere_order")]
    pub sphere_order: usize,
    /// Lebedev degree of the angular part of the volume grid.
    #[serde(default = "default_volume_order")]
    pub volume_order: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig { r_max: None, n_r: default_n_r(), sphere_order: default_sphere_order(), volume_order: default_volume_order() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Spacing {
    Linear,
    /// `λ = m + 10^x` with `x` uniform; resolves structure near threshold.
    LogOffset,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LambdaSpec {
    One(f64),
    Many(Vec<f64>),
    Range(LambdaRange),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LambdaRange {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    #[serde(default = "default_spacing")]
    pub spacing: Spacing,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverConfig {
    pub m: f64,
    pub lambda: LambdaSpec,
    /// Incident direction for `solve` and `amplitude`.
    #[serde(default = "default_direction")]
    pub direction: [f64; 3],
    /// Incident channel; defaults to 4 for λ > m and 2 for λ < -m.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub channel: Option<usize>,
    /// Highest orbital number of the partial-wave pipeline.
    #[serde(default = "default_l_max")]
    pub l_max: usize,
    /// Compare partial-wave phase factors with the eigenvalues of `S`.
    #[serde(default = "default_true")]
    pub compare_spectrum: bool,
    /// Also build `T` by the factorized route and report the difference.
    #[serde(default)]
    pub factorization_check: bool,
    /// Number of eigenpairs kept in the reconstruction (all by default).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    /// Direction pairs sampled by `reconstruct`.
    #[serde(default = "default_samples")]
    pub samples: usize,
    /// Extra σ_min evaluations per refined minimum in `exceptional-scan`.
    #[serde(default = "default_refine")]
    pub refine: usize,
    #[serde(default = "default_kernel_box")]
    pub kernel_box: f64,
    #[serde(default = "default_kernel_fft_n")]
    pub kernel_fft_n: usize,
    #[serde(default = "default_kernel_points")]
    pub kernel_points: usize,
    /// Radii (in units of 1/κ) of the far-field check.
    #[serde(default = "default_asymptotic_radii")]
    pub asymptotic_radii: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default = "default_dir")]
    pub dir: String,
    /// Polar angles in `[0, π]` of the amplitude tables.
    #[serde(default = "default_theta_points")]
    pub theta_points: usize,
}

impl Default for OutputConfig {
    fn default() -> Self {
        OutputConfig { dir: default_dir(), theta_points: default_theta_points() }
    }
}

fn default_n_r() -> usize {
    32
}
fn default_sphere_order() -> usize {
    26
}
fn default_volume_order() -> usize {
    11
}
fn default_spacing() -> Spacing {
    Spacing::Linear
}
fn default_direction() -> [f64; 3] {
    [0.0, 0.0, 1.0]
}
fn default_l_max() -> usize {
    6
}
fn default_true() -> bool {
    true
}
fn default_samples() -> usize {
    50
}
fn default_refine() -> usize {
    14
}
fn default_kernel_box() -> f64 {
    8.0
}
fn default_kernel_fft_n() -> usize {
    128
}
fn default_kernel_points() -> usize {
    20
}
fn default_asymptotic_radii() -> Vec<f64> {
    vec![10.0, 20.0, 40.0]
}
fn default_dir() -> String {
    "out".into()
}
fn default_theta_points() -> usize {
    37
}

impl RunConfig {
    /// Requested energies in the listed order.
    pub fn lambdas(&self) -> Vec<f64> {
        match &self.solver.lambda {
            LambdaSpec::One(l) => vec![*l],
            LambdaSpec::Many(v) => v.clone(),
            LambdaSpec::Range(r) => {
                if r.count == 1 {
                    return vec![r.start];
                }
                let t = |i: usize| i as f64 / (r.count - 1) as f64;
                match r.spacing {
                    Spacing::Linear => (0..r.count).map(|i| r.start + (r.stop - r.start) * t(i)).collect(),
                    Spacing::LogOffset => {
                        let m = self.solver.m;
                        let (a, b) = ((r.start - m).log10(), (r.stop - m).log10());
                        (0..r.count).map(|i| m + 10f64.powf(a + (b - a) * t(i))).collect()
                    }
                }
            }
        }
    }

    pub fn r_max(&self) -> f64 {
        self.grid.r_max.unwrap_or(12.0 * self.potential.range())
    }

    /// Fills defaults that depend on other fields.
    pub fn fill_defaults(&mut self) {
        if self.grid.r_max.is_none() {
            self.grid.r_max = Some(12.0 * self.potential.range());
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |msg: String| Err(CliError::Validation(msg));
        self.potential.validate().map_err(|e| CliError::Validation(e.to_string()))?;
        let m = self.solver.m;
        if !(m > 0.0 && m.is_finite()) {
            return bad(format!("solver.m must be positive, got {m}"));
        }
        if let LambdaSpec::Range(r) = &self.solver.lambda {
            if r.count == 0 {
                return bad("solver.lambda range needs count >= 1".into());
            }
            if r.spacing == Spacing::LogOffset && (r.start <= m || r.stop <= m) {
                return bad("log-offset spacing requires start and stop above m".into());
            }
        }
        let lambdas = self.lambdas();
        if lambdas.is_empty() {
            return bad("solver.lambda is empty".into());
        }
        for l in lambdas {
            if !(l.is_finite() && l.abs() > m) {
                return bad(format!("requires |lambda| > m (lambda = {l}, m = {m})"));
            }
        }
        let r_max = self.r_max();
        if !(r_max > 0.0 && r_max.is_finite()) {
            return bad(format!("grid.r_max must be positive, got {r_max}"));
        }
        if self.grid.n_r < 2 {
            return bad("grid.n_r must be at least 2".into());
        }
        if self.grid.sphere_order < 2 {
            return bad("grid.sphere_order must be at least 2".into());
        }
        if !lebedev_degrees().contains(&self.grid.volume_order) {
            return bad(format!("grid.volume_order {} is not one of {:?}", self.grid.volume_order, lebedev_degrees()));
        }
        let d = self.solver.direction;
        if !((d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt() > 0.0) {
            return bad("solver.direction must be nonzero".into());
        }
        if let Some(c) = self.solver.channel {
            if !(1..=4).contains(&c) {
                return bad(format!("solver.channel must be 1..=4, got {c}"));
            }
        }
        if self.solver.samples == 0 || self.solver.kernel_points == 0 {
            return bad("solver.samples and solver.kernel_points must be positive".into());
        }
        if self.solver.asymptotic_radii.len() < 2 || self.solver.asymptotic_radii.iter().any(|r| !(*r > 0.0)) {
            return bad("solver.asymptotic_radii needs at least two positive radii".into());
        }
        if self.solver.threads == Some(0) {
            return bad("solver.threads must be positive".into());
        }
        if self.output.theta_points < 2 {
            return bad("output.theta_points must be at least 2".into());
        }
        Ok(())
    }

    pub fn to_toml(&self) -> Result<String, CliError> {
        toml::to_string(self).map_err(|e| CliError::Validation(format!("cannot serialize config: {e}")))
    }
}

/// Parses TOML text into a validated config with defaults filled.
pub fn parse_config(text: &str) -> Result<RunConfig, CliError> {
    let mut cfg: RunConfig = toml::from_str(text).map_err(|e| CliError::Validation(format!("config: {e}")))?;
    cfg.fill_defaults();
    cfg.validate()?;
    Ok(cfg)
}

pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}

pub fn write_config(path: &Path, cfg: &RunConfig) -> Result<(), CliError> {
    crate::output::write_atomic(path, cfg.to_toml()?.as_bytes())
}
