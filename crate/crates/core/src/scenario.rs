//! Config-driven experiments: analytic curves and simulations written as CSV.
//!
//! A config is a TOML file with shared sections and one or more
//! `[[scenario]]` tables; each scenario expands into one series per height.
//! The schema is described in the repository README.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::mmp;
use crate::params::{dbm_to_mw, ChannelParams, Dimension, RadioParams};
use crate::ppp::{self, PppParams};
use crate::sim::{self, CoverageEstimate, DeploymentBox};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    PppAnalytic,
    MmpAnalytic,
    PppSim,
    MmpSim,
    /// `ρ_csma` against the underlying intensity; the grid holds intensities.
    MmpIntensity,
}

impl Model {
    fn name(self) -> &'static str {
        match self {
            Model::PppAnalytic => "ppp_analytic",
            Model::MmpAnalytic => "mmp_analytic",
            Model::PppSim => "ppp_sim",
            Model::MmpSim => "mmp_sim",
            Model::MmpIntensity => "mmp_intensity",
        }
    }

    fn is_sim(self) -> bool {
        matches!(self, Model::PppSim | Model::MmpSim)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelSection {
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    #[serde(default = "default_mu")]
    pub mu: f64,
}

fn default_alpha() -> f64 {
    4.0
}

fn default_mu() -> f64 {
    1.0
}

impl Default for ChannelSection {
    fn default() -> Self {
        Self { alpha: 4.0, mu: 1.0 }
    }
}

/// Radio parameters as written in a config; thresholds in dBm or mW.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RadioSection {
    pub p_t_mw: Option<f64>,
    pub t_d_dbm: Option<f64>,
    pub t_d_mw: Option<f64>,
    pub beta: Option<f64>,
    pub eps_d: Option<f64>,
    pub eps_v: Option<f64>,
}

impl RadioSection {
    /// Fills unset fields from the 802.11-like defaults.
    pub fn resolve(&self) -> Result<RadioParams> {
        let base = RadioParams::wifi();
        let t_d = match (self.t_d_dbm, self.t_d_mw) {
            (Some(_), Some(_)) => {
                return Err(Error::Config("radio: give only one of t_d_dbm and t_d_mw".into()));
            }
            (Some(dbm), None) => dbm_to_mw(dbm),
            (None, Some(mw)) => mw,
            (None, None) => base.t_d,
        };
        let r = RadioParams {
            p_t: self.p_t_mw.unwrap_or(base.p_t),
            t_d,
            beta: self.beta.unwrap_or(base.beta),
            eps_d: self.eps_d.unwrap_or(base.eps_d),
            eps_v: self.eps_v.unwrap_or(base.eps_v),
        };
        r.validate().map_err(|e| Error::Config(format!("radio: {e}")))?;
        Ok(r)
    }
}

/// Abscissae: `start..=stop` by `step`, or an explicit list.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSection {
    pub start: Option<f64>,
    pub stop: Option<f64>,
    pub step: Option<f64>,
    pub values: Option<Vec<f64>>,
}

fn snap(x: f64) -> f64 {
    format!("{x:.12e}").parse().unwrap_or(x)
}

impl GridSection {
    pub fn points(&self) -> Result<Vec<f64>> {
        let pts = match (&self.values, self.start, self.stop, self.step) {
            (Some(v), None, None, None) => v.clone(),
            (None, Some(start), Some(stop), Some(step)) => {
                if !(step > 0.0) || !start.is_finite() || !stop.is_finite() {
                    return Err(Error::Config(format!("grid: step = {step} must be positive")));
                }
                // Index-based so that the last point does not drift, then
                // snapped to 13 digits so 0.1 steps print as 0.3, not 0.30000000000000004.
                let n = ((stop - start) / step + 1e-9).floor();
                if n < 0.0 {
                    Vec::new()
                } else {
                    (0..=n as usize).map(|i| snap(start + i as f64 * step)).collect()
                }
            }
            _ => {
                return Err(Error::Config(
                    "grid: give either `values` or all of `start`, `stop`, `step`".into(),
                ))
            }
        };
        if pts.is_empty() {
            return Err(Error::Config("grid: no points (empty d grid)".into()));
        }
        if pts.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::Config("grid: values must be finite and nonnegative".into()));
        }
        Ok(pts)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulationSection {
    #[serde(default = "default_trials")]
    pub trials: u64,
    #[serde(default)]
    pub seed: u64,
}

fn default_trials() -> u64 {
    1000
}

impl Default for SimulationSection {
    fn default() -> Self {
        Self { trials: 1000, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    pub path: Option<PathBuf>,
}

/// One `[[scenario]]` table.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesSpec {
    pub model: Model,
    pub dimension: Dimension,
    /// Planar intensity (nodes/m²); 3D series use `λ / Z`.
    pub lambda2d: Option<f64>,
    /// Explicit intensity, bypassing `λ / Z` (nodes/m^D).
    pub rho: Option<f64>,
    #[serde(default)]
    pub z_heights: Vec<f64>,
    /// Horizontal side of the simulation box (m).
    #[serde(default = "default_box_xy")]
    pub box_xy: f64,
    #[serde(default = "default_aloha")]
    pub aloha_p: f64,
    pub label: Option<String>,
}

fn default_box_xy() -> f64 {
    200.0
}

fn default_aloha() -> f64 {
    1.0
}

/// A whole experiment: shared parameters and the series to produce.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    #[serde(default)]
    pub channel: ChannelSection,
    pub radio: Option<RadioSection>,
    pub grid: GridSection,
    #[serde(default)]
    pub simulation: SimulationSection,
    #[serde(default)]
    pub output: OutputSection,
    pub scenario: Vec<SeriesSpec>,
}

/// One series after expanding heights and resolving the intensity.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub model: Model,
    pub dimension: Dimension,
    pub intensity: f64,
    /// Box height for simulations (0 for planar).
    pub height: f64,
    pub box_xy: f64,
    pub aloha_p: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub x: f64,
    pub series: String,
    pub value: f64,
    pub ci: Option<(f64, f64)>,
}

/// CSV text plus diagnostics worth surfacing (resampled realizations).
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub csv: String,
    pub diagnostics: Vec<String>,
}

impl ScenarioConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn channel(&self) -> Result<ChannelParams> {
        ChannelParams::new(self.channel.alpha, self.channel.mu).map_err(|e| Error::Config(format!("channel: {e}")))
    }

    pub fn radio(&self) -> Result<RadioParams> {
        self.radio
            .unwrap_or(RadioSection {
                p_t_mw: None,
                t_d_dbm: None,
                t_d_mw: None,
                beta: None,
                eps_d: None,
                eps_v: None,
            })
            .resolve()
    }

    /// Header of the abscissa column.
    pub fn x_column(&self) -> &'static str {
        if self.scenario.iter().all(|s| s.model == Model::MmpIntensity) {
            "rho"
        } else {
            "d_m"
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ch = self.channel()?;
        self.radio()?;
        let grid = self.grid.points()?;
        if self.scenario.is_empty() {
            return Err(Error::Config("at least one [[scenario]] table is required".into()));
        }
        let intensity_sweep = self.scenario.iter().filter(|s| s.model == Model::MmpIntensity).count();
        if intensity_sweep != 0 && intensity_sweep != self.scenario.len() {
            return Err(Error::Config(
                "mmp_intensity sweeps intensities and cannot share a grid with distance models".into(),
            ));
        }
        if self.scenario.iter().any(|s| s.model.is_sim()) && self.simulation.trials == 0 {
            return Err(Error::Config("simulation.trials must be at least 1".into()));
        }
        for (i, s) in self.scenario.iter().enumerate() {
            let at = |msg: String| Error::Config(format!("scenario[{i}] ({}): {msg}", s.model.name()));
            ch.check_dimension(s.dimension).map_err(|e| at(e.to_string()))?;
            if s.dimension == Dimension::Three
                && s.model != Model::MmpIntensity
                && s.rho.is_none()
                && s.z_heights.is_empty()
            {
                return Err(at("z_heights must be nonempty for 3D scenarios".into()));
            }
            if s.model.is_sim() && s.rho.is_some() {
                return Err(at("simulations take lambda2d and z_heights, not rho".into()));
            }
            if s.model.is_sim() && s.dimension == Dimension::Three && s.z_heights.is_empty() {
                return Err(at("z_heights must be nonempty for 3D simulations".into()));
            }
            if s.model != Model::MmpIntensity && s.rho.is_none() && s.lambda2d.is_none() {
                return Err(at("lambda2d or rho is required".into()));
            }
            if s.model == Model::MmpIntensity && (s.rho.is_some() || s.lambda2d.is_some()) {
                return Err(at("mmp_intensity takes its intensities from the grid".into()));
            }
            if s.rho.is_some() && s.lambda2d.is_some() {
                return Err(at("give lambda2d or rho, not both".into()));
            }
            for (name, v) in [("lambda2d", s.lambda2d), ("rho", s.rho)] {
                if let Some(v) = v {
                    if !(v >= 0.0) || !v.is_finite() {
                        return Err(at(format!("{name} = {v} must be nonnegative")));
                    }
                }
            }
            if s.z_heights.iter().any(|z| !(*z > 0.0) || !z.is_finite()) {
                return Err(at("z_heights must be positive".into()));
            }
            if !(s.box_xy > 0.0) || !s.box_xy.is_finite() {
                return Err(at(format!("box_xy = {} must be positive", s.box_xy)));
            }
            if !(s.aloha_p > 0.0 && s.aloha_p <= 1.0) {
                return Err(at(format!("aloha_p = {} must lie in (0, 1]", s.aloha_p)));
            }
            if s.aloha_p != 1.0 && s.model != Model::PppAnalytic && s.model != Model::PppSim {
                return Err(at("aloha_p applies to PPP models only".into()));
            }
            if matches!(s.model, Model::MmpAnalytic | Model::MmpSim) && grid.iter().any(|&d| d <= 0.0) {
                return Err(at("emitter-receiver distances must be positive for MMP models".into()));
            }
            if s.model == Model::MmpSim && s.lambda2d == Some(0.0) {
                return Err(at("mmp_sim needs a positive intensity".into()));
            }
        }
        Ok(())
    }

    /// Expands every `[[scenario]]` into its series.
    pub fn series(&self) -> Vec<Series> {
        let mut out = Vec::new();
        for s in &self.scenario {
            let prefix = s.label.clone().unwrap_or_else(|| s.model.name().to_string());
            let mk = |label: String, intensity: f64, height: f64| Series {
                label,
                model: s.model,
                dimension: s.dimension,
                intensity,
                height,
                box_xy: s.box_xy,
                aloha_p: s.aloha_p,
            };
            match (s.dimension, s.rho) {
                (Dimension::Two, _) => out.push(mk(format!("{prefix}/2D"), s.rho.or(s.lambda2d).unwrap_or(0.0), 0.0)),
                (Dimension::Three, Some(rho)) => out.push(mk(format!("{prefix}/3D"), rho, 0.0)),
                (Dimension::Three, None) if s.model == Model::MmpIntensity => {
                    out.push(mk(format!("{prefix}/3D"), 0.0, 0.0))
                }
                (Dimension::Three, None) => {
                    let lambda = s.lambda2d.unwrap_or(0.0);
                    for &z in &s.z_heights {
                        out.push(mk(format!("{prefix}/3D/Z={z}"), lambda / z, z));
                    }
                }
            }
        }
        out
    }
}

/// Seed of series `index`, spread so that series draw unrelated streams.
fn series_seed(master: u64, index: usize) -> u64 {
    master.wrapping_add((index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn eval_series(
    cfg: &ScenarioConfig,
    s: &Series,
    index: usize,
    grid: &[f64],
    diagnostics: &mut Vec<String>,
) -> Result<Vec<Row>> {
    let ch = cfg.channel()?;
    let radio = cfg.radio()?;
    let row = |x: f64, value: f64, ci: Option<(f64, f64)>| Row {
        x,
        series: s.label.clone(),
        value,
        ci,
    };
    let from_estimates = |est: Vec<CoverageEstimate>| -> Vec<Row> {
        grid.iter()
            .zip(est)
            .map(|(&x, e)| row(x, e.p_hat, Some((e.ci_low, e.ci_high))))
            .collect()
    };
    let trials = cfg.simulation.trials;
    let seed = series_seed(cfg.simulation.seed, index);
    match s.model {
        Model::PppAnalytic => {
            let p = PppParams::with_aloha(s.dimension, s.intensity, s.aloha_p)?;
            grid.iter()
                .map(|&d| Ok(row(d, ppp::coverage_ppp(&p, &ch, radio.beta, d)?, None)))
                .collect()
        }
        Model::MmpAnalytic => grid
            .iter()
            .map(|&d| {
                Ok(row(
                    d,
                    mmp::coverage_csma(s.intensity, &radio, &ch, d, s.dimension)?,
                    None,
                ))
            })
            .collect(),
        Model::MmpIntensity => {
            let r_d = mmp::detection_radius(&radio, &ch);
            let p_d = mmp::prob_detect(&radio, &ch, r_d, s.dimension)?;
            grid.iter()
                .map(|&rho| Ok(row(rho, mmp::mmp_intensity(rho, r_d, p_d, s.dimension)?.1, None)))
                .collect()
        }
        Model::PppSim => {
            let window = DeploymentBox::new(s.box_xy, s.box_xy, s.height)?;
            let est = sim::estimate_ppp_curve(&window, s.intensity * s.aloha_p, &ch, radio.beta, grid, trials, seed)?;
            Ok(from_estimates(est))
        }
        Model::MmpSim => {
            let window = DeploymentBox::new(s.box_xy, s.box_xy, s.height)?;
            let est = sim::estimate_csma_curve(&window, s.intensity, &radio, &ch, grid, trials, seed)?;
            if let Some(e) = est.first() {
                if e.resampled > 0 {
                    diagnostics.push(format!(
                        "{}: {} empty MMP realizations resampled over {} trials",
                        s.label, e.resampled, trials
                    ));
                }
            }
            Ok(from_estimates(est))
        }
    }
}

/// Evaluates every series on the grid, series by series.
pub fn evaluate(cfg: &ScenarioConfig) -> Result<(Vec<Row>, Vec<String>)> {
    cfg.validate()?;
    let grid = cfg.grid.points()?;
    let mut rows = Vec::new();
    let mut diagnostics = Vec::new();
    for (i, s) in cfg.series().iter().enumerate() {
        rows.extend(eval_series(cfg, s, i, &grid, &mut diagnostics)?);
    }
    Ok((rows, diagnostics))
}

/// Writes rows as CSV with a header; analytic rows leave the interval blank.
pub fn to_csv(x_column: &str, rows: &[Row]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Io(e.to_string());
    w.write_record([x_column, "series", "value", "ci_low", "ci_high"])
        .map_err(csv_err)?;
    for r in rows {
        let (lo, hi) = match r.ci {
            Some((lo, hi)) => (format!("{lo:?}"), format!("{hi:?}")),
            None => (String::new(), String::new()),
        };
        w.write_record([format!("{:?}", r.x), r.series.clone(), format!("{:?}", r.value), lo, hi])
            .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// Runs the config and returns the CSV text; writing it is up to the caller.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<RunOutput> {
    let (rows, diagnostics) = evaluate(cfg)?;
    Ok(RunOutput {
        csv: to_csv(cfg.x_column(), &rows)?,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
        [grid]
        start = 0
        stop = 2
        step = 1

        [[scenario]]
        model = "ppp_analytic"
        dimension = 3
        lambda2d = 1.51e-2
        z_heights = [20, 100]
    "#;

    #[test]
    fn grid_includes_stop() {
        let g = GridSection {
            start: Some(0.0),
            stop: Some(10.0),
            step: Some(0.1),
            values: None,
        };
        let p = g.points().unwrap();
        assert_eq!(p.len(), 101);
        assert!((p[100] - 10.0).abs() < 1e-12);
    }

    #[test]
    fn minimal_config_expands_heights() {
        let cfg = ScenarioConfig::from_toml_str(MINIMAL).unwrap();
        let series = cfg.series();
        assert_eq!(series.len(), 2);
        assert_eq!(series[0].label, "ppp_analytic/3D/Z=20");
        assert!((series[0].intensity - 7.55e-4).abs() < 1e-15);
        let out = run_scenario(&cfg).unwrap();
        let lines: Vec<&str> = out.csv.lines().collect();
        assert_eq!(lines[0], "d_m,series,value,ci_low,ci_high");
        assert_eq!(lines.len(), 1 + 6);
        assert!(lines[1].starts_with("0.0,ppp_analytic/3D/Z=20,1.0,,"), "{}", lines[1]);
    }

    #[test]
    fn empty_grid_is_a_config_error() {
        let text = MINIMAL.replace("stop = 2", "stop = -1");
        assert!(matches!(ScenarioConfig::from_toml_str(&text), Err(Error::Config(_))));
    }

    #[test]
    fn missing_heights_are_reported() {
        let text = MINIMAL.replace("z_heights = [20, 100]", "");
        let err = ScenarioConfig::from_toml_str(&text).unwrap_err().to_string();
        assert!(err.contains("scenario[0]") && err.contains("z_heights"), "{err}");
    }

    #[test]
    fn unknown_keys_are_rejected_with_position() {
        let text = MINIMAL.replace("dimension = 3", "dimension = 3\nheight = 4");
        let err = ScenarioConfig::from_toml_str(&text).unwrap_err().to_string();
        assert!(err.contains("height") && err.contains("line"), "{err}");
    }

    #[test]
    fn threshold_units_are_exclusive() {
        let r = RadioSection {
            p_t_mw: None,
            t_d_dbm: Some(-60.0),
            t_d_mw: Some(1e-6),
            beta: None,
            eps_d: None,
            eps_v: None,
        };
        assert!(r.resolve().is_err());
    }
}
