//! Builtin figure configs, embedded from `configs/`.

use crate::error::{Error, Result};
use crate::scenario::ScenarioConfig;

/// Builtin names and their TOML sources.
pub const BUILTIN: [(&str, &str); 7] = [
    ("ppp-compare", include_str!("../configs/ppp-compare.toml")),
    ("ppp-sim", include_str!("../configs/ppp-sim.toml")),
    ("mmp-compare", include_str!("../configs/mmp-compare.toml")),
    ("mmp-intensity", include_str!("../configs/mmp-intensity.toml")),
    ("mmp-sim-2000", include_str!("../configs/mmp-sim-2000.toml")),
    ("mmp-sim-200-20", include_str!("../configs/mmp-sim-200-20.toml")),
    ("mmp-sim-lowpower", include_str!("../configs/mmp-sim-lowpower.toml")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    BUILTIN.iter().map(|(n, _)| *n)
}

pub fn source(name: &str) -> Option<&'static str> {
    BUILTIN.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn config(name: &str) -> Result<ScenarioConfig> {
    let text = source(name).ok_or_else(|| {
        Error::Config(format!(
            "unknown figure `{name}`; available: {}",
            names().collect::<Vec<_>>().join(", ")
        ))
    })?;
    ScenarioConfig::from_toml_str(text).map_err(|e| Error::Config(format!("builtin {name}: {e}")))
}
