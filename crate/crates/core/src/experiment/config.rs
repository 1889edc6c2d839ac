//! Declarative run configuration and the built-in presets.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::biphoton_state::{SpdcSpectrum, SpectrumEntry};
use crate::error::{Error, Result};
use crate::interferometer::default_coherence_time;
use crate::mode_index::Basis;

/// Which coincidence model a scan evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Interference {
    /// Equal path lengths: full two-photon interference.
    Interfering,
    /// Path difference far beyond the coherence time.
    Distinguishable,
    /// Coincidences as a function of path delay.
    DelayScan,
}

/// Default bound on the detection-mode indices (`m, n` in `0..=4`).
pub const DEFAULT_MAX_INDEX: u32 = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub spectrum: SpdcSpectrum,
    pub dove_theta_degrees: f64,
    pub detection_basis: Basis,
    pub max_index: u32,
    pub interference: Interference,
    /// Path delays in seconds; required for delay scans.
    pub delays: Vec<f64>,
    /// Two-photon coherence time in seconds.
    pub coherence_time: f64,
    /// Simulated pairs per second.
    pub pair_rate: f64,
    /// Seconds.
    pub integration_time: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            spectrum: SpdcSpectrum::demo(),
            dove_theta_degrees: 0.0,
            detection_basis: Basis::Hg,
            max_index: DEFAULT_MAX_INDEX,
            interference: Interference::Interfering,
            delays: Vec::new(),
            coherence_time: default_coherence_time(),
            pair_rate: 1.0,
            integration_time: 1.0,
        }
    }
}

pub const PRESET_NAMES: [&str; 2] = ["fig2", "fig3"];

impl RunConfig {
    /// `fig2`: Dove prisms parallel. `fig3`: Dove prisms at 45°.
    /// Both detect in HG with indices up to 4 on the demo spectrum.
    pub fn preset(name: &str) -> Result<Self> {
        let theta = match name {
            "fig2" => 0.0,
            "fig3" => 45.0,
            other => {
                return Err(Error::Config {
                    field: "preset",
                    reason: format!("unknown preset {other:?} (expected one of {PRESET_NAMES:?})"),
                })
            }
        };
        Ok(Self {
            dove_theta_degrees: theta,
            ..Self::default()
        })
    }

    /// Expected counts per unit probability.
    pub fn count_scale(&self) -> f64 {
        self.pair_rate * self.integration_time
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |field: &'static str, value: f64| {
            if value > 0.0 && value.is_finite() {
                Ok(())
            } else {
                Err(Error::Config {
                    field,
                    reason: format!("must be a positive finite number, got {value}"),
                })
            }
        };
        positive("pair_rate", self.pair_rate)?;
        positive("integration_time", self.integration_time)?;
        positive("coherence_time", self.coherence_time)?;
        if !self.dove_theta_degrees.is_finite() {
            return Err(Error::Config {
                field: "dove_theta_degrees",
                reason: "must be finite".into(),
            });
        }
        if self.interference == Interference::DelayScan && self.delays.is_empty() {
            return Err(Error::Config {
                field: "delays",
                reason: "delay_scan requires a non-empty list of delays".into(),
            });
        }
        if let Some(bad) = self.delays.iter().find(|d| !d.is_finite()) {
            return Err(Error::Config {
                field: "delays",
                reason: format!("delay {bad} is not finite"),
            });
        }
        Ok(())
    }

    /// Parses a JSON config document; see [`ConfigDocument`].
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ConfigDocument = serde_json::from_str(text)?;
        doc.resolve()
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn to_document(&self) -> ConfigDocument {
        ConfigDocument {
            preset: None,
            spectrum: Some(SpectrumField::Entries(self.spectrum.entries().to_vec())),
            dove_theta_degrees: Some(self.dove_theta_degrees),
            detection_basis: Some(self.detection_basis),
            max_index: Some(self.max_index),
            interference: Some(self.interference),
            delays: Some(self.delays.clone()),
            coherence_time: Some(self.coherence_time),
            pair_rate: Some(self.pair_rate),
            integration_time: Some(self.integration_time),
        }
    }
}

/// Spectrum given either by name (`"demo"`) or as explicit entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpectrumField {
    Named(String),
    Entries(Vec<SpectrumEntry>),
}

/// On-disk form of [`RunConfig`]. Every field is optional; missing fields
/// come from `preset` when given, otherwise from the defaults (demo
/// spectrum, 0°, HG detection, max index 4, interfering, unit rate and time).
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumField>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dove_theta_degrees: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detection_basis: Option<Basis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_index: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interference: Option<Interference>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delays: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coherence_time: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair_rate: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integration_time: Option<f64>,
}

impl ConfigDocument {
    pub fn resolve(self) -> Result<RunConfig> {
        let mut cfg = match &self.preset {
            Some(name) => RunConfig::preset(name)?,
            None => RunConfig::default(),
        };
        if let Some(spectrum) = self.spectrum {
            cfg.spectrum = match spectrum {
                SpectrumField::Named(name) if name == "demo" => SpdcSpectrum::demo(),
                SpectrumField::Named(name) => {
                    return Err(Error::Config {
                        field: "spectrum",
                        reason: format!("unknown named spectrum {name:?} (expected \"demo\")"),
                    })
                }
                SpectrumField::Entries(entries) => {
                    SpdcSpectrum::new(entries).map_err(|e| Error::Config {
                        field: "spectrum",
                        reason: e.to_string(),
                    })?
                }
            };
        }
        if let Some(v) = self.dove_theta_degrees {
            cfg.dove_theta_degrees = v;
        }
        if let Some(v) = self.detection_basis {
            cfg.detection_basis = v;
        }
        if let Some(v) = self.max_index {
            cfg.max_index = v;
        }
        if let Some(v) = self.interference {
            cfg.interference = v;
        }
        if let Some(v) = self.delays {
            cfg.delays = v;
        }
        if let Some(v) = self.coherence_time {
            cfg.coherence_time = v;
        }
        if let Some(v) = self.pair_rate {
            cfg.pair_rate = v;
        }
        if let Some(v) = self.integration_time {
            cfg.integration_time = v;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}
