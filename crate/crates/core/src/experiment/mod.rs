//! Measurement campaigns: joint-mode coincidence grids at a fixed Dove-pair
//! angle, and coincidence-versus-delay traces.
//!
//! Every run follows the same pipeline: build the SPDC state from the
//! configured spectrum, rotate path B with the Dove pair, convert both photons
//! to the detection basis, then evaluate the selected coincidence model for
//! each ordered pair of detection modes. Grid entries are expected counts
//! (`probability × pair_rate × integration_time`).

mod config;
mod output;
mod render;

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::SeedableRng;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;

pub use config::{
    ConfigDocument, Interference, RunConfig, SpectrumField, DEFAULT_MAX_INDEX, PRESET_NAMES,
};
pub use output::{
    format_number, read_grid_csv, read_trace_csv, write_grid, write_grid_csv, write_trace,
    write_trace_csv,
};
pub use render::{mode_field, render_mode, GrayImage, MIN_IMAGE_SIZE};

use crate::biphoton_state::{spdc_state, to_basis, ModePair, TwoPhotonState};
use crate::error::{Error, Result};
use crate::interferometer::{
    apply_dove_pair, coincidence_distinguishable, coincidence_interfering, coincidence_with_delay,
    DelaySetting, DovePairSetting,
};
use crate::mode_index::{modes_within_index, SpatialMode};

/// Expected coincidence counts over ordered detection-mode pairs.
/// `counts[i][j]` belongs to detector C in `rows[i]` and detector D in `cols[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoincidenceGrid {
    pub rows: Vec<SpatialMode>,
    pub cols: Vec<SpatialMode>,
    pub counts: Vec<Vec<f64>>,
}

impl CoincidenceGrid {
    pub fn get(&self, c: SpatialMode, d: SpatialMode) -> Option<f64> {
        let i = self.rows.iter().position(|m| *m == c)?;
        let j = self.cols.iter().position(|m| *m == d)?;
        Some(self.counts[i][j])
    }

    pub fn total(&self) -> f64 {
        self.counts.iter().flatten().sum()
    }

    pub fn max(&self) -> f64 {
        self.counts.iter().flatten().copied().fold(0.0, f64::max)
    }

    /// `(modeC, modeD, count)` in row-major canonical order.
    pub fn cells(&self) -> impl Iterator<Item = (SpatialMode, SpatialMode, f64)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, c)| {
            self.cols
                .iter()
                .enumerate()
                .map(move |(j, d)| (*c, *d, self.counts[i][j]))
        })
    }

    /// Replaces every expected count with a Poisson draw of that mean.
    /// The same seed always yields the same grid.
    pub fn with_shot_noise(&self, seed: u64) -> Self {
        let mut rng = StdRng::seed_from_u64(seed);
        let counts = self
            .counts
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&mean| match Poisson::new(mean) {
                        Ok(dist) => dist.sample(&mut rng),
                        Err(_) => 0.0,
                    })
                    .collect()
            })
            .collect();
        Self {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            counts,
        }
    }
}

/// Coincidence counts versus path delay for one detection pair.
#[derive(Debug, Clone, PartialEq)]
pub struct DipTrace {
    pub mode_pair: ModePair,
    /// `(delay seconds, expected counts)`, sorted by delay.
    pub points: Vec<(f64, f64)>,
}

/// The two-photon state arriving at the beamsplitter, expressed in the
/// detection basis.
pub fn prepare_state(config: &RunConfig) -> Result<TwoPhotonState> {
    config.validate()?;
    let source = spdc_state(&config.spectrum)?;
    let rotated = apply_dove_pair(
        &source,
        DovePairSetting::from_degrees(config.dove_theta_degrees),
    )?;
    Ok(to_basis(&rotated, config.detection_basis))
}

/// Coincidence grid over every ordered pair of detection modes with indices
/// up to `max_index`.
pub fn scan_grid(config: &RunConfig) -> Result<CoincidenceGrid> {
    let model: fn(&TwoPhotonState, SpatialMode, SpatialMode) -> Result<_> =
        match config.interference {
            Interference::Interfering => coincidence_interfering,
            Interference::Distinguishable => coincidence_distinguishable,
            Interference::DelayScan => {
                return Err(Error::Config {
                    field: "interference",
                    reason: "delay_scan produces dip traces, not grids".into(),
                })
            }
        };
    let state = prepare_state(config)?;
    let modes = modes_within_index(config.detection_basis, config.max_index);
    let scale = config.count_scale();

    let counts = modes
        .par_iter()
        .map(|c| {
            modes
                .iter()
                .map(|d| model(&state, *c, *d).map(|r| r.probability * scale))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(CoincidenceGrid {
        rows: modes.clone(),
        cols: modes,
        counts,
    })
}

/// Coincidence counts for detector C in `mode_c` and D in `mode_d` at each
/// configured delay.
pub fn scan_dip(config: &RunConfig, mode_c: SpatialMode, mode_d: SpatialMode) -> Result<DipTrace> {
    if config.delays.is_empty() {
        return Err(Error::Config {
            field: "delays",
            reason: "a dip scan needs at least one delay".into(),
        });
    }
    for mode in [mode_c, mode_d] {
        if mode.basis() != config.detection_basis {
            return Err(Error::Config {
                field: "detection_basis",
                reason: format!(
                    "mode {mode} is not in the {} detection basis",
                    config.detection_basis
                ),
            });
        }
    }
    let state = prepare_state(config)?;
    let scale = config.count_scale();
    let mut delays = config.delays.clone();
    delays.sort_by(f64::total_cmp);

    let points = delays
        .into_iter()
        .map(|tau| {
            let delay = DelaySetting::new(tau, config.coherence_time)?;
            let p = coincidence_with_delay(&state, mode_c, mode_d, &delay)?.probability;
            Ok((tau, p * scale))
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(DipTrace {
        mode_pair: (mode_c, mode_d),
        points,
    })
}

/// Evenly spaced delays from `-half_span` to `half_span` inclusive.
pub fn linear_delays(half_span: f64, steps: usize) -> Vec<f64> {
    if steps < 2 {
        return vec![0.0];
    }
    (0..steps)
        .map(|k| -half_span + 2.0 * half_span * k as f64 / (steps - 1) as f64)
        .collect()
}

/// Per-cell ratio of an interfering grid to its distinguishable counterpart,
/// `None` where the baseline vanishes.
pub fn enhancement_ratios(
    interfering: &CoincidenceGrid,
    distinguishable: &CoincidenceGrid,
) -> BTreeMap<ModePair, Option<f64>> {
    interfering
        .cells()
        .zip(distinguishable.cells())
        .map(|((c, d, hom), (_, _, base))| {
            let ratio = (base > 0.0).then(|| hom / base);
            ((c, d), ratio)
        })
        .collect()
}
