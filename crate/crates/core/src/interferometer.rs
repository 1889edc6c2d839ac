//! Optical elements between the source and the detectors: the Dove-prism
//! pair in path B, the path-length delay, and the 50:50 beamsplitter
//! followed by joint projective detection.
//!
//! The beamsplitter uses the symmetric convention
//! `a† → (c† + i d†)/√2`, `b† → (i c† + d†)/√2`. A term `c_uv a†_u b†_v`
//! then reaches detector C in mode `u` and detector D in mode `v` with
//! amplitude `(c_uv - c_vu)/2`: only the exchange-antisymmetric part of the
//! input survives as coincidences.

use std::collections::BTreeSet;

use num_complex::Complex64;

use crate::biphoton_state::{apply_local, LocalUnitary, ModePair, TwoPhotonState};
use crate::error::{Error, Result};
use crate::mode_index::{Basis, ModeOrder, SpatialMode};

pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Relative rotation of the two Dove prisms, radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DovePairSetting {
    pub theta: f64,
}

impl DovePairSetting {
    pub fn from_degrees(degrees: f64) -> Self {
        Self {
            theta: degrees.to_radians(),
        }
    }
}

/// Relative path delay and the two-photon coherence time, both in seconds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DelaySetting {
    tau: f64,
    coherence_time: f64,
}

impl DelaySetting {
    pub fn new(tau: f64, coherence_time: f64) -> Result<Self> {
        if !(coherence_time > 0.0 && coherence_time.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "coherence time must be positive, got {coherence_time}"
            )));
        }
        if !tau.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "delay must be finite, got {tau}"
            )));
        }
        Ok(Self {
            tau,
            coherence_time,
        })
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn coherence_time(&self) -> f64 {
        self.coherence_time
    }

    /// Two-photon visibility envelope `V(τ) = exp(-(τ/τ_c)²)`.
    pub fn visibility(&self) -> f64 {
        (-(self.tau / self.coherence_time).powi(2)).exp()
    }
}

/// Probability of one photon at detector C in `mode_pair.0` and one at
/// detector D in `mode_pair.1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoincidenceResult {
    pub probability: f64,
    pub mode_pair: ModePair,
}

/// Diagonal LG operator `|L_p^l> → exp(-2ilθ) |L_p^l>`: image rotation by
/// `2θ` from a Dove pair at relative angle `θ`.
pub fn dove_pair_unitary(setting: DovePairSetting, max_order: ModeOrder) -> LocalUnitary {
    LocalUnitary::diagonal(Basis::Lg, max_order, |mode| match mode {
        SpatialMode::Lg(lg) => Complex64::from_polar(1.0, -2.0 * lg.ell as f64 * setting.theta),
        SpatialMode::Hg(_) => unreachable!("diagonal is built over LG modes"),
    })
    .expect("phase-only diagonal is unitary")
}

/// Sends path B of an LG-basis state through the Dove pair.
pub fn apply_dove_pair(state: &TwoPhotonState, setting: DovePairSetting) -> Result<TwoPhotonState> {
    if state.basis() != Basis::Lg {
        return Err(Error::BasisMismatch {
            expected: Basis::Lg,
            found: state.basis(),
        });
    }
    let max_order = state.max_order();
    apply_local(
        state,
        &LocalUnitary::identity(max_order),
        &dove_pair_unitary(setting, max_order),
    )
}

fn detection_amplitudes(
    state: &TwoPhotonState,
    u: SpatialMode,
    v: SpatialMode,
) -> Result<(Complex64, Complex64)> {
    for mode in [u, v] {
        if mode.basis() != state.basis() {
            return Err(Error::BasisMismatch {
                expected: state.basis(),
                found: mode.basis(),
            });
        }
    }
    Ok((state.amplitude(u, v), state.amplitude(v, u)))
}

/// Coincidence probability with full two-photon interference: `|c_uv - c_vu|² / 4`.
pub fn coincidence_interfering(
    state: &TwoPhotonState,
    u: SpatialMode,
    v: SpatialMode,
) -> Result<CoincidenceResult> {
    let (uv, vu) = detection_amplitudes(state, u, v)?;
    Ok(CoincidenceResult {
        probability: (uv - vu).norm_sqr() / 4.0,
        mode_pair: (u, v),
    })
}

/// Coincidence probability for distinguishable photons: `(|c_uv|² + |c_vu|²) / 4`.
pub fn coincidence_distinguishable(
    state: &TwoPhotonState,
    u: SpatialMode,
    v: SpatialMode,
) -> Result<CoincidenceResult> {
    let (uv, vu) = detection_amplitudes(state, u, v)?;
    Ok(CoincidenceResult {
        probability: (uv.norm_sqr() + vu.norm_sqr()) / 4.0,
        mode_pair: (u, v),
    })
}

/// Coincidence probability at a path delay: the distinguishable baseline
/// minus the interference term `½ Re(c_uv c_vu*) V(τ)`.
pub fn coincidence_with_delay(
    state: &TwoPhotonState,
    u: SpatialMode,
    v: SpatialMode,
    delay: &DelaySetting,
) -> Result<CoincidenceResult> {
    let (uv, vu) = detection_amplitudes(state, u, v)?;
    let visibility = delay.visibility();
    // interpolates between the two limits; exactly the interfering value at V = 1
    let interfering = (uv - vu).norm_sqr() / 4.0;
    let distinguishable = (uv.norm_sqr() + vu.norm_sqr()) / 4.0;
    Ok(CoincidenceResult {
        probability: visibility * interfering + (1.0 - visibility) * distinguishable,
        mode_pair: (u, v),
    })
}

/// `τ_c = λ² / (c Δλ)`.
pub fn coherence_time_from_filter(center_wavelength: f64, bandwidth: f64) -> Result<f64> {
    if !(center_wavelength > 0.0) || !(bandwidth > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "wavelength and bandwidth must be positive, got {center_wavelength} and {bandwidth}"
        )));
    }
    Ok(center_wavelength * center_wavelength / (SPEED_OF_LIGHT * bandwidth))
}

/// Coherence time of the 10 nm filter around 710 nm used for the default dip scans.
pub fn default_coherence_time() -> f64 {
    coherence_time_from_filter(710e-9, 10e-9).expect("positive constants")
}

/// Sum of [`coincidence_interfering`] over every ordered detection pair:
/// the squared norm of the state's antisymmetric part.
pub fn total_coincidence_probability(state: &TwoPhotonState) -> f64 {
    let support: BTreeSet<ModePair> = state
        .amplitudes()
        .keys()
        .flat_map(|&(a, b)| [(a, b), (b, a)])
        .collect();
    support
        .into_iter()
        .map(|(u, v)| (state.amplitude(u, v) - state.amplitude(v, u)).norm_sqr() / 4.0)
        .sum()
}
