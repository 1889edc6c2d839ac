//! Spatial-mode labels and the canonical orderings shared by every other module.
//!
//! Laguerre-Gauss modes are labelled by a radial index `p` and an azimuthal
//! (OAM) index `ell`; Hermite-Gauss modes by their Cartesian orders `(m, n)`.
//! Both families are grouped by mode order: `2p + |ell|` and `m + n`
//! respectively. Conversion between the two bases never mixes orders.
//!
//! The `Ord` impls below are the canonical orderings: ascending mode order,
//! then `ell` descending (LG) or `m` descending (HG). Conversion matrices,
//! CSV layouts and serialized states all follow them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Mode order `N`: `2p + |ell|` for LG modes, `m + n` for HG modes.
pub type ModeOrder = u32;

/// Which family of spatial modes a label or a state refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "LG", alias = "lg")]
    Lg,
    #[serde(rename = "HG", alias = "hg")]
    Hg,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Lg => f.write_str("LG"),
            Basis::Hg => f.write_str("HG"),
        }
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_uppercase().as_str() {
            "LG" => Ok(Basis::Lg),
            "HG" => Ok(Basis::Hg),
            _ => Err(Error::Parse(format!(
                "unknown basis {s:?} (expected LG or HG)"
            ))),
        }
    }
}

/// Laguerre-Gauss mode label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LGIndex {
    /// Radial index.
    pub p: u32,
    /// Azimuthal index; the photon carries `ell` units of OAM.
    pub ell: i32,
}

impl LGIndex {
    pub const fn new(p: u32, ell: i32) -> Self {
        Self { p, ell }
    }

    pub fn order(&self) -> ModeOrder {
        2 * self.p + self.ell.unsigned_abs()
    }

    /// The mode with opposite OAM and the same radial index.
    pub fn flipped(&self) -> Self {
        Self::new(self.p, -self.ell)
    }
}

impl Ord for LGIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| other.ell.cmp(&self.ell))
            .then_with(|| self.p.cmp(&other.p))
    }
}

impl PartialOrd for LGIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Hermite-Gauss mode label, `H_m(x) H_n(y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HGIndex {
    pub m: u32,
    pub n: u32,
}

impl HGIndex {
    pub const fn new(m: u32, n: u32) -> Self {
        Self { m, n }
    }

    pub fn order(&self) -> ModeOrder {
        self.m + self.n
    }
}

impl Ord for HGIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| other.m.cmp(&self.m))
    }
}

impl PartialOrd for HGIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A single-photon spatial mode in either basis.
///
/// Ordering puts all LG modes before all HG modes; within a basis it is the
/// canonical ordering of that basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpatialMode {
    Lg(LGIndex),
    Hg(HGIndex),
}

impl SpatialMode {
    pub fn basis(&self) -> Basis {
        match self {
            SpatialMode::Lg(_) => Basis::Lg,
            SpatialMode::Hg(_) => Basis::Hg,
        }
    }

    pub fn order(&self) -> ModeOrder {
        match self {
            SpatialMode::Lg(lg) => lg.order(),
            SpatialMode::Hg(hg) => hg.order(),
        }
    }

    /// Position of this mode within the canonical list of its order.
    pub fn position_in_order(&self) -> usize {
        match self {
            // ell runs N, N-2, ..., -N
            SpatialMode::Lg(lg) => ((lg.order() as i64 - lg.ell as i64) / 2) as usize,
            SpatialMode::Hg(hg) => hg.n as usize,
        }
    }
}

impl From<LGIndex> for SpatialMode {
    fn from(value: LGIndex) -> Self {
        SpatialMode::Lg(value)
    }
}

impl From<HGIndex> for SpatialMode {
    fn from(value: HGIndex) -> Self {
        SpatialMode::Hg(value)
    }
}

/// The `N + 1` LG modes of order `N`, `ell` descending from `N` to `-N`.
pub fn lg_modes_of_order(order: ModeOrder) -> Vec<LGIndex> {
    let n = order as i32;
    (0..=n)
        .map(|k| {
            let ell = n - 2 * k;
            LGIndex::new((order - ell.unsigned_abs()) / 2, ell)
        })
        .collect()
}

/// The `N + 1` HG modes of order `N`, `m` descending.
pub fn hg_modes_of_order(order: ModeOrder) -> Vec<HGIndex> {
    (0..=order)
        .rev()
        .map(|m| HGIndex::new(m, order - m))
        .collect()
}

/// Canonical mode list of one order in the requested basis.
pub fn modes_of_order(basis: Basis, order: ModeOrder) -> Vec<SpatialMode> {
    match basis {
        Basis::Lg => lg_modes_of_order(order)
            .into_iter()
            .map(Into::into)
            .collect(),
        Basis::Hg => hg_modes_of_order(order)
            .into_iter()
            .map(Into::into)
            .collect(),
    }
}

/// Modes whose individual indices are all bounded by `max_index`, in canonical
/// order. For HG this is `m, n <= max_index`; for LG it is `p, |ell| <= max_index`.
pub fn modes_within_index(basis: Basis, max_index: u32) -> Vec<SpatialMode> {
    let max_order = match basis {
        Basis::Lg => 3 * max_index,
        Basis::Hg => 2 * max_index,
    };
    (0..=max_order)
        .flat_map(|order| modes_of_order(basis, order))
        .filter(|mode| match mode {
            SpatialMode::Lg(lg) => lg.p <= max_index && lg.ell.unsigned_abs() <= max_index,
            SpatialMode::Hg(hg) => hg.m <= max_index && hg.n <= max_index,
        })
        .collect()
}

impl fmt::Display for LGIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LG({},{})", self.p, self.ell)
    }
}

impl fmt::Display for HGIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HG({},{})", self.m, self.n)
    }
}

impl fmt::Display for SpatialMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpatialMode::Lg(lg) => lg.fmt(f),
            SpatialMode::Hg(hg) => hg.fmt(f),
        }
    }
}

/// Splits `"XX(a,b)"` into the prefix and the two raw arguments.
fn split_label(s: &str) -> Result<(&str, &str, &str), Error> {
    let bad = || Error::Parse(format!("malformed mode label {s:?}"));
    let s = s.trim();
    let open = s.find('(').ok_or_else(bad)?;
    let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let (a, b) = inner.split_once(',').ok_or_else(bad)?;
    Ok((s[..open].trim(), a.trim(), b.trim()))
}

impl FromStr for LGIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.parse::<SpatialMode>()? {
            SpatialMode::Lg(lg) => Ok(lg),
            SpatialMode::Hg(_) => Err(Error::Parse(format!("expected an LG mode, got {s:?}"))),
        }
    }
}

impl FromStr for HGIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.parse::<SpatialMode>()? {
            SpatialMode::Hg(hg) => Ok(hg),
            SpatialMode::Lg(_) => Err(Error::Parse(format!("expected an HG mode, got {s:?}"))),
        }
    }
}

impl FromStr for SpatialMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (prefix, a, b) = split_label(s)?;
        let int_err = |field: &str| Error::Parse(format!("bad {field} in mode label {s:?}"));
        match prefix.to_ascii_uppercase().as_str() {
            "LG" => {
                let p = a.parse::<u32>().map_err(|_| int_err("p"))?;
                let ell = b.parse::<i32>().map_err(|_| int_err("ell"))?;
                Ok(SpatialMode::Lg(LGIndex::new(p, ell)))
            }
            "HG" => {
                let m = a.parse::<u32>().map_err(|_| int_err("m"))?;
                let n = b.parse::<u32>().map_err(|_| int_err("n"))?;
                Ok(SpatialMode::Hg(HGIndex::new(m, n)))
            }
            _ => Err(Error::Parse(format!("unknown mode family in {s:?}"))),
        }
    }
}

macro_rules! serde_via_text {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                let text = String::deserialize(deserializer)?;
                text.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_text!(LGIndex);
serde_via_text!(HGIndex);
serde_via_text!(SpatialMode);
