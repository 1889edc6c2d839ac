//! Hong-Ou-Mandel interference of entangled photon pairs in Laguerre-Gauss
//! and Hermite-Gauss spatial-mode bases.
//!
//! The crate is layered bottom-up:
//!
//! - [`mode_index`]: mode labels and canonical orderings.
//! - [`poly_oracle`]: exact Hermite/Laguerre algebra and the LG/HG identity.
//! - [`basis_conversion`]: the normalized per-order LG → HG unitaries.
//! - [`biphoton_state`]: two-photon states, Bell/SPDC constructors, exchange symmetry.
//! - [`interferometer`]: Dove-prism pair, path delay, 50:50 beamsplitter coincidences.
//! - [`experiment`]: coincidence grids, dip scans, CSV/PGM output.

pub mod basis_conversion;
pub mod biphoton_state;
pub mod error;
pub mod experiment;
pub mod interferometer;
pub mod mode_index;
pub mod poly_oracle;

pub use error::{Error, Result};
pub use mode_index::{Basis, HGIndex, LGIndex, ModeOrder, SpatialMode};
pub use poly_oracle::BellSign;
