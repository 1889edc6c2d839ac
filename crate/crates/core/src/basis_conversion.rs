//! Normalized LG ↔ HG change of basis, one unitary block per mode order.
//!
//! Column `c` of the order-`N` matrix is the HG expansion of the `c`-th LG mode
//! of that order (canonical orderings from [`crate::mode_index`]). The entries
//! come from the exact Hermite-product coefficients of [`crate::poly_oracle`],
//! weighted by the Gaussian norm of each `H_a(x) H_b(y)` product, normalized,
//! and phase-fixed so that the `HG(N,0)` entry is real and non-negative.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::mode_index::{hg_modes_of_order, lg_modes_of_order, HGIndex, LGIndex, ModeOrder};
use crate::poly_oracle::{self, GaussianRational};

/// Tolerance used throughout the floating-point conversion code.
pub const CONVERSION_TOLERANCE: f64 = 1e-12;

/// Entries below this magnitude are dropped from sparse coefficient maps.
const PRUNE: f64 = 1e-14;

pub fn gaussian_rational_to_complex(c: &GaussianRational) -> Complex64 {
    Complex64::new(
        c.re.to_f64().unwrap_or(f64::NAN),
        c.im.to_f64().unwrap_or(f64::NAN),
    )
}

/// `sqrt(2^(a+b) a! b!)`: the norm of `H_a(x) H_b(y)` under the weight
/// `exp(-x²-y²)`, up to the common factor `sqrt(π)`.
pub fn hermite_product_norm(a: u32, b: u32) -> f64 {
    let fact = |n: u32| (1..=n).map(f64::from).product::<f64>();
    (2f64.powi((a + b) as i32) * fact(a) * fact(b)).sqrt()
}

/// Per-order LG → HG unitary.
#[derive(Debug, Clone, PartialEq)]
pub struct ConversionMatrix {
    order: ModeOrder,
    entries: DMatrix<Complex64>,
}

impl ConversionMatrix {
    pub fn order(&self) -> ModeOrder {
        self.order
    }

    /// Rows follow [`hg_modes_of_order`], columns [`lg_modes_of_order`].
    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn rows(&self) -> Vec<HGIndex> {
        hg_modes_of_order(self.order)
    }

    pub fn cols(&self) -> Vec<LGIndex> {
        lg_modes_of_order(self.order)
    }

    /// Amplitude of `hg` in the expansion of `lg`; zero if the orders differ.
    pub fn entry(&self, hg: HGIndex, lg: LGIndex) -> Complex64 {
        if hg.order() != self.order || lg.order() != self.order {
            return Complex64::new(0.0, 0.0);
        }
        let row = hg.n as usize;
        let col = ((self.order as i64 - lg.ell as i64) / 2) as usize;
        self.entries[(row, col)]
    }

    /// `max |(U†U - I)_ij|`.
    pub fn unitarity_deviation(&self) -> f64 {
        unitarity_deviation(&self.entries)
    }
}

/// Max absolute entry of `U†U - I`.
pub fn unitarity_deviation(u: &DMatrix<Complex64>) -> f64 {
    let product = u.adjoint() * u;
    let dim = product.nrows();
    let identity = DMatrix::<Complex64>::identity(dim, dim);
    (product - identity)
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

/// Normalized HG expansion of an LG mode over the HG modes of the same order.
pub fn lg_to_hg_coeffs(mode: LGIndex) -> BTreeMap<HGIndex, Complex64> {
    let raw = poly_oracle::raw_lg_expansion(mode);
    let mut weighted: BTreeMap<HGIndex, Complex64> = raw
        .iter()
        .map(|(hg, c)| {
            (
                *hg,
                gaussian_rational_to_complex(c) * hermite_product_norm(hg.m, hg.n),
            )
        })
        .collect();

    let norm = weighted.values().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let reference = weighted
        .get(&HGIndex::new(mode.order(), 0))
        .copied()
        .unwrap_or(Complex64::new(1.0, 0.0));
    // rotates the HG(N,0) entry onto the positive real axis
    let phase = if reference.norm() > 0.0 {
        reference.conj() / reference.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    for amp in weighted.values_mut() {
        *amp = *amp * phase / norm;
    }
    weighted.retain(|_, z| z.norm() >= PRUNE);
    weighted
}

fn build_matrix(order: ModeOrder) -> ConversionMatrix {
    let dim = order as usize + 1;
    let mut entries = DMatrix::<Complex64>::zeros(dim, dim);
    for (col, lg) in lg_modes_of_order(order).into_iter().enumerate() {
        for (hg, amp) in lg_to_hg_coeffs(lg) {
            entries[(hg.n as usize, col)] = amp;
        }
    }
    ConversionMatrix { order, entries }
}

type Cache = RwLock<HashMap<ModeOrder, Arc<ConversionMatrix>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The order-`N` conversion unitary. Built once per order and shared.
pub fn conversion_matrix(order: ModeOrder) -> Arc<ConversionMatrix> {
    if let Some(hit) = cache().read().expect("cache poisoned").get(&order) {
        return Arc::clone(hit);
    }
    // Built outside the lock; a racing duplicate build yields an identical matrix.
    let built = Arc::new(build_matrix(order));
    let mut guard = cache().write().expect("cache poisoned");
    Arc::clone(guard.entry(order).or_insert(built))
}

/// Row of the conjugate-transpose: the LG expansion of an HG mode.
pub fn hg_to_lg_coeffs(mode: HGIndex) -> BTreeMap<LGIndex, Complex64> {
    let matrix = conversion_matrix(mode.order());
    let row = mode.n as usize;
    matrix
        .cols()
        .into_iter()
        .enumerate()
        .map(|(col, lg)| (lg, matrix.entries[(row, col)].conj()))
        .filter(|(_, z)| z.norm() >= PRUNE)
        .collect()
}
