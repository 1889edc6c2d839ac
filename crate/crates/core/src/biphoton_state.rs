//! Pure two-photon states over ordered spatial-mode pairs.
//!
//! A [`TwoPhotonState`] stores complex amplitudes keyed by `(mode on path A,
//! mode on path B)`, all in one basis. Constructors cover Bell pairs and
//! SPDC spectra; the path-exchange operator swaps the two positions, and
//! local unitaries act order-block by order-block on each photon.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::basis_conversion::{conversion_matrix, unitarity_deviation};
use crate::error::{Error, Result};
use crate::mode_index::{modes_of_order, Basis, LGIndex, ModeOrder, SpatialMode};
use crate::poly_oracle::BellSign;

/// Arithmetic tolerance for norms and unitarity.
pub const NORM_TOLERANCE: f64 = 1e-12;
/// Distance from an exchange eigenspace still counted as inside it.
pub const CLASSIFICATION_TOLERANCE: f64 = 1e-9;
/// Amplitudes smaller than this are not stored.
pub const PRUNE_THRESHOLD: f64 = 1e-14;

/// `(mode on path A, mode on path B)`.
pub type ModePair = (SpatialMode, SpatialMode);

/// Whether a reader should insist on unit norm or rescale the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    Require,
    Renormalize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwoPhotonState {
    basis: Basis,
    amplitudes: BTreeMap<ModePair, Complex64>,
}

impl TwoPhotonState {
    /// Builds a state from raw amplitudes. Repeated pairs are summed.
    pub fn from_amplitudes(
        basis: Basis,
        terms: impl IntoIterator<Item = (ModePair, Complex64)>,
        normalization: Normalization,
    ) -> Result<Self> {
        let mut amplitudes: BTreeMap<ModePair, Complex64> = BTreeMap::new();
        for ((a, b), c) in terms {
            for mode in [a, b] {
                if mode.basis() != basis {
                    return Err(Error::BasisMismatch {
                        expected: basis,
                        found: mode.basis(),
                    });
                }
            }
            *amplitudes.entry((a, b)).or_default() += c;
        }
        let state = Self::from_raw(basis, amplitudes);
        let norm_sqr = state.norm_sqr();
        match normalization {
            Normalization::Require if (norm_sqr - 1.0).abs() > NORM_TOLERANCE => {
                Err(Error::NotNormalized { norm_sqr })
            }
            Normalization::Require => Ok(state),
            Normalization::Renormalize => state.normalized(),
        }
    }

    /// `|a>_A |b>_B`.
    pub fn product(a: SpatialMode, b: SpatialMode) -> Result<Self> {
        Self::from_amplitudes(
            a.basis(),
            [((a, b), Complex64::new(1.0, 0.0))],
            Normalization::Require,
        )
    }

    pub(crate) fn from_raw(basis: Basis, mut amplitudes: BTreeMap<ModePair, Complex64>) -> Self {
        amplitudes.retain(|_, c| c.norm() >= PRUNE_THRESHOLD);
        Self { basis, amplitudes }
    }

    fn normalized(self) -> Result<Self> {
        let norm = self.norm_sqr().sqrt();
        if norm < PRUNE_THRESHOLD {
            return Err(Error::InvalidArgument(
                "cannot normalize a zero state".into(),
            ));
        }
        let amplitudes = self
            .amplitudes
            .into_iter()
            .map(|(k, c)| (k, c / norm))
            .collect();
        Ok(Self::from_raw(self.basis, amplitudes))
    }

    /// Normalized linear combination `Σ w_k |s_k>`; all states must share a basis.
    pub fn superpose(terms: &[(Complex64, &TwoPhotonState)]) -> Result<Self> {
        let basis = terms
            .first()
            .map(|(_, s)| s.basis)
            .ok_or_else(|| Error::InvalidArgument("empty superposition".into()))?;
        let mut acc: BTreeMap<ModePair, Complex64> = BTreeMap::new();
        for (weight, state) in terms {
            if state.basis != basis {
                return Err(Error::BasisMismatch {
                    expected: basis,
                    found: state.basis,
                });
            }
            for (pair, c) in &state.amplitudes {
                *acc.entry(*pair).or_default() += weight * c;
            }
        }
        Self::from_raw(basis, acc).normalized()
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn amplitudes(&self) -> &BTreeMap<ModePair, Complex64> {
        &self.amplitudes
    }

    /// Amplitude of `|a>_A |b>_B`, zero when absent.
    pub fn amplitude(&self, a: SpatialMode, b: SpatialMode) -> Complex64 {
        self.amplitudes.get(&(a, b)).copied().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.values().map(|c| c.norm_sqr()).sum()
    }

    /// Every mode that appears on either path, in canonical order.
    pub fn modes(&self) -> BTreeSet<SpatialMode> {
        self.amplitudes.keys().flat_map(|(a, b)| [*a, *b]).collect()
    }

    /// Highest mode order present on either path.
    pub fn max_order(&self) -> ModeOrder {
        self.modes()
            .iter()
            .map(SpatialMode::order)
            .max()
            .unwrap_or(0)
    }

    /// Multiplies every amplitude by `factor` without renormalizing.
    pub fn scaled(&self, factor: Complex64) -> Self {
        Self::from_raw(
            self.basis,
            self.amplitudes
                .iter()
                .map(|(k, c)| (*k, c * factor))
                .collect(),
        )
    }

    /// Largest amplitude-wise difference to `other`; infinite across bases.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.basis != other.basis {
            return f64::INFINITY;
        }
        let keys: BTreeSet<_> = self
            .amplitudes
            .keys()
            .chain(other.amplitudes.keys())
            .collect();
        keys.into_iter()
            .map(|k| {
                (self.amplitudes.get(k).copied().unwrap_or_default()
                    - other.amplitudes.get(k).copied().unwrap_or_default())
                .norm()
            })
            .fold(0.0, f64::max)
    }

    /// Random normalized state on all mode pairs with orders `<= max_order`.
    ///
    /// `symmetry` projects the draw onto the symmetric (`Plus`) or
    /// antisymmetric (`Minus`) subspace before normalizing. The antisymmetric
    /// subspace is empty for `max_order == 0`, which is an error.
    pub fn random<R: Rng + ?Sized>(
        basis: Basis,
        max_order: ModeOrder,
        symmetry: Option<BellSign>,
        rng: &mut R,
    ) -> Result<Self> {
        let modes: Vec<SpatialMode> = (0..=max_order)
            .flat_map(|order| modes_of_order(basis, order))
            .collect();
        if symmetry == Some(BellSign::Minus) && modes.len() < 2 {
            return Err(Error::InvalidArgument(
                "no antisymmetric two-photon state exists on a single mode".into(),
            ));
        }
        let mut amps: BTreeMap<ModePair, Complex64> = BTreeMap::new();
        for a in &modes {
            for b in &modes {
                amps.insert((*a, *b), random_complex(rng));
            }
        }
        if let Some(sign) = symmetry {
            let swapped: BTreeMap<ModePair, Complex64> =
                amps.iter().map(|((a, b), c)| ((*b, *a), *c)).collect();
            for (k, c) in amps.iter_mut() {
                *c += swapped[k] * sign.factor() as f64;
            }
        }
        Self::from_raw(basis, amps).normalized()
    }

    pub fn to_document(&self) -> StateDocument {
        StateDocument {
            basis: self.basis,
            terms: self
                .amplitudes
                .iter()
                .map(|((a, b), c)| StateTerm {
                    mode_a: *a,
                    mode_b: *b,
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        }
    }

    pub fn from_document(doc: &StateDocument, normalization: Normalization) -> Result<Self> {
        Self::from_amplitudes(
            doc.basis,
            doc.terms
                .iter()
                .map(|t| ((t.mode_a, t.mode_b), Complex64::new(t.re, t.im))),
            normalization,
        )
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_document())?)
    }

    pub fn from_json(text: &str, normalization: Normalization) -> Result<Self> {
        let doc: StateDocument = serde_json::from_str(text)?;
        Self::from_document(&doc, normalization)
    }

    pub fn read_file(path: impl AsRef<Path>, normalization: Normalization) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text, normalization)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json()? + "\n").map_err(|e| Error::io(path, e))
    }
}

impl fmt::Display for TwoPhotonState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, ((a, b), c)) in self.amplitudes.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({:.6}{:+.6}i)|{a}>|{b}>", c.re, c.im)?;
        }
        Ok(())
    }
}

fn random_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Serialized form: `{basis, terms: [{modeA, modeB, re, im}]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateDocument {
    pub basis: Basis,
    pub terms: Vec<StateTerm>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateTerm {
    #[serde(rename = "modeA")]
    pub mode_a: SpatialMode,
    #[serde(rename = "modeB")]
    pub mode_b: SpatialMode,
    pub re: f64,
    pub im: f64,
}

/// `(|L_p^l>_A |L_q^-l>_B ± |L_p^-l>_A |L_q^l>_B) / √2`.
pub fn bell_state(p: u32, q: u32, ell: i32, sign: BellSign) -> Result<TwoPhotonState> {
    if ell < 1 {
        return Err(Error::DegenerateBellPair(ell));
    }
    let amp = std::f64::consts::FRAC_1_SQRT_2;
    let first = (
        SpatialMode::Lg(LGIndex::new(p, ell)),
        SpatialMode::Lg(LGIndex::new(q, -ell)),
    );
    let second = (
        SpatialMode::Lg(LGIndex::new(p, -ell)),
        SpatialMode::Lg(LGIndex::new(q, ell)),
    );
    TwoPhotonState::from_amplitudes(
        Basis::Lg,
        [
            (first, Complex64::new(amp, 0.0)),
            (second, Complex64::new(amp * sign.factor() as f64, 0.0)),
        ],
        Normalization::Require,
    )
}

/// `Ψ+` Bell pair.
pub fn bell_plus(p: u32, q: u32, ell: i32) -> Result<TwoPhotonState> {
    bell_state(p, q, ell, BellSign::Plus)
}

/// `Ψ-` Bell pair.
pub fn bell_minus(p: u32, q: u32, ell: i32) -> Result<TwoPhotonState> {
    bell_state(p, q, ell, BellSign::Minus)
}

/// One `α_{p,q;l}` coefficient of an SPDC spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub p: u32,
    pub q: u32,
    pub ell: u32,
    #[serde(default)]
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

impl SpectrumEntry {
    pub fn new(p: u32, q: u32, ell: u32, alpha: Complex64) -> Self {
        Self {
            p,
            q,
            ell,
            re: alpha.re,
            im: alpha.im,
        }
    }

    pub fn alpha(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// The expansion coefficients of an SPDC state in `Ψ+` pairs.
///
/// Entries must be exchange-symmetric: any `(p, q, l)` with `p != q` needs a
/// `(q, p, l)` partner of equal weight.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<SpectrumEntry>", into = "Vec<SpectrumEntry>")]
pub struct SpdcSpectrum {
    entries: Vec<SpectrumEntry>,
}

impl SpdcSpectrum {
    pub fn new(entries: Vec<SpectrumEntry>) -> Result<Self> {
        let mut merged: BTreeMap<(u32, u32, u32), Complex64> = BTreeMap::new();
        for e in &entries {
            *merged.entry((e.p, e.q, e.ell)).or_default() += e.alpha();
        }
        merged.retain(|_, a| a.norm() >= PRUNE_THRESHOLD);
        if merged.is_empty() {
            return Err(Error::EmptySpectrum);
        }
        for (&(p, q, ell), alpha) in &merged {
            if p == q {
                continue;
            }
            let partner = merged.get(&(q, p, ell)).copied().unwrap_or_default();
            if (partner - alpha).norm() > NORM_TOLERANCE {
                return Err(Error::AsymmetricSpectrum { p, q, ell });
            }
        }
        Ok(Self {
            entries: merged
                .into_iter()
                .map(|((p, q, ell), alpha)| SpectrumEntry::new(p, q, ell, alpha))
                .collect(),
        })
    }

    /// Stand-in OAM spectrum: `p = q = 0`, weights 0.45, 0.30, 0.15, 0.10 for
    /// `l = 1..4`. Not derived from any crystal model.
    pub fn demo() -> Self {
        let weights = [0.45, 0.30, 0.15, 0.10];
        Self::new(
            weights
                .iter()
                .zip(1..)
                .map(|(w, ell)| SpectrumEntry::new(0, 0, ell, Complex64::new(*w, 0.0)))
                .collect(),
        )
        .expect("demo spectrum is valid")
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }
}

impl TryFrom<Vec<SpectrumEntry>> for SpdcSpectrum {
    type Error = Error;

    fn try_from(value: Vec<SpectrumEntry>) -> Result<Self> {
        Self::new(value)
    }
}

impl From<SpdcSpectrum> for Vec<SpectrumEntry> {
    fn from(value: SpdcSpectrum) -> Self {
        value.entries
    }
}

/// Normalized `Σ α_{p,q;l} |Ψ+_{p,q;l}>`. An `l = 0` entry contributes the
/// product `|L_p^0>_A |L_q^0>_B` with unit weight.
pub fn spdc_state(spectrum: &SpdcSpectrum) -> Result<TwoPhotonState> {
    let mut acc: BTreeMap<ModePair, Complex64> = BTreeMap::new();
    for entry in spectrum.entries() {
        let term = if entry.ell == 0 {
            TwoPhotonState::product(
                LGIndex::new(entry.p, 0).into(),
                LGIndex::new(entry.q, 0).into(),
            )?
        } else {
            bell_plus(entry.p, entry.q, entry.ell as i32)?
        };
        for (pair, c) in term.amplitudes {
            *acc.entry(pair).or_default() += entry.alpha() * c;
        }
    }
    TwoPhotonState::from_raw(Basis::Lg, acc)
        .normalized()
        .map_err(|_| Error::EmptySpectrum)
}

/// Path exchange: the amplitude of `(a, b)` becomes that of `(b, a)`.
pub fn exchange(state: &TwoPhotonState) -> TwoPhotonState {
    TwoPhotonState::from_raw(
        state.basis,
        state
            .amplitudes
            .iter()
            .map(|((a, b), c)| ((*b, *a), *c))
            .collect(),
    )
}

/// `‖s - sign·X s‖`.
fn exchange_distance(state: &TwoPhotonState, sign: f64) -> f64 {
    let support: BTreeSet<ModePair> = state
        .amplitudes
        .keys()
        .flat_map(|&(a, b)| [(a, b), (b, a)])
        .collect();
    support
        .into_iter()
        .map(|(a, b)| (state.amplitude(a, b) - state.amplitude(b, a) * sign).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
    Mixed,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symmetry::Symmetric => "symmetric",
            Symmetry::Antisymmetric => "antisymmetric",
            Symmetry::Mixed => "mixed",
        })
    }
}

/// Exchange-symmetry class with the distance to the nearest eigenspace of `X`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryClass {
    pub value: Symmetry,
    pub deviation: f64,
}

/// Classifies `state` as a `+1` or `-1` eigenstate of path exchange, or neither.
pub fn symmetry_classify(state: &TwoPhotonState) -> SymmetryClass {
    let off_symmetric = exchange_distance(state, 1.0);
    let off_antisymmetric = exchange_distance(state, -1.0);
    let value = if off_symmetric <= CLASSIFICATION_TOLERANCE {
        Symmetry::Symmetric
    } else if off_antisymmetric <= CLASSIFICATION_TOLERANCE {
        Symmetry::Antisymmetric
    } else {
        Symmetry::Mixed
    };
    SymmetryClass {
        value,
        deviation: off_symmetric.min(off_antisymmetric) / 2.0,
    }
}

/// Single-photon operator given as one square block per mode order.
///
/// `acts_on` pins the operator to a basis (e.g. the Dove pair is diagonal in
/// LG); `None` means the blocks are applied to whatever basis the state uses.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalUnitary {
    acts_on: Option<Basis>,
    blocks: BTreeMap<ModeOrder, DMatrix<Complex64>>,
}

impl LocalUnitary {
    pub fn new(
        acts_on: Option<Basis>,
        blocks: BTreeMap<ModeOrder, DMatrix<Complex64>>,
    ) -> Result<Self> {
        for (&order, block) in &blocks {
            let dim = order as usize + 1;
            if block.shape() != (dim, dim) {
                return Err(Error::InvalidArgument(format!(
                    "block for order {order} must be {dim}x{dim}, got {}x{}",
                    block.nrows(),
                    block.ncols()
                )));
            }
            let deviation = unitarity_deviation(block);
            if deviation > NORM_TOLERANCE {
                return Err(Error::NotUnitary { order, deviation });
            }
        }
        Ok(Self { acts_on, blocks })
    }

    /// `𝓘` on every order up to `max_order`.
    pub fn identity(max_order: ModeOrder) -> Self {
        let blocks = (0..=max_order)
            .map(|n| (n, DMatrix::identity(n as usize + 1, n as usize + 1)))
            .collect();
        Self {
            acts_on: None,
            blocks,
        }
    }

    /// Diagonal operator `|m> → phase(m) |m>` on the canonical modes of `basis`.
    pub fn diagonal(
        basis: Basis,
        max_order: ModeOrder,
        phase: impl Fn(SpatialMode) -> Complex64,
    ) -> Result<Self> {
        let blocks = (0..=max_order)
            .map(|n| {
                let diag: Vec<Complex64> =
                    modes_of_order(basis, n).into_iter().map(&phase).collect();
                (
                    n,
                    DMatrix::from_diagonal(&nalgebra::DVector::from_vec(diag)),
                )
            })
            .collect();
        Self::new(Some(basis), blocks)
    }

    /// Haar-random unitary block for every order up to `max_order`.
    pub fn random<R: Rng + ?Sized>(max_order: ModeOrder, rng: &mut R) -> Self {
        let blocks = (0..=max_order)
            .map(|n| (n, random_unitary(n as usize + 1, rng)))
            .collect();
        Self {
            acts_on: None,
            blocks,
        }
    }

    pub fn acts_on(&self) -> Option<Basis> {
        self.acts_on
    }

    pub fn block(&self, order: ModeOrder) -> Option<&DMatrix<Complex64>> {
        self.blocks.get(&order)
    }

    pub fn blocks(&self) -> &BTreeMap<ModeOrder, DMatrix<Complex64>> {
        &self.blocks
    }
}

/// Haar-distributed `dim × dim` unitary: QR of a complex Ginibre matrix with
/// the phases of `R`'s diagonal moved into `Q`.
pub fn random_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DMatrix<Complex64> {
    let ginibre = DMatrix::from_fn(dim, dim, |_, _| random_complex(rng));
    let qr = ginibre.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 {
            d / d.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Applies per-order blocks to both photons. `out_basis` labels the output
/// modes; block columns index the input basis, rows the output basis.
fn transform<'a>(
    state: &TwoPhotonState,
    out_basis: Basis,
    block_a: impl Fn(ModeOrder) -> Option<&'a DMatrix<Complex64>>,
    block_b: impl Fn(ModeOrder) -> Option<&'a DMatrix<Complex64>>,
) -> Result<TwoPhotonState> {
    let mut mode_lists: BTreeMap<ModeOrder, Vec<SpatialMode>> = BTreeMap::new();
    for mode in state.modes() {
        mode_lists
            .entry(mode.order())
            .or_insert_with(|| modes_of_order(out_basis, mode.order()));
    }

    let mut out: BTreeMap<ModePair, Complex64> = BTreeMap::new();
    for ((a, b), c) in &state.amplitudes {
        let ua = block_a(a.order()).ok_or(Error::MissingBlock(a.order()))?;
        let ub = block_b(b.order()).ok_or(Error::MissingBlock(b.order()))?;
        let (ia, ib) = (a.position_in_order(), b.position_in_order());
        let outs_a = &mode_lists[&a.order()];
        let outs_b = &mode_lists[&b.order()];
        for (ja, ma) in outs_a.iter().enumerate() {
            let ca = ua[(ja, ia)] * c;
            if ca.norm() == 0.0 {
                continue;
            }
            for (jb, mb) in outs_b.iter().enumerate() {
                let w = ub[(jb, ib)];
                if w.norm() == 0.0 {
                    continue;
                }
                *out.entry((*ma, *mb)).or_default() += ca * w;
            }
        }
    }
    Ok(TwoPhotonState::from_raw(out_basis, out))
}

fn check_basis(op: &LocalUnitary, state: &TwoPhotonState) -> Result<()> {
    match op.acts_on {
        Some(basis) if basis != state.basis => Err(Error::BasisMismatch {
            expected: basis,
            found: state.basis,
        }),
        _ => Ok(()),
    }
}

/// `(U_A ⊗ U_B) |ψ>`.
pub fn apply_local(
    state: &TwoPhotonState,
    ua: &LocalUnitary,
    ub: &LocalUnitary,
) -> Result<TwoPhotonState> {
    check_basis(ua, state)?;
    check_basis(ub, state)?;
    transform(state, state.basis, |n| ua.block(n), |n| ub.block(n))
}

/// Converts both photons with the same per-order conversion unitary.
pub fn to_basis(state: &TwoPhotonState, target: Basis) -> TwoPhotonState {
    if state.basis == target {
        return state.clone();
    }
    let orders: BTreeSet<ModeOrder> = state.modes().iter().map(SpatialMode::order).collect();
    let blocks: BTreeMap<ModeOrder, DMatrix<Complex64>> = orders
        .into_iter()
        .map(|n| {
            let u = conversion_matrix(n).entries().clone();
            let block = match target {
                Basis::Hg => u,
                Basis::Lg => u.adjoint(),
            };
            (n, block)
        })
        .collect();
    transform(state, target, |n| blocks.get(&n), |n| blocks.get(&n))
        .expect("blocks exist for every occupied order")
}

pub fn to_hg(state: &TwoPhotonState) -> TwoPhotonState {
    to_basis(state, Basis::Hg)
}

pub fn to_lg(state: &TwoPhotonState) -> TwoPhotonState {
    to_basis(state, Basis::Lg)
}

/// `<a|b>`.
pub fn overlap(a: &TwoPhotonState, b: &TwoPhotonState) -> Result<Complex64> {
    if a.basis != b.basis {
        return Err(Error::BasisMismatch {
            expected: a.basis,
            found: b.basis,
        });
    }
    Ok(a.amplitudes
        .iter()
        .map(|(k, ca)| ca.conj() * b.amplitudes.get(k).copied().unwrap_or_default())
        .sum())
}
