//! Exact symbolic engine behind the LG → HG decomposition.
//!
//! Everything here is computed over the Gaussian rationals with
//! arbitrary-precision integers; there is no floating point in this module.
//! It generates Hermite and associated Laguerre polynomials, builds both sides
//! of the LG/HG polynomial identity
//!
//! ```text
//! (-1)^(p+|l|) 2^(2p+|l|) p! (x ± iy)^|l| L_p^|l|(x²+y²)
//!     = Σ_m Σ_n C(p,m) C(|l|,n) (∓i)^(|l|+n) H_(2m+n)(x) H_(2p+|l|-2m-n)(y)
//! ```
//!
//! and expresses arbitrary bivariate polynomials in the Hermite-product basis
//! `H_a(x) H_b(y)`. The floating-point `basis_conversion` module is derived
//! from, and checked against, these exact results.

mod gaussian_rational;
mod polynomial;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use gaussian_rational::GaussianRational;
pub use polynomial::{BiPoly, Monomial, UniPoly};

use crate::mode_index::{HGIndex, LGIndex};

/// Relative sign between the two terms of a Bell pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum BellSign {
    /// `Ψ+`, symmetric under path exchange when the radial indices agree.
    Plus,
    /// `Ψ-`
    Minus,
}

impl BellSign {
    pub fn factor(self) -> i64 {
        match self {
            BellSign::Plus => 1,
            BellSign::Minus => -1,
        }
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn big_binomial(n: u32, k: u32) -> BigInt {
    binomial(BigInt::from(n), BigInt::from(k))
}

/// Physicists' Hermite polynomial `H_n` from the three-term recurrence
/// `H_(k+1) = 2x H_k - 2k H_(k-1)`.
pub fn hermite(n: u32) -> UniPoly<BigInt> {
    let mut prev = vec![BigInt::one()];
    if n == 0 {
        return UniPoly::from_coeffs(prev);
    }
    let mut cur = vec![BigInt::zero(), BigInt::from(2)];
    for k in 1..n {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (j, c) in cur.iter().enumerate() {
            next[j + 1] += c * 2;
        }
        for (j, c) in prev.iter().enumerate() {
            next[j] -= c * (2 * k);
        }
        prev = std::mem::replace(&mut cur, next);
    }
    UniPoly::from_coeffs(cur)
}

/// Associated Laguerre polynomial `L_p^a(t) = Σ_k (-1)^k C(p+a, p-k) t^k / k!`.
pub fn laguerre(p: u32, a: u32) -> UniPoly<BigRational> {
    let coeffs = (0..=p)
        .map(|k| {
            let sign = if k % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            BigRational::new(sign * big_binomial(p + a, p - k), factorial(k))
        })
        .collect();
    UniPoly::from_coeffs(coeffs)
}

/// `(-1)^(p+|l|) 2^(2p+|l|) p! (x ± iy)^|l| L_p^|l|(x²+y²)`, `+` for `l >= 0`.
pub fn lhs_eq1(p: u32, ell: i32) -> BiPoly {
    let abs_ell = ell.unsigned_abs();
    let sign = if (p + abs_ell) % 2 == 0 { 1 } else { -1 };
    let prefactor = BigInt::from(sign) * (BigInt::one() << (2 * p + abs_ell)) * factorial(p);

    let iy = if ell >= 0 {
        BiPoly::y().scale(&GaussianRational::i())
    } else {
        BiPoly::y().scale(&-GaussianRational::i())
    };
    let vortex = (&BiPoly::x() + &iy).pow(abs_ell);
    let radial = BiPoly::radial(&laguerre(p, abs_ell));
    (&vortex * &radial).scale(&GaussianRational::from_integer(prefactor))
}

/// `H_a(x) H_b(y)` as a bivariate polynomial.
pub fn hermite_product(a: u32, b: u32) -> BiPoly {
    &BiPoly::from_x(&hermite(a).to_rational()) * &BiPoly::from_y(&hermite(b).to_rational())
}

/// Closed-form Hermite-product coefficients of the right-hand side,
/// keyed by `HG(2m+n, 2p+|l|-2m-n)`.
pub fn rhs_eq1_coeffs(p: u32, ell: i32) -> BTreeMap<HGIndex, GaussianRational> {
    let abs_ell = ell.unsigned_abs();
    let order = 2 * p + abs_ell;
    // (∓i): -i for l >= 0, +i for l < 0
    let unit = if ell >= 0 {
        -GaussianRational::i()
    } else {
        GaussianRational::i()
    };
    let mut out = BTreeMap::new();
    for m in 0..=p {
        for n in 0..=abs_ell {
            let weight = big_binomial(p, m) * big_binomial(abs_ell, n);
            let c = unit.pow(abs_ell + n) * GaussianRational::from_integer(weight);
            let key = HGIndex::new(2 * m + n, order - 2 * m - n);
            let slot: &mut GaussianRational = out.entry(key).or_default();
            *slot += &c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The double Hermite sum on the right-hand side, expanded to monomials.
pub fn rhs_eq1(p: u32, ell: i32) -> BiPoly {
    hermite_synthesize(&rhs_eq1_coeffs(p, ell))
}

/// `Σ M[(a,b)] H_a(x) H_b(y)`.
pub fn hermite_synthesize(coeffs: &BTreeMap<HGIndex, GaussianRational>) -> BiPoly {
    coeffs.iter().fold(BiPoly::zero(), |acc, (hg, c)| {
        &acc + &hermite_product(hg.m, hg.n).scale(c)
    })
}

/// Writes `poly` exactly as `Σ M[(a,b)] H_a(x) H_b(y)`.
///
/// Repeatedly takes the highest remaining monomial `c x^a y^b` and subtracts
/// `c / 2^(a+b) · H_a(x) H_b(y)`. Every other monomial of that product has
/// strictly lower total degree, so the leading monomial strictly decreases.
pub fn hermite_project(poly: &BiPoly) -> BTreeMap<HGIndex, GaussianRational> {
    let mut hermites: Vec<UniPoly<BigInt>> = Vec::new();
    let mut rem = poly.clone();
    let mut out: BTreeMap<HGIndex, GaussianRational> = BTreeMap::new();

    while let Some((lead, c)) = rem.leading_term() {
        let needed = lead.x.max(lead.y) as usize;
        while hermites.len() <= needed {
            hermites.push(hermite(hermites.len() as u32));
        }
        let scale = BigRational::new(BigInt::one(), BigInt::one() << lead.degree());
        let coef = c.scale(&scale);

        let hx = &hermites[lead.x as usize];
        let hy = &hermites[lead.y as usize];
        for (i, cx) in hx.coeffs().iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            for (j, cy) in hy.coeffs().iter().enumerate() {
                if cy.is_zero() {
                    continue;
                }
                let term = coef.scale(&BigRational::from_integer(-(cx * cy)));
                rem.add_term(Monomial::new(i as u32, j as u32), &term);
            }
        }
        debug_assert!(rem.leading_term().is_none_or(|(m, _)| m < lead));

        let slot = out.entry(HGIndex::new(lead.x, lead.y)).or_default();
        *slot += &coef;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// True iff both sides of the LG/HG identity agree exactly for `(p, l)`.
pub fn eq1_identity_check(p: u32, ell: i32) -> bool {
    (&lhs_eq1(p, ell) - &rhs_eq1(p, ell)).is_zero()
}

/// Unnormalized Hermite-product coefficients of an LG mode: the projection of
/// the identity's left-hand side.
pub fn raw_lg_expansion(mode: LGIndex) -> BTreeMap<HGIndex, GaussianRational> {
    hermite_project(&lhs_eq1(mode.p, mode.ell))
}

/// Joint two-photon coefficients of
/// `|L_p^l>_A |L_q^-l>_B ± |L_p^-l>_A |L_q^l>_B` in the Hermite-product basis,
/// using the unnormalized single-photon expansions.
pub fn bell_raw_decomposition(
    p: u32,
    q: u32,
    ell: i32,
    sign: BellSign,
) -> BTreeMap<(HGIndex, HGIndex), GaussianRational> {
    let first_a = raw_lg_expansion(LGIndex::new(p, ell));
    let first_b = raw_lg_expansion(LGIndex::new(q, -ell));
    let second_a = raw_lg_expansion(LGIndex::new(p, -ell));
    let second_b = raw_lg_expansion(LGIndex::new(q, ell));
    let sign = GaussianRational::from(sign.factor());

    let mut out: BTreeMap<(HGIndex, HGIndex), GaussianRational> = BTreeMap::new();
    for (ha, ca) in &first_a {
        for (hb, cb) in &first_b {
            *out.entry((*ha, *hb)).or_default() += &(ca * cb);
        }
    }
    for (ha, ca) in &second_a {
        for (hb, cb) in &second_b {
            *out.entry((*ha, *hb)).or_default() += &(&(ca * cb) * &sign);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Divides every coefficient by the one stored under `reference`, so that two
/// decompositions can be compared up to an overall constant.
pub fn ratios_relative_to<K: Ord + Clone>(
    coeffs: &BTreeMap<K, GaussianRational>,
    reference: &K,
) -> Option<BTreeMap<K, GaussianRational>> {
    let pivot = coeffs.get(reference)?;
    coeffs
        .iter()
        .map(|(k, c)| c.checked_div(pivot).map(|r| (k.clone(), r)))
        .collect()
}

/// True when every coefficient is a real or purely imaginary integer.
pub fn is_gaussian_integer(c: &GaussianRational) -> bool {
    c.re.is_integer() && c.im.is_integer()
}
