//! Sparse exact polynomials: univariate with integer or rational coefficients,
//! and bivariate `Σ c_ij x^i y^j` with Gaussian-rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::GaussianRational;

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Zero + Clone> UniPoly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl UniPoly<BigInt> {
    pub fn to_rational(&self) -> UniPoly<BigRational> {
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl<T: fmt::Display + Zero + One + PartialEq> fmt::Display for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·t")?,
                _ => write!(f, "{c}·t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Exponent pair of a bivariate monomial `x^x y^y`.
///
/// Ordered graded-lexicographically: total degree first, then the power of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const fn new(x: u32, y: u32) -> Self {
        Self { x, y }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse bivariate polynomial over the Gaussian rationals. No stored
/// coefficient is ever zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn monomial(c: GaussianRational, x: u32, y: u32) -> Self {
        let mut poly = Self::zero();
        poly.add_term(Monomial::new(x, y), &c);
        poly
    }

    /// `x`
    pub fn x() -> Self {
        Self::monomial(GaussianRational::one(), 1, 0)
    }

    /// `y`
    pub fn y() -> Self {
        Self::monomial(GaussianRational::one(), 0, 1)
    }

    /// `f(x)` as a bivariate polynomial.
    pub fn from_x(poly: &UniPoly<BigRational>) -> Self {
        Self::from_terms(poly.coeffs().iter().enumerate().map(|(k, c)| {
            (
                Monomial::new(k as u32, 0),
                GaussianRational::from(c.clone()),
            )
        }))
    }

    /// `f(y)` as a bivariate polynomial.
    pub fn from_y(poly: &UniPoly<BigRational>) -> Self {
        Self::from_terms(poly.coeffs().iter().enumerate().map(|(k, c)| {
            (
                Monomial::new(0, k as u32),
                GaussianRational::from(c.clone()),
            )
        }))
    }

    /// `f(x² + y²)`.
    pub fn radial(poly: &UniPoly<BigRational>) -> Self {
        let r2 = &(&Self::x() * &Self::x()) + &(&Self::y() * &Self::y());
        let mut acc = Self::zero();
        let mut power = Self::one();
        for c in poly.coeffs() {
            acc = &acc + &power.scale(&GaussianRational::from(c.clone()));
            power = &power * &r2;
        }
        acc
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, GaussianRational)>) -> Self {
        let mut poly = Self::zero();
        for (mono, c) in terms {
            poly.add_term(mono, &c);
        }
        poly
    }

    /// Adds `c · mono` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, mono: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn coeff(&self, x: u32, y: u32) -> GaussianRational {
        self.terms
            .get(&Monomial::new(x, y))
            .cloned()
            .unwrap_or_default()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Highest monomial in graded-lex order with its coefficient.
    pub fn leading_term(&self) -> Option<(Monomial, &GaussianRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v.conj())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(Monomial::new(ma.x + mb.x, ma.y + mb.y), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Display for BiPoly {
    /// Highest graded-lex monomial first, e.g. `4·x^2 + 8i·x·y + -4·y^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (var, exp) in [("x", m.x), ("y", m.y)] {
                match exp {
                    0 => {}
                    1 => write!(f, "·{var}")?,
                    _ => write!(f, "·{var}^{exp}")?,
                }
            }
        }
        Ok(())
    }
}
