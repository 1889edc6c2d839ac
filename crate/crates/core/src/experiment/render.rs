//! Transverse intensity images of single modes, written as binary PGM.
//!
//! Pixel `(i, j)` samples the point `x = (i - size/2)·s`, `y = (size/2 - j)·s`
//! with `s = 2·extent/size`, in units of the beam waist. Row 0 is the top of
//! the image. Intensities are scaled so the brightest pixel is 255.

use std::io::Write;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mode_index::SpatialMode;

pub const MIN_IMAGE_SIZE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    pub width: usize,
    pub height: usize,
    /// Row-major, top row first.
    pub pixels: Vec<u8>,
}

impl GrayImage {
    pub fn pixel(&self, i: usize, j: usize) -> u8 {
        self.pixels[j * self.width + i]
    }

    pub fn to_pgm(&self) -> Vec<u8> {
        let mut out = format!("P5\n{} {}\n255\n", self.width, self.height).into_bytes();
        out.extend_from_slice(&self.pixels);
        out
    }

    pub fn write_pgm(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let mut file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
        file.write_all(&self.to_pgm())
            .map_err(|e| Error::io(path, e))
    }
}

fn hermite(n: u32, x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn laguerre(p: u32, alpha: f64, x: f64) -> f64 {
    if p == 0 {
        return 1.0;
    }
    let (mut prev, mut cur) = (1.0, 1.0 + alpha - x);
    for k in 1..p {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Unnormalized field amplitude at `(x, y)`.
pub fn mode_field(mode: SpatialMode, x: f64, y: f64) -> Complex64 {
    let r2 = x * x + y * y;
    let gauss = (-r2).exp();
    match mode {
        SpatialMode::Hg(h) => {
            let s = std::f64::consts::SQRT_2;
            Complex64::from(hermite(h.m, s * x) * hermite(h.n, s * y) * gauss)
        }
        SpatialMode::Lg(l) => {
            let a = l.ell.unsigned_abs();
            let radial =
                (2.0 * r2).sqrt().powi(a as i32) * laguerre(l.p, a as f64, 2.0 * r2) * gauss;
            Complex64::from_polar(radial, l.ell as f64 * y.atan2(x))
        }
    }
}

/// Intensity image `|u(x, y)|²` of a single mode.
pub fn render_mode(mode: SpatialMode, size: usize, extent: f64) -> Result<GrayImage> {
    if size < MIN_IMAGE_SIZE {
        return Err(Error::InvalidArgument(format!(
            "image size must be at least {MIN_IMAGE_SIZE}, got {size}"
        )));
    }
    if !(extent > 0.0 && extent.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "extent must be positive and finite, got {extent}"
        )));
    }
    let step = 2.0 * extent / size as f64;
    let half = size as f64 / 2.0;
    let intensity: Vec<f64> = (0..size)
        .flat_map(|j| {
            (0..size).map(move |i| {
                let x = (i as f64 - half) * step;
                let y = (half - j as f64) * step;
                mode_field(mode, x, y).norm_sqr()
            })
        })
        .collect();
    let peak = intensity.iter().copied().fold(0.0, f64::max);
    let pixels = intensity
        .iter()
        .map(|&v| {
            if peak > 0.0 {
                (255.0 * v / peak).round() as u8
            } else {
                0
            }
        })
        .collect();
    Ok(GrayImage {
        width: size,
        height: size,
        pixels,
    })
}
