//! Convolution with square kernels, Gaussian denoising and sharpening.
//!
//! Borders are handled by edge replication. Sums are accumulated in `f64`,
//! rounded half away from zero and clamped to `[0, 255]` last.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::raster::{GrayRaster, Raster, Samples};

/// Default Gaussian window side for denoising.
pub const DEFAULT_BLUR_SIZE: usize = 5;
/// Default Gaussian standard deviation for denoising.
pub const DEFAULT_BLUR_SIGMA: f64 = 1.1;

/// 4-neighbour Laplacian sharpening mask; sums to one.
pub const SHARPEN_3X3: [f64; 9] = [0.0, -1.0, 0.0, -1.0, 5.0, -1.0, 0.0, -1.0, 0.0];

/// An odd-sized square convolution mask anchored at its center cell.
#[derive(Debug, Clone, PartialEq)]
pub struct Kernel {
    size: usize,
    coeffs: Vec<f64>,
    // 1-D factor when the kernel is the outer product of a vector with itself.
    separable: Option<Vec<f64>>,
}

impl Kernel {
    pub fn new(size: usize, coeffs: Vec<f64>) -> Result<Self> {
        if size.is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!(
                "kernel size must be odd, got {size}"
            )));
        }
        if coeffs.len() != size * size {
            return Err(Error::InvalidArgument(format!(
                "kernel of size {size} needs {} coefficients, got {}",
                size * size,
                coeffs.len()
            )));
        }
        Ok(Kernel {
            size,
            coeffs,
            separable: None,
        })
    }

    /// Normalized box filter of side `size`.
    pub fn box_filter(size: usize) -> Result<Self> {
        let n = (size * size) as f64;
        Kernel::new(size, vec![1.0 / n; size * size])
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Row-major coefficients.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn at(&self, col: usize, row: usize) -> f64 {
        self.coeffs[row * self.size + col]
    }

    pub fn sum(&self) -> f64 {
        self.coeffs.iter().sum()
    }

    /// Drops the separable factorization so [`convolve`] uses the direct 2-D sum.
    pub fn without_separable(mut self) -> Self {
        self.separable = None;
        self
    }

    pub fn is_separable(&self) -> bool {
        self.separable.is_some()
    }
}

/// Gaussian mask with coefficients proportional to `exp(-(dx² + dy²) / 2σ²)`,
/// normalized to sum to one.
pub fn gaussian_kernel(size: usize, sigma: f64) -> Result<Kernel> {
    if size.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "gaussian size must be odd, got {size}"
        )));
    }
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "gaussian sigma must be positive, got {sigma}"
        )));
    }
    let c = (size / 2) as f64;
    let raw: Vec<f64> = (0..size)
        .map(|i| {
            let d = i as f64 - c;
            (-(d * d) / (2.0 * sigma * sigma)).exp()
        })
        .collect();
    let total: f64 = raw.iter().sum();
    let factor: Vec<f64> = raw.iter().map(|v| v / total).collect();

    let mut coeffs = Vec::with_capacity(size * size);
    for row in 0..size {
        for col in 0..size {
            coeffs.push(factor[row] * factor[col]);
        }
    }
    let sum: f64 = coeffs.iter().sum();
    coeffs.iter_mut().for_each(|v| *v /= sum);

    Ok(Kernel {
        size,
        coeffs,
        separable: Some(factor),
    })
}

#[inline]
fn quantize(v: f64) -> u8 {
    v.round().clamp(0.0, 255.0) as u8
}

/// Correlates `img` with `k`: `out(x, y) = Σ k(i, j) · in(x + i − c, y + j − c)`.
pub fn convolve(img: &GrayRaster, k: &Kernel) -> GrayRaster {
    let out = match &k.separable {
        Some(factor) => convolve_separable(img, factor),
        None => convolve_direct(img, k),
    };
    GrayRaster::new(img.width(), img.height(), out).expect("dimensions preserved")
}

fn convolve_direct(img: &GrayRaster, k: &Kernel) -> Vec<u8> {
    let (w, h) = img.dimensions();
    let src = img.data();
    let c = (k.size / 2) as isize;
    let mut out = vec![0u8; w * h];
    out.par_chunks_mut(w).enumerate().for_each(|(y, row)| {
        for (x, dst) in row.iter_mut().enumerate() {
            let mut acc = 0.0;
            for j in 0..k.size {
                let sy = (y as isize + j as isize - c).clamp(0, h as isize - 1) as usize;
                let line = &src[sy * w..(sy + 1) * w];
                for i in 0..k.size {
                    let sx = (x as isize + i as isize - c).clamp(0, w as isize - 1) as usize;
                    acc += k.coeffs[j * k.size + i] * line[sx] as f64;
                }
            }
            *dst = quantize(acc);
        }
    });
    out
}

fn convolve_separable(img: &GrayRaster, factor: &[f64]) -> Vec<u8> {
    let (w, h) = img.dimensions();
    let src = img.data();
    let n = factor.len();
    let c = (n / 2) as isize;

    let mut horiz = vec![0f64; w * h];
    horiz.par_chunks_mut(w).enumerate().for_each(|(y, row)| {
        let line = &src[y * w..(y + 1) * w];
        for (x, dst) in row.iter_mut().enumerate() {
            let mut acc = 0.0;
            for (i, f) in factor.iter().enumerate() {
                let sx = (x as isize + i as isize - c).clamp(0, w as isize - 1) as usize;
                acc += f * line[sx] as f64;
            }
            *dst = acc;
        }
    });

    let mut out = vec![0u8; w * h];
    out.par_chunks_mut(w).enumerate().for_each(|(y, row)| {
        for (x, dst) in row.iter_mut().enumerate() {
            let mut acc = 0.0;
            for (j, f) in factor.iter().enumerate() {
                let sy = (y as isize + j as isize - c).clamp(0, h as isize - 1) as usize;
                acc += f * horiz[sy * w + x];
            }
            *dst = quantize(acc);
        }
    });
    out
}

/// Images that can be filtered one channel plane at a time.
pub trait Filterable: Sized {
    fn map_planes(&self, f: impl Fn(&GrayRaster) -> GrayRaster + Sync) -> Self;
}

impl Filterable for GrayRaster {
    fn map_planes(&self, f: impl Fn(&GrayRaster) -> GrayRaster + Sync) -> Self {
        f(self)
    }
}

impl Filterable for Raster {
    fn map_planes(&self, f: impl Fn(&GrayRaster) -> GrayRaster + Sync) -> Self {
        let [r, g, b] = self.split_channels();
        Raster::merge_channels(&[f(&r), f(&g), f(&b)]).expect("planes share dimensions")
    }
}

pub fn gaussian_blur<I: Filterable>(img: &I, size: usize, sigma: f64) -> Result<I> {
    let k = gaussian_kernel(size, sigma)?;
    Ok(img.map_planes(|p| convolve(p, &k)))
}

/// Applies [`SHARPEN_3X3`] to every channel.
pub fn sharpen<I: Filterable>(img: &I) -> I {
    let k = Kernel::new(3, SHARPEN_3X3.to_vec()).expect("static kernel");
    img.map_planes(|p| convolve(p, &k))
}
