//! Global, Otsu and adaptive-mean binarization.

use crate::error::{Error, Result};
use crate::raster::{BinaryRaster, GrayRaster, Samples};

/// Summed-area table with one extra leading row and column of zeros.
///
/// `sum_at(x, y)` is the sum of every sample strictly above and to the left
/// of `(x, y)`.
#[derive(Debug, Clone)]
pub struct IntegralImage {
    width: usize,
    height: usize,
    sums: Vec<u64>,
}

impl IntegralImage {
    pub fn sum_at(&self, x: usize, y: usize) -> u64 {
        self.sums[y * (self.width + 1) + x]
    }

    /// Sum over the half-open window `[x0, x1) × [y0, y1)`.
    pub fn window_sum(&self, x0: usize, y0: usize, x1: usize, y1: usize) -> u64 {
        debug_assert!(x0 <= x1 && y0 <= y1 && x1 <= self.width && y1 <= self.height);
        self.sum_at(x1, y1) + self.sum_at(x0, y0) - self.sum_at(x1, y0) - self.sum_at(x0, y1)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }
}

pub fn build_integral(img: &GrayRaster) -> IntegralImage {
    let (w, h) = img.dimensions();
    let stride = w + 1;
    let mut sums = vec![0u64; stride * (h + 1)];
    for y in 0..h {
        let mut row = 0u64;
        for x in 0..w {
            row += img.get(x, y) as u64;
            sums[(y + 1) * stride + x + 1] = sums[y * stride + x + 1] + row;
        }
    }
    IntegralImage {
        width: w,
        height: h,
        sums,
    }
}

/// Parameters of the adaptive mean threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ThresholdParams {
    /// Odd window side, at least 3.
    pub block: usize,
    /// Offset subtracted from the local mean.
    pub c: u8,
}

impl ThresholdParams {
    pub const DEFAULT_BLOCK: usize = 15;
    pub const DEFAULT_C: u8 = 8;

    pub fn new(block: usize, c: u8) -> Result<Self> {
        let p = ThresholdParams { block, c };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.block < 3 || self.block.is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!(
                "adaptive block must be odd and >= 3, got {}",
                self.block
            )));
        }
        Ok(())
    }
}

impl Default for ThresholdParams {
    fn default() -> Self {
        ThresholdParams {
            block: Self::DEFAULT_BLOCK,
            c: Self::DEFAULT_C,
        }
    }
}

/// White where the sample is strictly greater than `t`, black elsewhere.
pub fn global_threshold(img: &GrayRaster, t: u8) -> BinaryRaster {
    BinaryRaster::from_gray_unchecked(img.map(|v| if v > t { 255 } else { 0 }))
}

/// White where the sample is at most `t`; the complement of [`global_threshold`].
pub fn global_threshold_inv(img: &GrayRaster, t: u8) -> BinaryRaster {
    BinaryRaster::from_gray_unchecked(img.map(|v| if v > t { 0 } else { 255 }))
}

pub fn histogram(img: &GrayRaster) -> [u64; 256] {
    let mut hist = [0u64; 256];
    for &v in img.data() {
        hist[v as usize] += 1;
    }
    hist
}

/// Otsu threshold of an image; see [`otsu_from_histogram`].
pub fn otsu_threshold(img: &GrayRaster) -> u8 {
    otsu_from_histogram(&histogram(img))
}

/// Returns the `t` maximizing between-class variance, where the lower class
/// is every level `<= t`. Ties go to the smallest `t`. A histogram with a
/// single occupied level returns that level; an empty one returns 0.
///
/// For class counts `n0, n1` and sums `s0, s1` the variance is proportional
/// to `(n1·s0 − n0·s1)² / (n0·n1)`. Comparisons are exact in integers below
/// [`OTSU_EXACT_LIMIT`] samples, where the squared term still fits in 128
/// bits, and use `f64` above it.
pub const OTSU_EXACT_LIMIT: u64 = 1 << 28;

pub fn otsu_from_histogram(hist: &[u64; 256]) -> u8 {
    let occupied: Vec<usize> = (0..256).filter(|&i| hist[i] > 0).collect();
    match occupied.len() {
        0 => return 0,
        1 => return occupied[0] as u8,
        _ => {}
    }

    let total: u64 = hist.iter().sum();
    let total_sum: u128 = hist
        .iter()
        .enumerate()
        .map(|(i, &n)| i as u128 * n as u128)
        .sum();

    if total >= OTSU_EXACT_LIMIT {
        return otsu_f64(hist, total, total_sum);
    }

    let mut best_t = 0u8;
    let mut best: Option<(u128, u128)> = None;
    let mut n0 = 0u64;
    let mut s0 = 0u128;
    for (t, &count) in hist.iter().enumerate().take(255) {
        n0 += count;
        s0 += t as u128 * count as u128;
        let n1 = total - n0;
        if n0 == 0 || n1 == 0 {
            continue;
        }
        let s1 = total_sum - s0;
        let diff = (n1 as u128 * s0).abs_diff(n0 as u128 * s1);
        let num = diff * diff;
        let den = n0 as u128 * n1 as u128;
        let better = match best {
            None => true,
            Some((bn, bd)) => ratio_gt(num, den, bn, bd),
        };
        if better {
            best = Some((num, den));
            best_t = t as u8;
        }
    }
    best_t
}

fn otsu_f64(hist: &[u64; 256], total: u64, total_sum: u128) -> u8 {
    let (total, total_sum) = (total as f64, total_sum as f64);
    let (mut best_t, mut best) = (0u8, f64::NEG_INFINITY);
    let (mut n0, mut s0) = (0.0, 0.0);
    for (t, &count) in hist.iter().enumerate().take(255) {
        n0 += count as f64;
        s0 += t as f64 * count as f64;
        let n1 = total - n0;
        if n0 == 0.0 || n1 == 0.0 {
            continue;
        }
        let diff = n1 * s0 - n0 * (total_sum - s0);
        let score = diff / n0 * diff / n1;
        if score > best {
            (best_t, best) = (t as u8, score);
        }
    }
    best_t
}

/// `a/b > c/d` for positive denominators, exactly.
fn ratio_gt(a: u128, b: u128, c: u128, d: u128) -> bool {
    mul_wide(a, d) > mul_wide(c, b)
}

/// Full 256-bit product as (high, low).
fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    const MASK: u128 = u64::MAX as u128;
    let (a_hi, a_lo) = (a >> 64, a & MASK);
    let (b_hi, b_lo) = (b >> 64, b & MASK);
    let ll = a_lo * b_lo;
    let lh = a_lo * b_hi;
    let hl = a_hi * b_lo;
    let hh = a_hi * b_hi;
    let mid = (ll >> 64) + (lh & MASK) + (hl & MASK);
    let lo = (ll & MASK) | (mid << 64);
    let hi = hh + (lh >> 64) + (hl >> 64) + (mid >> 64);
    (hi, lo)
}

/// White where `in(x, y) > mean(window) − c`.
///
/// The window has side `p.block` centred on the pixel, clipped to the image,
/// and the mean divides by the clipped area. The test is evaluated exactly as
/// `(in + c) · area > window_sum`.
pub fn adaptive_mean_threshold(img: &GrayRaster, p: ThresholdParams) -> Result<BinaryRaster> {
    p.validate()?;
    let (w, h) = img.dimensions();
    let table = build_integral(img);
    let r = p.block / 2;
    let mut out = Vec::with_capacity(w * h);
    for y in 0..h {
        let y0 = y.saturating_sub(r);
        let y1 = (y + r + 1).min(h);
        for x in 0..w {
            let x0 = x.saturating_sub(r);
            let x1 = (x + r + 1).min(w);
            let area = ((x1 - x0) * (y1 - y0)) as u64;
            let sum = table.window_sum(x0, y0, x1, y1);
            let v = img.get(x, y) as u64 + p.c as u64;
            out.push(if v * area > sum { 255 } else { 0 });
        }
    }
    Ok(BinaryRaster::from_gray_unchecked(
        GrayRaster::new(w, h, out).expect("dimensions preserved"),
    ))
}
