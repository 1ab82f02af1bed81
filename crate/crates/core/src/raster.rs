//! 8-bit image containers and pixel-wise primitives.
//!
//! Samples are stored row-major with the origin at the top-left corner,
//! x growing rightward and y growing downward. Color rasters hold
//! interleaved R, G, B samples.

use crate::error::{Error, Result};

/// Common access to row-major sample storage.
pub trait Samples: Sized {
    /// Interleaved samples per pixel.
    const CHANNELS: usize;

    fn width(&self) -> usize;
    fn height(&self) -> usize;
    fn samples(&self) -> &[u8];

    /// Builds an image from raw samples, validating the buffer length.
    fn from_samples(width: usize, height: usize, data: Vec<u8>) -> Result<Self>;

    fn dimensions(&self) -> (usize, usize) {
        (self.width(), self.height())
    }
}

fn check_dims(width: usize, height: usize, len: usize, channels: usize) -> Result<()> {
    if width == 0 || height == 0 {
        return Err(Error::InvalidArgument(format!(
            "image dimensions must be at least 1x1, got {width}x{height}"
        )));
    }
    if len != width * height * channels {
        return Err(Error::InvalidArgument(format!(
            "expected {} samples for {width}x{height}x{channels}, got {len}",
            width * height * channels
        )));
    }
    Ok(())
}

/// A three-channel RGB image.
#[derive(Clone, PartialEq, Eq)]
pub struct Raster {
    width: usize,
    height: usize,
    data: Vec<u8>,
}

impl Raster {
    pub fn new(width: usize, height: usize, data: Vec<u8>) -> Result<Self> {
        check_dims(width, height, data.len(), 3)?;
        Ok(Raster {
            width,
            height,
            data,
        })
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn filled(width: usize, height: usize, rgb: [u8; 3]) -> Self {
        Self::from_fn(width, height, |_, _| rgb)
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn from_fn(
        width: usize,
        height: usize,
        mut f: impl FnMut(usize, usize) -> [u8; 3],
    ) -> Self {
        assert!(width > 0 && height > 0, "empty raster");
        let mut data = Vec::with_capacity(width * height * 3);
        for y in 0..height {
            for x in 0..width {
                data.extend_from_slice(&f(x, y));
            }
        }
        Raster {
            width,
            height,
            data,
        }
    }

    /// Promotes a single-channel image by replicating it into R, G and B.
    pub fn from_gray(gray: &GrayRaster) -> Self {
        let data = gray.data.iter().flat_map(|&v| [v, v, v]).collect();
        Raster {
            width: gray.width,
            height: gray.height,
            data,
        }
    }

    pub fn pixel(&self, x: usize, y: usize) -> [u8; 3] {
        let i = (y * self.width + x) * 3;
        [self.data[i], self.data[i + 1], self.data[i + 2]]
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn into_data(self) -> Vec<u8> {
        self.data
    }

    /// Splits the image into its R, G and B planes.
    pub fn split_channels(&self) -> [GrayRaster; 3] {
        let plane = |c: usize| GrayRaster {
            width: self.width,
            height: self.height,
            data: self.data.iter().skip(c).step_by(3).copied().collect(),
        };
        [plane(0), plane(1), plane(2)]
    }

    /// Interleaves three equally sized planes into a color image.
    pub fn merge_channels(planes: &[GrayRaster; 3]) -> Result<Self> {
        let dims = planes[0].dimensions();
        for p in &planes[1..] {
            if p.dimensions() != dims {
                return Err(Error::DimensionMismatch {
                    left: dims,
                    right: p.dimensions(),
                });
            }
        }
        let mut data = Vec::with_capacity(planes[0].data.len() * 3);
        for i in 0..planes[0].data.len() {
            data.extend([planes[0].data[i], planes[1].data[i], planes[2].data[i]]);
        }
        Ok(Raster {
            width: dims.0,
            height: dims.1,
            data,
        })
    }
}

impl std::fmt::Debug for Raster {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Raster({}x{})", self.width, self.height)
    }
}

impl Samples for Raster {
    const CHANNELS: usize = 3;

    fn width(&self) -> usize {
        self.width
    }
    fn height(&self) -> usize {
        self.height
    }
    fn samples(&self) -> &[u8] {
        &self.data
    }
    fn from_samples(width: usize, height: usize, data: Vec<u8>) -> Result<Self> {
        Raster::new(width, height, data)
    }
}

/// A single-channel 8-bit image.
#[derive(Clone, PartialEq, Eq)]
pub struct GrayRaster {
    width: usize,
    height: usize,
    data: Vec<u8>,
}

impl GrayRaster {
    pub fn new(width: usize, height: usize, data: Vec<u8>) -> Result<Self> {
        check_dims(width, height, data.len(), 1)?;
        Ok(GrayRaster {
            width,
            height,
            data,
        })
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn filled(width: usize, height: usize, value: u8) -> Self {
        assert!(width > 0 && height > 0, "empty raster");
        GrayRaster {
            width,
            height,
            data: vec![value; width * height],
        }
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> u8) -> Self {
        assert!(width > 0 && height > 0, "empty raster");
        let mut data = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                data.push(f(x, y));
            }
        }
        GrayRaster {
            width,
            height,
            data,
        }
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.data[y * self.width + x]
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn into_data(self) -> Vec<u8> {
        self.data
    }

    pub fn map(&self, f: impl Fn(u8) -> u8) -> GrayRaster {
        GrayRaster {
            width: self.width,
            height: self.height,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }
}

impl std::fmt::Debug for GrayRaster {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GrayRaster({}x{})", self.width, self.height)
    }
}

impl Samples for GrayRaster {
    const CHANNELS: usize = 1;

    fn width(&self) -> usize {
        self.width
    }
    fn height(&self) -> usize {
        self.height
    }
    fn samples(&self) -> &[u8] {
        &self.data
    }
    fn from_samples(width: usize, height: usize, data: Vec<u8>) -> Result<Self> {
        GrayRaster::new(width, height, data)
    }
}

/// A single-channel image whose samples are all either 0 or 255.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryRaster(GrayRaster);

impl BinaryRaster {
    pub const BLACK: u8 = 0;
    pub const WHITE: u8 = 255;

    /// Wraps a gray image, rejecting any sample outside {0, 255}.
    pub fn from_gray(gray: GrayRaster) -> Result<Self> {
        if let Some(v) = gray.data.iter().find(|&&v| v != 0 && v != 255) {
            return Err(Error::InvalidArgument(format!(
                "binary raster sample {v} is not 0 or 255"
            )));
        }
        Ok(BinaryRaster(gray))
    }

    /// Builds a binary image from a predicate; `true` maps to white.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        BinaryRaster(GrayRaster::from_fn(width, height, |x, y| {
            if f(x, y) {
                Self::WHITE
            } else {
                Self::BLACK
            }
        }))
    }

    pub(crate) fn from_gray_unchecked(gray: GrayRaster) -> Self {
        debug_assert!(gray.data.iter().all(|&v| v == 0 || v == 255));
        BinaryRaster(gray)
    }

    pub fn width(&self) -> usize {
        self.0.width
    }

    pub fn height(&self) -> usize {
        self.0.height
    }

    pub fn dimensions(&self) -> (usize, usize) {
        (self.0.width, self.0.height)
    }

    pub fn is_white(&self, x: usize, y: usize) -> bool {
        self.0.get(x, y) == Self::WHITE
    }

    pub fn as_gray(&self) -> &GrayRaster {
        &self.0
    }

    pub fn into_gray(self) -> GrayRaster {
        self.0
    }

    pub fn data(&self) -> &[u8] {
        &self.0.data
    }

    pub fn not(&self) -> BinaryRaster {
        BinaryRaster(bitwise_not(&self.0))
    }

    pub fn and(&self, other: &BinaryRaster) -> Result<BinaryRaster> {
        bitwise_and(&self.0, &other.0).map(BinaryRaster)
    }
}

impl From<BinaryRaster> for GrayRaster {
    fn from(b: BinaryRaster) -> Self {
        b.0
    }
}

/// Luma conversion with weights 0.299, 0.587, 0.114, rounded to nearest.
pub fn to_gray(img: &Raster) -> GrayRaster {
    let data = img
        .data
        .chunks_exact(3)
        .map(|p| {
            let luma = 299 * p[0] as u32 + 587 * p[1] as u32 + 114 * p[2] as u32;
            ((luma + 500) / 1000) as u8
        })
        .collect();
    GrayRaster {
        width: img.width,
        height: img.height,
        data,
    }
}

/// Saturating add of `amount` to every sample.
pub fn brighten(img: &Raster, amount: u8) -> Raster {
    Raster {
        width: img.width,
        height: img.height,
        data: img.data.iter().map(|&s| s.saturating_add(amount)).collect(),
    }
}

pub fn bitwise_not(img: &GrayRaster) -> GrayRaster {
    img.map(|v| !v)
}

pub fn bitwise_and(a: &GrayRaster, b: &GrayRaster) -> Result<GrayRaster> {
    if a.dimensions() != b.dimensions() {
        return Err(Error::DimensionMismatch {
            left: a.dimensions(),
            right: b.dimensions(),
        });
    }
    Ok(GrayRaster {
        width: a.width,
        height: a.height,
        data: a.data.iter().zip(&b.data).map(|(x, y)| x & y).collect(),
    })
}

/// Quarter-turn rotations.
pub trait Rotate {
    /// Rotates 90° clockwise: `out(x, y) = in(y, H - 1 - x)`.
    fn rotate_cw(&self) -> Self;
    /// Rotates 90° counter-clockwise: `out(x, y) = in(W - 1 - y, x)`.
    fn rotate_ccw(&self) -> Self;
}

fn rotate_samples(data: &[u8], w: usize, h: usize, channels: usize, clockwise: bool) -> Vec<u8> {
    // Output is h wide and w tall.
    let mut out = Vec::with_capacity(data.len());
    for oy in 0..w {
        for ox in 0..h {
            let (sx, sy) = if clockwise {
                (oy, h - 1 - ox)
            } else {
                (w - 1 - oy, ox)
            };
            let i = (sy * w + sx) * channels;
            out.extend_from_slice(&data[i..i + channels]);
        }
    }
    out
}

impl Rotate for Raster {
    fn rotate_cw(&self) -> Self {
        Raster {
            width: self.height,
            height: self.width,
            data: rotate_samples(&self.data, self.width, self.height, 3, true),
        }
    }

    fn rotate_ccw(&self) -> Self {
        Raster {
            width: self.height,
            height: self.width,
            data: rotate_samples(&self.data, self.width, self.height, 3, false),
        }
    }
}

impl Rotate for GrayRaster {
    fn rotate_cw(&self) -> Self {
        GrayRaster {
            width: self.height,
            height: self.width,
            data: rotate_samples(&self.data, self.width, self.height, 1, true),
        }
    }

    fn rotate_ccw(&self) -> Self {
        GrayRaster {
            width: self.height,
            height: self.width,
            data: rotate_samples(&self.data, self.width, self.height, 1, false),
        }
    }
}

impl Rotate for BinaryRaster {
    fn rotate_cw(&self) -> Self {
        BinaryRaster(self.0.rotate_cw())
    }

    fn rotate_ccw(&self) -> Self {
        BinaryRaster(self.0.rotate_ccw())
    }
}

/// Which of the three image kinds an [`AnyRaster`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RasterKind {
    Color,
    Gray,
    Binary,
}

/// One of the three image kinds, for code paths that handle all of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyRaster {
    Color(Raster),
    Gray(GrayRaster),
    Binary(BinaryRaster),
}

impl AnyRaster {
    pub fn kind(&self) -> RasterKind {
        match self {
            AnyRaster::Color(_) => RasterKind::Color,
            AnyRaster::Gray(_) => RasterKind::Gray,
            AnyRaster::Binary(_) => RasterKind::Binary,
        }
    }

    pub fn dimensions(&self) -> (usize, usize) {
        match self {
            AnyRaster::Color(r) => r.dimensions(),
            AnyRaster::Gray(g) => g.dimensions(),
            AnyRaster::Binary(b) => b.dimensions(),
        }
    }

    /// Samples per pixel in [`AnyRaster::samples`].
    pub fn channels(&self) -> usize {
        match self {
            AnyRaster::Color(_) => 3,
            _ => 1,
        }
    }

    pub fn samples(&self) -> &[u8] {
        match self {
            AnyRaster::Color(r) => r.data(),
            AnyRaster::Gray(g) => g.data(),
            AnyRaster::Binary(b) => b.data(),
        }
    }

    /// Color view of the image; single-channel kinds are promoted.
    pub fn to_color(&self) -> Raster {
        match self {
            AnyRaster::Color(r) => r.clone(),
            AnyRaster::Gray(g) => Raster::from_gray(g),
            AnyRaster::Binary(b) => Raster::from_gray(b.as_gray()),
        }
    }
}

impl Rotate for AnyRaster {
    fn rotate_cw(&self) -> Self {
        match self {
            AnyRaster::Color(r) => AnyRaster::Color(r.rotate_cw()),
            AnyRaster::Gray(g) => AnyRaster::Gray(g.rotate_cw()),
            AnyRaster::Binary(b) => AnyRaster::Binary(b.rotate_cw()),
        }
    }

    fn rotate_ccw(&self) -> Self {
        match self {
            AnyRaster::Color(r) => AnyRaster::Color(r.rotate_ccw()),
            AnyRaster::Gray(g) => AnyRaster::Gray(g.rotate_ccw()),
            AnyRaster::Binary(b) => AnyRaster::Binary(b.rotate_ccw()),
        }
    }
}

impl From<Raster> for AnyRaster {
    fn from(r: Raster) -> Self {
        AnyRaster::Color(r)
    }
}

impl From<GrayRaster> for AnyRaster {
    fn from(g: GrayRaster) -> Self {
        AnyRaster::Gray(g)
    }
}

impl From<BinaryRaster> for AnyRaster {
    fn from(b: BinaryRaster) -> Self {
        AnyRaster::Binary(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gray2x2() -> GrayRaster {
        GrayRaster::new(2, 2, vec![1, 2, 3, 4]).unwrap()
    }

    #[test]
    fn gray_conversion_examples() {
        let px = |rgb| to_gray(&Raster::filled(1, 1, rgb)).get(0, 0);
        assert_eq!(px([255, 255, 255]), 255);
        assert_eq!(px([0, 0, 0]), 0);
        assert_eq!(px([255, 0, 0]), 76);
        assert_eq!(px([0, 255, 0]), 150);
        assert_eq!(px([0, 0, 255]), 29);
    }

    #[test]
    fn brighten_saturates() {
        let img = Raster::new(1, 1, vec![0, 205, 240]).unwrap();
        assert_eq!(brighten(&img, 50).data(), &[50, 255, 255]);
    }

    #[test]
    fn not_and_examples() {
        let g = GrayRaster::new(3, 1, vec![0, 255, 100]).unwrap();
        assert_eq!(bitwise_not(&g).data(), &[255, 0, 155]);

        let a = GrayRaster::new(3, 1, vec![255, 255, 170]).unwrap();
        let b = GrayRaster::new(3, 1, vec![255, 0, 204]).unwrap();
        assert_eq!(bitwise_and(&a, &b).unwrap().data(), &[255, 0, 136]);
    }

    #[test]
    fn and_rejects_mismatched_dims() {
        let a = GrayRaster::filled(2, 3, 0);
        let b = GrayRaster::filled(3, 2, 0);
        assert!(matches!(
            bitwise_and(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rotation_index_maps() {
        assert_eq!(gray2x2().rotate_cw().data(), &[3, 1, 4, 2]);
        assert_eq!(gray2x2().rotate_ccw().data(), &[2, 4, 1, 3]);
    }

    #[test]
    fn rotation_swaps_dims() {
        let g = GrayRaster::from_fn(1, 5, |_, y| y as u8);
        let r = g.rotate_cw();
        assert_eq!(r.dimensions(), (5, 1));
        // The top of a column lands on the right end after a clockwise turn.
        assert_eq!(r.data(), &[4, 3, 2, 1, 0]);
        assert_eq!(g.rotate_ccw().data(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn rejects_bad_buffers() {
        assert!(Raster::new(2, 2, vec![0; 11]).is_err());
        assert!(GrayRaster::new(0, 2, vec![]).is_err());
        assert!(BinaryRaster::from_gray(GrayRaster::filled(1, 1, 7)).is_err());
    }

    #[test]
    fn split_merge_roundtrip() {
        let img = Raster::from_fn(3, 2, |x, y| [x as u8, y as u8, 9]);
        let planes = img.split_channels();
        assert_eq!(planes[1].data(), &[0, 0, 0, 1, 1, 1]);
        assert_eq!(Raster::merge_channels(&planes).unwrap(), img);
    }

    fn arb_gray() -> impl Strategy<Value = GrayRaster> {
        (1usize..12, 1usize..12).prop_flat_map(|(w, h)| {
            proptest::collection::vec(any::<u8>(), w * h)
                .prop_map(move |d| GrayRaster::new(w, h, d).unwrap())
        })
    }

    fn arb_color() -> impl Strategy<Value = Raster> {
        (1usize..10, 1usize..10).prop_flat_map(|(w, h)| {
            proptest::collection::vec(any::<u8>(), w * h * 3)
                .prop_map(move |d| Raster::new(w, h, d).unwrap())
        })
    }

    proptest! {
        #[test]
        fn brighten_monotone(img in arb_color(), amount in any::<u8>()) {
            let out = brighten(&img, amount);
            prop_assert!(out.data().iter().zip(img.data()).all(|(o, i)| o >= i));
            prop_assert_eq!(brighten(&img, 0), img);
        }

        #[test]
        fn not_is_involution(img in arb_gray()) {
            prop_assert_eq!(bitwise_not(&bitwise_not(&img)), img);
        }

        #[test]
        fn and_idempotent_commutative(a in arb_gray()) {
            let b = bitwise_not(&a).map(|v| v.rotate_left(3));
            prop_assert_eq!(bitwise_and(&a, &a).unwrap(), a.clone());
            prop_assert_eq!(bitwise_and(&a, &b).unwrap(), bitwise_and(&b, &a).unwrap());
        }

        #[test]
        fn rotations_form_a_group(img in arb_color()) {
            let four = img.rotate_cw().rotate_cw().rotate_cw().rotate_cw();
            prop_assert_eq!(&four, &img);
            prop_assert_eq!(&img.rotate_cw().rotate_ccw(), &img);
            prop_assert_eq!(&img.rotate_ccw().rotate_cw(), &img);
            let mut a = img.rotate_cw().into_data();
            let mut b = img.data().to_vec();
            a.sort_unstable();
            b.sort_unstable();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn constant_color_gray_is_constant(rgb in any::<[u8; 3]>(), w in 1usize..6, h in 1usize..6) {
            let g = to_gray(&Raster::filled(w, h, rgb));
            prop_assert!(g.data().iter().all(|&v| v == g.data()[0]));
        }
    }
}
