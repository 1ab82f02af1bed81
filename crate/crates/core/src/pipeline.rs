//! End-to-end scanning: find the document, rectify it, enhance it and
//! produce color, gray and black-and-white renditions. Also hosts the
//! four-click crop.

use std::fmt;
use std::str::FromStr;

use log::debug;

use crate::contours::{find_external_contours, largest_contour};
use crate::error::{Error, Result};
use crate::filters::{gaussian_blur, sharpen, DEFAULT_BLUR_SIGMA, DEFAULT_BLUR_SIZE};
use crate::geometry::{
    compute_homography, min_area_rect, order_corners, output_size_for, warp_perspective, Point2F,
    Quad,
};
use crate::raster::{brighten, to_gray, AnyRaster, BinaryRaster, GrayRaster, Raster, Samples};
use crate::threshold::{
    adaptive_mean_threshold, global_threshold, global_threshold_inv, otsu_threshold,
    ThresholdParams,
};

/// Which rendition of a scan to show.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ScanMode {
    #[default]
    Thresh,
    Gray,
    Color,
}

impl ScanMode {
    pub const ALL: [ScanMode; 3] = [ScanMode::Thresh, ScanMode::Gray, ScanMode::Color];

    pub fn as_str(self) -> &'static str {
        match self {
            ScanMode::Thresh => "thresh",
            ScanMode::Gray => "gray",
            ScanMode::Color => "color",
        }
    }
}

impl fmt::Display for ScanMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ScanMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "thresh" | "threshold" => Ok(ScanMode::Thresh),
            "gray" | "grey" | "grayscale" => Ok(ScanMode::Gray),
            "color" | "colour" => Ok(ScanMode::Color),
            other => Err(Error::InvalidArgument(format!(
                "unknown mode {other:?} (expected thresh, gray or color)"
            ))),
        }
    }
}

/// How the global and adaptive black-and-white branches are merged.
///
/// Both branches are black ink on a white page.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InkCombine {
    /// Ink only where both branches see ink: AND of the white-ink masks,
    /// inverted back to black ink. The adaptive branch vetoes the global
    /// branch's false ink under uneven light.
    #[default]
    Intersection,
    /// Ink wherever either branch sees ink: plain AND of the black-ink images.
    Union,
}

/// Free parameters of [`scan`] and [`detect_document`].
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineConfig {
    pub brighten_amount: u8,
    pub blur_size: usize,
    pub blur_sigma: f64,
    pub adaptive: ThresholdParams,
    /// Blur applied before document detection.
    pub prep_blur_size: usize,
    pub prep_blur_sigma: f64,
    /// Smallest accepted document area as a fraction of the frame.
    pub min_document_fraction: f64,
    pub ink_combine: InkCombine,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            brighten_amount: 50,
            blur_size: DEFAULT_BLUR_SIZE,
            blur_sigma: DEFAULT_BLUR_SIGMA,
            adaptive: ThresholdParams::default(),
            prep_blur_size: 5,
            prep_blur_sigma: 1.4,
            min_document_fraction: 0.01,
            ink_combine: InkCombine::default(),
        }
    }
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<()> {
        self.adaptive.validate()?;
        for (name, size, sigma) in [
            ("blur", self.blur_size, self.blur_sigma),
            ("prep blur", self.prep_blur_size, self.prep_blur_sigma),
        ] {
            if size.is_multiple_of(2) || !sigma.is_finite() || sigma <= 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "{name} needs an odd size and positive sigma, got {size}/{sigma}"
                )));
            }
        }
        if !(0.0..=1.0).contains(&self.min_document_fraction) {
            return Err(Error::InvalidArgument(format!(
                "min document fraction {} outside [0, 1]",
                self.min_document_fraction
            )));
        }
        Ok(())
    }
}

/// The three renditions of a rectified document, all of identical size.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    pub detected_quad: Quad,
    pub color: Raster,
    pub gray: GrayRaster,
    pub thresh: BinaryRaster,
}

impl ScanResult {
    pub fn dimensions(&self) -> (usize, usize) {
        self.color.dimensions()
    }
}

/// Finds the largest bright region and returns its minimum-area rectangle
/// as an ordered quad.
pub fn detect_document(img: &Raster, cfg: &PipelineConfig) -> Result<Quad> {
    cfg.validate()?;
    let gray = to_gray(img);
    let prep = gaussian_blur(&gray, cfg.prep_blur_size, cfg.prep_blur_sigma)?;

    // A single gray level has no between-class split; call it page or
    // background by the mid-gray rule instead.
    let flat = prep.data().iter().all(|&v| v == prep.data()[0]);
    let t = if flat { 127 } else { otsu_threshold(&prep) };
    let binary = global_threshold(&prep, t);

    let contours = find_external_contours(&binary);
    let (index, contour) = largest_contour(&contours)?;
    let area = contours.areas[index];
    let (w, h) = img.dimensions();
    debug!(
        "threshold {t}: {} contours, largest #{index} area {area}",
        contours.len()
    );
    if area < cfg.min_document_fraction * (w * h) as f64 {
        return Err(Error::NoDocument);
    }

    let points: Vec<Point2F> = contour
        .points
        .iter()
        .map(|p| Point2F::new(p.x as f64, p.y as f64))
        .collect();
    let rect = min_area_rect(&points).map_err(|_| Error::NoDocument)?;
    match order_corners(rect.corners) {
        Ok(q) => Ok(q),
        Err(Error::AmbiguousCorners(_)) => order_rect_cyclic(rect.corners),
        Err(e) => Err(e),
    }
}

/// Orders the cyclic corners of a rectangle whose sides sit at exactly 45°,
/// where the sum/difference rule ties: the top-most of the two smallest
/// `x + y` corners becomes top-left and the rest follow clockwise on screen.
fn order_rect_cyclic(mut c: [Point2F; 4]) -> Result<Quad> {
    let signed: f64 = (0..4).map(|i| c[i].cross(c[(i + 1) % 4])).sum();
    if signed < 0.0 {
        c.reverse();
    }
    let start = (0..4)
        .min_by(|&i, &j| {
            let key = |p: Point2F| (p.x + p.y, p.y);
            let (a, b) = (key(c[i]), key(c[j]));
            a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1))
        })
        .expect("four corners");
    let at = |k: usize| c[(start + k) % 4];
    Quad::new(at(0), at(1), at(3), at(2)).map_err(|_| Error::NoDocument)
}

/// Intermediate black-and-white images of the enhancement stage.
#[derive(Debug, Clone)]
pub struct Binarization {
    /// Otsu branch, black ink on white.
    pub global: BinaryRaster,
    /// Adaptive-mean branch, black ink on white.
    pub adaptive: BinaryRaster,
    pub combined: BinaryRaster,
}

/// Builds both branches from the enhanced gray image and merges them.
pub fn binarize(gray: &GrayRaster, cfg: &PipelineConfig) -> Result<Binarization> {
    let t = otsu_threshold(gray);
    // ink white, then inverted back to black ink on white
    let white_ink = global_threshold_inv(gray, t);
    let global = white_ink.not();
    let global = global_threshold(&sharpen(global.as_gray()), 127);

    let adaptive = adaptive_mean_threshold(gray, cfg.adaptive)?;
    let combined = match cfg.ink_combine {
        InkCombine::Union => global.and(&adaptive)?,
        InkCombine::Intersection => global.not().and(&adaptive.not())?.not(),
    };
    debug!("otsu {t} on enhanced gray");
    Ok(Binarization {
        global,
        adaptive,
        combined,
    })
}

/// Detects, rectifies and enhances the document in `img`.
pub fn scan(img: &Raster, cfg: &PipelineConfig) -> Result<ScanResult> {
    let quad = detect_document(img, cfg)?;
    let (w, h) = output_size_for(&quad);
    let dst = Quad::output_rect(w, h).map_err(|_| Error::NoDocument)?;
    let homography = compute_homography(&quad, &dst)?;
    let warped = warp_perspective(img, &homography, w, h);

    let bright = brighten(&warped, cfg.brighten_amount);
    let denoised = gaussian_blur(&bright, cfg.blur_size, cfg.blur_sigma)?;
    let color = sharpen(&denoised);
    let gray = to_gray(&color);
    let thresh = binarize(&gray, cfg)?.combined;

    Ok(ScanResult {
        detected_quad: quad,
        color,
        gray,
        thresh,
    })
}

pub fn render(r: &ScanResult, mode: ScanMode) -> AnyRaster {
    match mode {
        ScanMode::Thresh => AnyRaster::Binary(r.thresh.clone()),
        ScanMode::Gray => AnyRaster::Gray(r.gray.clone()),
        ScanMode::Color => AnyRaster::Color(r.color.clone()),
    }
}

fn check_clicks(clicks: &[Point2F], (w, h): (usize, usize)) -> Result<[Point2F; 4]> {
    let pts: [Point2F; 4] = clicks.try_into().map_err(|_| {
        Error::InvalidArgument(format!("crop needs exactly 4 points, got {}", clicks.len()))
    })?;
    for p in &pts {
        let inside = p.x >= -0.5 && p.y >= -0.5 && p.x <= w as f64 - 0.5 && p.y <= h as f64 - 0.5;
        if !p.is_finite() || !inside {
            return Err(Error::InvalidArgument(format!(
                "point ({}, {}) outside the {w}x{h} image",
                p.x, p.y
            )));
        }
    }
    Ok(pts)
}

fn crop_homography(
    clicks: &[Point2F],
    dims: (usize, usize),
) -> Result<(crate::geometry::Homography, usize, usize)> {
    let quad = order_corners(check_clicks(clicks, dims)?)?;
    let (w, h) = output_size_for(&quad);
    let dst = Quad::output_rect(w, h)
        .map_err(|_| Error::AmbiguousCorners("selected region is too small".into()))?;
    Ok((compute_homography(&quad, &dst)?, w, h))
}

/// Four-click crop: classifies the clicks into corners regardless of order
/// and warps the enclosed quad onto an upright rectangle.
pub fn fcpt_crop(img: &Raster, clicks: &[Point2F]) -> Result<Raster> {
    let (h, w, hgt) = crop_homography(clicks, img.dimensions())?;
    Ok(warp_perspective(img, &h, w, hgt))
}

/// [`fcpt_crop`] for any image kind. Black-and-white images are
/// re-binarized at 127 after resampling.
pub fn fcpt_crop_any(img: &AnyRaster, clicks: &[Point2F]) -> Result<AnyRaster> {
    let (h, w, hgt) = crop_homography(clicks, img.dimensions())?;
    Ok(match img {
        AnyRaster::Color(c) => AnyRaster::Color(warp_perspective(c, &h, w, hgt)),
        AnyRaster::Gray(g) => AnyRaster::Gray(warp_perspective(g, &h, w, hgt)),
        AnyRaster::Binary(b) => {
            let warped = warp_perspective(b.as_gray(), &h, w, hgt);
            AnyRaster::Binary(global_threshold(&warped, 127))
        }
    })
}
