//! Document scanning: detection by contours, perspective rectification,
//! enhancement and binarization, and four-click cropping.
//!
//! ```no_run
//! use docscan_core::{codec, pipeline::{self, PipelineConfig, ScanMode}};
//!
//! let img = codec::decode_image("photo.png")?;
//! let result = pipeline::scan(&img, &PipelineConfig::default())?;
//! codec::encode_image(&pipeline::render(&result, ScanMode::Thresh), "Scanned.png")?;
//! # Ok::<(), docscan_core::Error>(())
//! ```

pub mod codec;
pub mod contours;
pub mod error;
pub mod filters;
pub mod geometry;
pub mod pipeline;
pub mod raster;
pub mod synth;
pub mod threshold;

pub use contours::{Contour, ContourSet, PixelPoint};
pub use error::{Error, Result};
pub use filters::Kernel;
pub use geometry::{Homography, Point2F, Quad, RotatedRect};
pub use pipeline::{InkCombine, PipelineConfig, ScanMode, ScanResult};
pub use raster::{AnyRaster, BinaryRaster, GrayRaster, Raster, RasterKind, Rotate, Samples};
pub use threshold::{IntegralImage, ThresholdParams};
