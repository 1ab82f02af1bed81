//! Image file codecs: PNG, JPEG and NetPBM (P2/P3/P5/P6).
//!
//! Decoding always yields an RGB [`Raster`]; gray sources are promoted by
//! replicating the sample into all three channels. Encoding picks the format
//! from the file extension.

use std::io::Cursor;
use std::path::{Path, PathBuf};

use image::codecs::jpeg::JpegEncoder;
use image::codecs::png::PngEncoder;
use image::{ExtendedColorType, ImageEncoder};

use crate::error::{Error, Result};
use crate::raster::{AnyRaster, GrayRaster, Raster};

pub const JPEG_QUALITY: u8 = 90;

/// File formats the encoder can produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImageFormat {
    Png,
    Jpeg,
    /// Binary P6.
    Ppm,
    /// Binary P5.
    Pgm,
}

impl ImageFormat {
    pub fn from_path(path: &Path) -> Option<Self> {
        let ext = path.extension()?.to_str()?.to_ascii_lowercase();
        match ext.as_str() {
            "png" => Some(ImageFormat::Png),
            "jpg" | "jpeg" => Some(ImageFormat::Jpeg),
            "ppm" | "pnm" => Some(ImageFormat::Ppm),
            "pgm" => Some(ImageFormat::Pgm),
            _ => None,
        }
    }
}

fn memory_path() -> PathBuf {
    PathBuf::from("<memory>")
}

pub fn decode_image(path: impl AsRef<Path>) -> Result<Raster> {
    decode_any_image(path).map(|img| img.to_color())
}

/// Like [`decode_image`], but single-channel sources stay [`AnyRaster::Gray`].
pub fn decode_any_image(path: impl AsRef<Path>) -> Result<AnyRaster> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    decode_any_bytes(&bytes).map_err(|e| match e {
        Error::Decode { reason, .. } => Error::Decode {
            path: path.to_path_buf(),
            reason,
        },
        other => other,
    })
}

/// Decodes an in-memory PNG, JPEG or NetPBM file.
pub fn decode_bytes(bytes: &[u8]) -> Result<Raster> {
    decode_any_bytes(bytes).map(|img| img.to_color())
}

pub fn decode_any_bytes(bytes: &[u8]) -> Result<AnyRaster> {
    let reason = |reason: String| Error::Decode {
        path: memory_path(),
        reason,
    };
    if bytes.is_empty() {
        return Err(reason("empty input".into()));
    }
    if bytes[0] == b'P' && bytes.len() > 1 && matches!(bytes[1], b'2' | b'3' | b'5' | b'6') {
        return decode_netpbm(bytes).map_err(reason);
    }
    let img = image::load_from_memory(bytes).map_err(|e| reason(e.to_string()))?;
    let (w, h) = (img.width() as usize, img.height() as usize);
    if img.color().has_color() {
        Raster::new(w, h, img.to_rgb8().into_raw()).map(AnyRaster::Color)
    } else {
        GrayRaster::new(w, h, img.to_luma8().into_raw()).map(AnyRaster::Gray)
    }
    .map_err(|e| reason(e.to_string()))
}

struct Header<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Header<'_> {
    fn skip_space_and_comments(&mut self) {
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b'#' => {
                    while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                c if c.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn number(&mut self, what: &str) -> std::result::Result<usize, String> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(format!("missing {what}"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| format!("{what} out of range"))
    }
}

fn decode_netpbm(bytes: &[u8]) -> std::result::Result<AnyRaster, String> {
    let magic = bytes[1];
    let mut hdr = Header { bytes, pos: 2 };
    let width = hdr.number("width")?;
    let height = hdr.number("height")?;
    let maxval = hdr.number("maxval")?;
    if width == 0 || height == 0 {
        return Err(format!("empty image {width}x{height}"));
    }
    if !(1..=255).contains(&maxval) {
        return Err(format!("unsupported maxval {maxval} (8-bit only)"));
    }
    let channels = if matches!(magic, b'3' | b'6') { 3 } else { 1 };
    let count = width
        .checked_mul(height)
        .and_then(|n| n.checked_mul(channels))
        .ok_or("image dimensions overflow")?;

    let mut samples = Vec::with_capacity(count);
    if matches!(magic, b'5' | b'6') {
        // exactly one whitespace byte separates the header from the raster
        let start = hdr.pos + 1;
        if hdr.pos >= bytes.len() || !bytes[hdr.pos].is_ascii_whitespace() {
            return Err("truncated header".into());
        }
        let body = bytes.get(start..start + count).ok_or_else(|| {
            format!(
                "truncated raster: expected {count} bytes, found {}",
                bytes.len().saturating_sub(start)
            )
        })?;
        samples.extend_from_slice(body);
    } else {
        for _ in 0..count {
            let v = hdr
                .number("sample")
                .map_err(|_| "truncated raster".to_string())?;
            samples.push(u8::try_from(v).map_err(|_| format!("sample {v} exceeds maxval"))?);
        }
    }
    if let Some(&v) = samples.iter().find(|&&v| v as usize > maxval) {
        return Err(format!("sample {v} exceeds maxval {maxval}"));
    }
    if maxval != 255 {
        for v in &mut samples {
            *v = ((*v as usize * 255 + maxval / 2) / maxval) as u8;
        }
    }

    let err = |e: Error| e.to_string();
    if channels == 3 {
        Raster::new(width, height, samples)
            .map(AnyRaster::Color)
            .map_err(err)
    } else {
        GrayRaster::new(width, height, samples)
            .map(AnyRaster::Gray)
            .map_err(err)
    }
}

/// Encodes `img` into memory in the given format.
pub fn encode_bytes(img: &AnyRaster, format: ImageFormat) -> Result<Vec<u8>> {
    let (w, h) = img.dimensions();
    let reason = |reason: String| Error::Encode {
        path: memory_path(),
        reason,
    };
    let color = if img.channels() == 3 {
        ExtendedColorType::Rgb8
    } else {
        ExtendedColorType::L8
    };
    let mut out = Vec::new();
    match format {
        ImageFormat::Png => PngEncoder::new(Cursor::new(&mut out))
            .write_image(img.samples(), w as u32, h as u32, color)
            .map_err(|e| reason(e.to_string()))?,
        ImageFormat::Jpeg => JpegEncoder::new_with_quality(Cursor::new(&mut out), JPEG_QUALITY)
            .write_image(img.samples(), w as u32, h as u32, color)
            .map_err(|e| reason(e.to_string()))?,
        ImageFormat::Ppm => {
            let rgb = img.to_color();
            out.extend_from_slice(format!("P6\n{w} {h}\n255\n").as_bytes());
            out.extend_from_slice(rgb.data());
        }
        ImageFormat::Pgm => {
            out.extend_from_slice(format!("P5\n{w} {h}\n255\n").as_bytes());
            match img {
                AnyRaster::Color(c) => out.extend_from_slice(crate::raster::to_gray(c).data()),
                _ => out.extend_from_slice(img.samples()),
            }
        }
    }
    Ok(out)
}

/// Writes `img` to `path`, choosing the format from the extension. PNG and
/// NetPBM are lossless; JPEG uses quality 90.
pub fn encode_image(img: &AnyRaster, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let format = ImageFormat::from_path(path).ok_or_else(|| Error::Encode {
        path: path.to_path_buf(),
        reason: "unsupported extension (use .png, .jpg, .ppm or .pgm)".into(),
    })?;
    let bytes = encode_bytes(img, format).map_err(|e| match e {
        Error::Encode { reason, .. } => Error::Encode {
            path: path.to_path_buf(),
            reason,
        },
        other => other,
    })?;
    std::fs::write(path, bytes).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
