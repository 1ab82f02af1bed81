//! Synthetic scenes with known ground truth, for tests and benchmarks.

use rand::Rng;

use crate::geometry::{compute_homography, warp_perspective, Homography, Point2F, Quad};
use crate::raster::{BinaryRaster, GrayRaster, Raster, Samples};

/// Signed distance-free point-in-convex-polygon test; `poly` may wind
/// either way.
fn inside_convex(poly: &[Point2F], p: Point2F) -> bool {
    let mut sign = 0.0;
    for i in 0..poly.len() {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        let c = (b - a).cross(p - a);
        if c != 0.0 {
            if sign != 0.0 && c.signum() != sign {
                return false;
            }
            sign = c.signum();
        }
    }
    true
}

/// Renders a filled convex polygon (vertices in cyclic order) with 4×4
/// supersampling per pixel.
pub fn render_convex(width: usize, height: usize, poly: &[Point2F], fg: u8, bg: u8) -> Raster {
    const N: usize = 4;
    Raster::from_fn(width, height, |x, y| {
        let mut hits = 0usize;
        for j in 0..N {
            for i in 0..N {
                let sx = x as f64 - 0.5 + (i as f64 + 0.5) / N as f64;
                let sy = y as f64 - 0.5 + (j as f64 + 0.5) / N as f64;
                if inside_convex(poly, Point2F::new(sx, sy)) {
                    hits += 1;
                }
            }
        }
        let f = hits as f64 / (N * N) as f64;
        let v = (bg as f64 + (fg as f64 - bg as f64) * f).round() as u8;
        [v, v, v]
    })
}

/// Corners of a `w × h` rectangle centred on `center` and rotated by
/// `angle_deg`, as an ordered quad.
pub fn rotated_rect(center: Point2F, w: f64, h: f64, angle_deg: f64) -> Quad {
    let (s, c) = angle_deg.to_radians().sin_cos();
    let at =
        |dx: f64, dy: f64| Point2F::new(center.x + dx * c - dy * s, center.y + dx * s + dy * c);
    Quad::new(
        at(-w / 2.0, -h / 2.0),
        at(w / 2.0, -h / 2.0),
        at(-w / 2.0, h / 2.0),
        at(w / 2.0, h / 2.0),
    )
    .expect("positive-size rectangle")
}

/// A random convex quad within a 1000 px square, tilted at most 25°, whose
/// corners are each singled out by at least `margin` on the corner-ordering
/// keys `x + y` and `y − x`.
pub fn random_convex_quad(rng: &mut impl Rng, margin: f64) -> Quad {
    loop {
        let center = Point2F::new(
            rng.random_range(100.0..900.0),
            rng.random_range(100.0..900.0),
        );
        let (w, h) = (rng.random_range(40.0..400.0), rng.random_range(40.0..400.0));
        let (s, c) = rng.random_range(-25.0f64..25.0).to_radians().sin_cos();
        let mut corner = |dx: f64, dy: f64| {
            let dx = dx * (1.0 + rng.random_range(-0.15..0.15));
            let dy = dy * (1.0 + rng.random_range(-0.15..0.15));
            Point2F::new(center.x + dx * c - dy * s, center.y + dx * s + dy * c)
        };
        let (tl, tr) = (corner(-w / 2.0, -h / 2.0), corner(w / 2.0, -h / 2.0));
        let (bl, br) = (corner(-w / 2.0, h / 2.0), corner(w / 2.0, h / 2.0));

        let cyc = [tl, tr, br, bl];
        let convex = (0..4)
            .all(|i| (cyc[(i + 1) % 4] - cyc[i]).cross(cyc[(i + 2) % 4] - cyc[(i + 1) % 4]) > 0.0);
        let pts = [tl, tr, bl, br];
        let sums = pts.map(|p| p.x + p.y);
        let diffs = pts.map(|p| p.y - p.x);
        let lowest = |k: [f64; 4], i: usize| (0..4).all(|j| j == i || k[j] - k[i] >= margin);
        let highest = |k: [f64; 4], i: usize| (0..4).all(|j| j == i || k[i] - k[j] >= margin);
        if convex && lowest(sums, 0) && highest(sums, 3) && lowest(diffs, 1) && highest(diffs, 2) {
            if let Ok(q) = Quad::new(tl, tr, bl, br) {
                return q;
            }
        }
    }
}

/// A bright rotated rectangle on a dark field, with its true corners.
#[derive(Debug, Clone)]
pub struct QuadScene {
    pub image: Raster,
    pub truth: Quad,
}

/// Random scene: rotation within ±`max_angle` degrees and every corner at
/// least `margin` pixels inside the frame.
pub fn random_quad_scene(
    rng: &mut impl Rng,
    width: usize,
    height: usize,
    max_angle: f64,
    margin: f64,
) -> QuadScene {
    loop {
        let w = rng.random_range(0.3..0.8) * width as f64;
        let h = rng.random_range(0.3..0.8) * height as f64;
        let angle = rng.random_range(-max_angle..=max_angle);
        let center = Point2F::new(
            rng.random_range(0.3..0.7) * width as f64,
            rng.random_range(0.3..0.7) * height as f64,
        );
        let truth = rotated_rect(center, w, h, angle);
        let fits = truth.corners().iter().all(|p| {
            p.x >= margin
                && p.y >= margin
                && p.x <= width as f64 - 1.0 - margin
                && p.y <= height as f64 - 1.0 - margin
        });
        if !fits {
            continue;
        }
        let fg = rng.random_range(190..=250);
        let bg = rng.random_range(10..=60);
        let poly = [truth.tl, truth.tr, truth.br, truth.bl];
        return QuadScene {
            image: render_convex(width, height, &poly, fg, bg),
            truth,
        };
    }
}

/// Root-mean-square corner distance between two quads.
pub fn corner_rms(a: &Quad, b: &Quad) -> f64 {
    let sq: f64 = a
        .corners()
        .iter()
        .zip(b.corners())
        .map(|(p, q)| {
            let d = p.distance(q);
            d * d
        })
        .sum();
    (sq / 4.0).sqrt()
}

/// Page lighting for [`text_page`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Lighting {
    /// Uniform page brightness.
    Flat(u8),
    /// Page brightness rising linearly from left to right edge.
    Ramp { from: u8, to: u8 },
}

impl Lighting {
    fn level(self, x: usize, width: usize) -> f64 {
        match self {
            Lighting::Flat(v) => v as f64,
            Lighting::Ramp { from, to } => {
                let t = if width > 1 {
                    x as f64 / (width - 1) as f64
                } else {
                    0.0
                };
                from as f64 + (to as f64 - from as f64) * t
            }
        }
    }
}

/// A flat page of text-like ink bars, with the ink mask that generated it.
#[derive(Debug, Clone)]
pub struct TextPage {
    pub image: Raster,
    /// White where the page has ink.
    pub ink: GrayRaster,
}

/// Reflectance of ink relative to the lit page.
pub const INK_REFLECTANCE: f64 = 0.3;

/// Lines of word-like bars (8 px tall, 10–40 px long) with 20 px margins.
pub fn text_page(rng: &mut impl Rng, width: usize, height: usize, lighting: Lighting) -> TextPage {
    const MARGIN: usize = 20;
    const STROKE: usize = 8;
    const LINE_PITCH: usize = 24;
    let mut ink = vec![false; width * height];
    let mut y = MARGIN;
    while y + STROKE + MARGIN <= height {
        let mut x = MARGIN + rng.random_range(0..12);
        loop {
            let len = rng.random_range(10..=40);
            if x + len + MARGIN > width {
                break;
            }
            for yy in y..y + STROKE {
                for xx in x..x + len {
                    ink[yy * width + xx] = true;
                }
            }
            x += len + rng.random_range(6..=12);
        }
        y += LINE_PITCH;
    }
    let image = Raster::from_fn(width, height, |x, y| {
        let level = lighting.level(x, width);
        let v = if ink[y * width + x] {
            level * INK_REFLECTANCE
        } else {
            level
        };
        let v = v.round().clamp(0.0, 255.0) as u8;
        [v, v, v]
    });
    let ink = GrayRaster::from_fn(
        width,
        height,
        |x, y| if ink[y * width + x] { 255 } else { 0 },
    );
    TextPage { image, ink }
}

/// Places `page` into a `width × height` black scene through `page_to_scene`.
pub fn place_page(
    page: &Raster,
    page_to_scene: &Homography,
    width: usize,
    height: usize,
) -> Raster {
    warp_perspective(page, page_to_scene, width, height)
}

/// Similarity transform: rotate by `angle_deg` about the page origin, scale,
/// then translate.
pub fn similarity(angle_deg: f64, scale: f64, tx: f64, ty: f64) -> Homography {
    let (s, c) = angle_deg.to_radians().sin_cos();
    Homography::from_matrix([
        [scale * c, -scale * s, tx],
        [scale * s, scale * c, ty],
        [0.0, 0.0, 1.0],
    ])
    .expect("non-zero scale")
}

/// Fraction of pixels in a rectified scan of a placed [`TextPage`] whose
/// colour matches the page's ink mask (ink black, paper white).
///
/// Each output pixel is mapped back through the rectifying homography for
/// `detected` and then through the inverse of `page_to_scene`, and compared
/// with the nearest page pixel. Pixels that land off the page count as paper.
pub fn ink_agreement(
    bin: &BinaryRaster,
    detected: &Quad,
    page: &TextPage,
    page_to_scene: &Homography,
) -> f64 {
    let (w, h) = bin.dimensions();
    let (pw, ph) = (page.ink.width(), page.ink.height());
    let Some(back) = Quad::output_rect(w, h)
        .and_then(|dst| compute_homography(detected, &dst))
        .and_then(|scan| page_to_scene.inverse()?.compose(&scan.inverse()?))
        .ok()
    else {
        return 0.0;
    };
    let mut agree = 0usize;
    for y in 0..h {
        for x in 0..w {
            let Some(p) = back.apply(Point2F::new(x as f64, y as f64)) else {
                continue;
            };
            let (px, py) = (p.x.round(), p.y.round());
            let on_page = px >= 0.0 && py >= 0.0 && (px as usize) < pw && (py as usize) < ph;
            let ink = on_page && page.ink.get(px as usize, py as usize) == 255;
            if ink != bin.is_white(x, y) {
                agree += 1;
            }
        }
    }
    agree as f64 / (w * h) as f64
}
