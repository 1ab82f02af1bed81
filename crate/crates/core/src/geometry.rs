//! Planar geometry for document rectification: convex hulls, minimum-area
//! rectangles, corner classification, four-point homographies and
//! perspective warping.
//!
//! Coordinates are image coordinates (x right, y down) in pixel-centre
//! convention: pixel `(i, j)` is centred on `(i as f64, j as f64)`.

use std::ops::{Add, Mul, Sub};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::raster::Samples;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Point2F {
    pub x: f64,
    pub y: f64,
}

impl Point2F {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2F { x, y }
    }

    pub fn dot(self, o: Point2F) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 2-D cross product.
    pub fn cross(self, o: Point2F) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, o: Point2F) -> f64 {
        (self - o).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2F {
    type Output = Point2F;
    fn add(self, o: Point2F) -> Point2F {
        Point2F::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2F {
    type Output = Point2F;
    fn sub(self, o: Point2F) -> Point2F {
        Point2F::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2F {
    type Output = Point2F;
    fn mul(self, s: f64) -> Point2F {
        Point2F::new(self.x * s, self.y * s)
    }
}

impl From<(f64, f64)> for Point2F {
    fn from((x, y): (f64, f64)) -> Self {
        Point2F::new(x, y)
    }
}

/// Twice the signed area of triangle `abc`; positive for a left turn.
fn orient(a: Point2F, b: Point2F, c: Point2F) -> f64 {
    (b - a).cross(c - a)
}

const MIN_TRIANGLE_AREA: f64 = 1e-9;

/// Four corners in top-left, top-right, bottom-left, bottom-right order.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Quad {
    pub tl: Point2F,
    pub tr: Point2F,
    pub bl: Point2F,
    pub br: Point2F,
}

impl Quad {
    /// Validates that the corners are finite, pairwise distinct and that no
    /// three of them are collinear.
    pub fn new(tl: Point2F, tr: Point2F, bl: Point2F, br: Point2F) -> Result<Self> {
        let q = Quad { tl, tr, bl, br };
        q.validate()?;
        Ok(q)
    }

    pub fn from_array([tl, tr, bl, br]: [Point2F; 4]) -> Result<Self> {
        Quad::new(tl, tr, bl, br)
    }

    /// Axis-aligned destination quad covering a `w × h` output image.
    pub fn output_rect(w: usize, h: usize) -> Result<Self> {
        let (r, b) = (w as f64 - 1.0, h as f64 - 1.0);
        Quad::new(
            Point2F::new(0.0, 0.0),
            Point2F::new(r, 0.0),
            Point2F::new(0.0, b),
            Point2F::new(r, b),
        )
    }

    pub fn corners(&self) -> [Point2F; 4] {
        [self.tl, self.tr, self.bl, self.br]
    }

    fn validate(&self) -> Result<()> {
        let c = self.corners();
        if c.iter().any(|p| !p.is_finite()) {
            return Err(Error::Geometry("non-finite quad corner".into()));
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if c[i] == c[j] {
                    return Err(Error::Geometry(format!(
                        "quad corners {i} and {j} coincide"
                    )));
                }
            }
        }
        for (a, b, d) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
            if orient(c[a], c[b], c[d]).abs() < MIN_TRIANGLE_AREA {
                return Err(Error::Geometry("three quad corners are collinear".into()));
            }
        }
        Ok(())
    }

    pub fn map(&self, f: impl Fn(Point2F) -> Point2F) -> Result<Quad> {
        Quad::new(f(self.tl), f(self.tr), f(self.bl), f(self.br))
    }
}

/// Convex hull with vertices in counter-clockwise order (positive shoelace
/// area), starting from the lowest-x, lowest-y point. Collinear boundary
/// points are dropped; fully collinear input yields its two extremes.
pub fn convex_hull(points: &[Point2F]) -> Vec<Point2F> {
    let mut pts: Vec<Point2F> = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }

    let mut lower: Vec<Point2F> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point2F> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// A rotated rectangle given by its corners in cyclic order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotatedRect {
    pub corners: [Point2F; 4],
    /// Length along the first edge direction.
    pub width: f64,
    pub height: f64,
    /// Angle of the first edge direction in degrees, in `[-180, 180]`.
    pub angle: f64,
}

impl RotatedRect {
    pub fn area(&self) -> f64 {
        self.width * self.height
    }

    pub fn center(&self) -> Point2F {
        (self.corners[0] + self.corners[2]) * 0.5
    }
}

/// Minimum-area enclosing rectangle.
///
/// Some optimal rectangle has a side collinear with a hull edge, so each
/// hull edge is tried as a caliper direction.
pub fn min_area_rect(points: &[Point2F]) -> Result<RotatedRect> {
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::Geometry("non-finite input point".into()));
    }
    let hull = convex_hull(points);
    if hull.len() < 3 {
        return Err(Error::Geometry(format!(
            "need 3 non-collinear points, hull has {}",
            hull.len()
        )));
    }

    let n = hull.len();
    let mut best: Option<(f64, Point2F, Point2F, [f64; 4])> = None;
    for i in 0..n {
        let edge = hull[(i + 1) % n] - hull[i];
        let len = edge.norm();
        if len == 0.0 {
            continue;
        }
        let u = edge * (1.0 / len);
        let v = Point2F::new(-u.y, u.x);
        let (mut lo_u, mut hi_u, mut lo_v, mut hi_v) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &p in &hull {
            let a = p.dot(u);
            let b = p.dot(v);
            lo_u = lo_u.min(a);
            hi_u = hi_u.max(a);
            lo_v = lo_v.min(b);
            hi_v = hi_v.max(b);
        }
        let area = (hi_u - lo_u) * (hi_v - lo_v);
        if best.is_none_or(|(a, ..)| area < a) {
            best = Some((area, u, v, [lo_u, hi_u, lo_v, hi_v]));
        }
    }

    let (_, u, v, [lo_u, hi_u, lo_v, hi_v]) = best.expect("hull has non-zero edges");
    let at = |a: f64, b: f64| u * a + v * b;
    Ok(RotatedRect {
        corners: [
            at(lo_u, lo_v),
            at(hi_u, lo_v),
            at(hi_u, hi_v),
            at(lo_u, hi_v),
        ],
        width: hi_u - lo_u,
        height: hi_v - lo_v,
        angle: u.y.atan2(u.x).to_degrees(),
    })
}

/// Classifies four unordered points into corners: top-left has the smallest
/// `x + y`, bottom-right the largest, top-right the smallest `y − x`, and
/// bottom-left the largest.
///
/// Fails with [`Error::AmbiguousCorners`] when an extreme is tied, one point
/// would take two roles, or the resulting quad is degenerate.
pub fn order_corners(points: [Point2F; 4]) -> Result<Quad> {
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::AmbiguousCorners("non-finite point".into()));
    }
    let sums = points.map(|p| p.x + p.y);
    let diffs = points.map(|p| p.y - p.x);

    let tl = unique_extreme(&sums, false, "top-left")?;
    let br = unique_extreme(&sums, true, "bottom-right")?;
    let tr = unique_extreme(&diffs, false, "top-right")?;
    let bl = unique_extreme(&diffs, true, "bottom-left")?;

    let mut roles = [tl, tr, bl, br];
    roles.sort_unstable();
    if roles != [0, 1, 2, 3] {
        return Err(Error::AmbiguousCorners(
            "a point qualifies for two corners".into(),
        ));
    }
    Quad::new(points[tl], points[tr], points[bl], points[br])
        .map_err(|e| Error::AmbiguousCorners(e.to_string()))
}

fn unique_extreme(keys: &[f64; 4], max: bool, role: &str) -> Result<usize> {
    let better = |a: f64, b: f64| if max { a > b } else { a < b };
    let mut idx = 0;
    for i in 1..4 {
        if better(keys[i], keys[idx]) {
            idx = i;
        }
    }
    if (0..4).any(|i| i != idx && keys[i] == keys[idx]) {
        return Err(Error::AmbiguousCorners(format!("tie for {role} corner")));
    }
    Ok(idx)
}

/// Output dimensions for rectifying `q`: the longer of each pair of opposite
/// edges, rounded, counted inclusively in pixels (corners sit on pixel
/// centres, so an edge of length `L` spans `L + 1` pixels).
pub fn output_size_for(q: &Quad) -> (usize, usize) {
    let w = q.tr.distance(q.tl).max(q.br.distance(q.bl));
    let h = q.bl.distance(q.tl).max(q.br.distance(q.tr));
    let side = |len: f64| {
        let r = len.round();
        if r.is_finite() && r >= 0.0 {
            r as usize + 1
        } else {
            1
        }
    };
    (side(w), side(h))
}

/// Projective map normalized so that `m[2][2] == 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Homography {
    m: [[f64; 3]; 3],
}

type Mat3 = [[f64; 3]; 3];

fn det3(m: &Mat3) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn adjugate(m: &Mat3) -> Mat3 {
    let c =
        |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    [
        [c(1, 2, 1, 2), -c(0, 2, 1, 2), c(0, 1, 1, 2)],
        [-c(1, 2, 0, 2), c(0, 2, 0, 2), -c(0, 1, 0, 2)],
        [c(1, 2, 0, 1), -c(0, 2, 0, 1), c(0, 1, 0, 1)],
    ]
}

fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn apply_mat(m: &Mat3, p: Point2F) -> Option<Point2F> {
    let w = m[2][0] * p.x + m[2][1] * p.y + m[2][2];
    if w == 0.0 || !w.is_finite() {
        return None;
    }
    Some(Point2F::new(
        (m[0][0] * p.x + m[0][1] * p.y + m[0][2]) / w,
        (m[1][0] * p.x + m[1][1] * p.y + m[1][2]) / w,
    ))
}

impl Homography {
    pub const IDENTITY: Homography = Homography {
        m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    };

    /// Normalizes `m` by its bottom-right entry and checks invertibility.
    pub fn from_matrix(m: Mat3) -> Result<Self> {
        let s = m[2][2];
        if s == 0.0 || !s.is_finite() {
            return Err(Error::Geometry("homography has zero scale entry".into()));
        }
        let m = m.map(|row| row.map(|v| v / s));
        if m.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::Geometry("non-finite homography".into()));
        }
        if det3(&m).abs() <= 1e-12 {
            return Err(Error::Geometry("singular homography".into()));
        }
        Ok(Homography { m })
    }

    pub fn translation(dx: f64, dy: f64) -> Self {
        Homography {
            m: [[1.0, 0.0, dx], [0.0, 1.0, dy], [0.0, 0.0, 1.0]],
        }
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    pub fn determinant(&self) -> f64 {
        det3(&self.m)
    }

    /// Maps a point; `None` if it lands on the line at infinity.
    pub fn apply(&self, p: Point2F) -> Option<Point2F> {
        apply_mat(&self.m, p)
    }

    pub fn inverse(&self) -> Result<Homography> {
        Homography::from_matrix(adjugate(&self.m))
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Homography) -> Result<Homography> {
        Homography::from_matrix(mat_mul(&self.m, &other.m))
    }
}

/// Solves the 8×8 direct linear transform for the map taking each corner of
/// `src` to the matching corner of `dst`.
pub fn compute_homography(src: &Quad, dst: &Quad) -> Result<Homography> {
    let mut a = [[0.0f64; 9]; 8];
    for (k, (s, d)) in src.corners().iter().zip(dst.corners()).enumerate() {
        a[2 * k] = [s.x, s.y, 1.0, 0.0, 0.0, 0.0, -d.x * s.x, -d.x * s.y, d.x];
        a[2 * k + 1] = [0.0, 0.0, 0.0, s.x, s.y, 1.0, -d.y * s.x, -d.y * s.y, d.y];
    }
    let h = solve8(a)?;
    Homography::from_matrix([[h[0], h[1], h[2]], [h[3], h[4], h[5]], [h[6], h[7], 1.0]])
}

/// Gaussian elimination with partial pivoting on an augmented 8×9 system.
fn solve8(mut a: [[f64; 9]; 8]) -> Result<[f64; 8]> {
    let scale = a
        .iter()
        .flat_map(|r| r[..8].iter())
        .fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return Err(Error::Geometry("degenerate correspondence".into()));
    }
    for col in 0..8 {
        let pivot = (col..8)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .expect("non-empty range");
        if a[pivot][col].abs() <= scale * 1e-12 {
            return Err(Error::Geometry("singular homography system".into()));
        }
        a.swap(col, pivot);
        for row in col + 1..8 {
            let f = a[row][col] / a[col][col];
            if f != 0.0 {
                let pivot_row = a[col];
                for (v, p) in a[row][col..].iter_mut().zip(&pivot_row[col..]) {
                    *v -= f * p;
                }
            }
        }
    }
    let mut x = [0.0; 8];
    for row in (0..8).rev() {
        let tail: f64 = (row + 1..8).map(|k| a[row][k] * x[k]).sum();
        x[row] = (a[row][8] - tail) / a[row][row];
    }
    Ok(x)
}

/// Resamples `img` so that output pixel `p` takes the input value at
/// `h⁻¹(p)`, using bilinear interpolation.
///
/// Each input pixel covers a unit square around its centre; sources outside
/// `[-0.5, W - 0.5] × [-0.5, H - 0.5]` are black.
pub fn warp_perspective<I: Samples>(img: &I, h: &Homography, out_w: usize, out_h: usize) -> I {
    let inv = adjugate(&h.m);
    let ch = I::CHANNELS;
    let (w, hgt) = img.dimensions();
    let src = img.samples();
    let (wf, hf) = (w as f64, hgt as f64);

    let mut out = vec![0u8; out_w * out_h * ch];
    out.par_chunks_mut(out_w * ch)
        .enumerate()
        .for_each(|(y, row)| {
            for x in 0..out_w {
                let Some(s) = apply_mat(&inv, Point2F::new(x as f64, y as f64)) else {
                    continue;
                };
                if !(s.x >= -0.5 && s.x <= wf - 0.5 && s.y >= -0.5 && s.y <= hf - 0.5) {
                    continue;
                }
                let sx = s.x.clamp(0.0, wf - 1.0);
                let sy = s.y.clamp(0.0, hf - 1.0);
                let x0 = sx.floor() as usize;
                let y0 = sy.floor() as usize;
                let x1 = (x0 + 1).min(w - 1);
                let y1 = (y0 + 1).min(hgt - 1);
                let fx = sx - x0 as f64;
                let fy = sy - y0 as f64;
                for c in 0..ch {
                    let at = |xx: usize, yy: usize| src[(yy * w + xx) * ch + c] as f64;
                    let top = at(x0, y0) + (at(x1, y0) - at(x0, y0)) * fx;
                    let bot = at(x0, y1) + (at(x1, y1) - at(x0, y1)) * fx;
                    let v = top + (bot - top) * fy;
                    row[x * ch + c] = v.round().clamp(0.0, 255.0) as u8;
                }
            }
        });
    I::from_samples(out_w, out_h, out).expect("output dimensions are non-zero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raster::GrayRaster;

    fn p(x: f64, y: f64) -> Point2F {
        Point2F::new(x, y)
    }

    #[test]
    fn hull_drops_interior_and_collinear() {
        let pts = [
            p(0., 0.),
            p(2., 0.),
            p(2., 2.),
            p(0., 2.),
            p(1., 1.),
            p(1., 0.),
        ];
        let hull = convex_hull(&pts);
        assert_eq!(hull, vec![p(0., 0.), p(2., 0.), p(2., 2.), p(0., 2.)]);
    }

    #[test]
    fn hull_degenerate_inputs() {
        assert_eq!(convex_hull(&[p(1., 1.)]), vec![p(1., 1.)]);
        assert_eq!(convex_hull(&[p(1., 1.), p(1., 1.)]), vec![p(1., 1.)]);
        let line = [p(3., 3.), p(0., 0.), p(1., 1.), p(2., 2.)];
        assert_eq!(convex_hull(&line), vec![p(0., 0.), p(3., 3.)]);
    }

    #[test]
    fn rect_of_axis_aligned_rectangle() {
        let pts = [p(2., 3.), p(12., 3.), p(12., 8.), p(2., 8.), p(5., 5.)];
        let r = min_area_rect(&pts).unwrap();
        assert!((r.area() - 50.0).abs() < 1e-6);
    }

    #[test]
    fn rect_of_rotated_square() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let pts = [p(0., 0.), p(s, s), p(0., 2. * s), p(-s, s)];
        let r = min_area_rect(&pts).unwrap();
        assert!((r.area() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn rect_rejects_collinear() {
        assert!(min_area_rect(&[p(0., 0.), p(1., 1.), p(2., 2.)]).is_err());
        assert!(min_area_rect(&[p(0., 0.)]).is_err());
    }

    #[test]
    fn order_corners_example() {
        let pts = [p(100., 12.), p(8., 95.), p(10., 10.), p(103., 98.)];
        let q = order_corners(pts).unwrap();
        assert_eq!(q.tl, p(10., 10.));
        assert_eq!(q.tr, p(100., 12.));
        assert_eq!(q.bl, p(8., 95.));
        assert_eq!(q.br, p(103., 98.));

        let square = [p(0., 0.), p(9., 0.), p(0., 9.), p(9., 9.)];
        assert_eq!(order_corners(square).unwrap().corners(), square);
    }

    #[test]
    fn order_corners_rejects_diamond() {
        let diamond = [p(50., 0.), p(100., 50.), p(50., 100.), p(0., 50.)];
        assert!(matches!(
            order_corners(diamond),
            Err(Error::AmbiguousCorners(_))
        ));
    }

    #[test]
    fn output_size_examples() {
        let axis = Quad::new(p(0., 0.), p(99., 0.), p(0., 59.), p(99., 59.)).unwrap();
        assert_eq!(output_size_for(&axis), (100, 60));

        let (c, s) = (45f64.to_radians().cos(), 45f64.to_radians().sin());
        let rot = |x: f64, y: f64| p(200. + x * c - y * s, 50. + x * s + y * c);
        let q = Quad::new(rot(0., 0.), rot(99., 0.), rot(0., 59.), rot(99., 59.)).unwrap();
        let (w, h) = output_size_for(&q);
        assert!(w.abs_diff(100) <= 1 && h.abs_diff(60) <= 1);

        let tiny = Quad::new(p(0., 0.), p(0.3, 0.), p(0., 0.3), p(0.3, 0.31)).unwrap();
        assert_eq!(output_size_for(&tiny), (1, 1));
    }

    #[test]
    fn homography_identity_and_translation() {
        let unit = Quad::new(p(0., 0.), p(1., 0.), p(0., 1.), p(1., 1.)).unwrap();
        let h = compute_homography(&unit, &unit).unwrap();
        for (a, b) in h
            .matrix()
            .iter()
            .flatten()
            .zip(Homography::IDENTITY.matrix().iter().flatten())
        {
            assert!((a - b).abs() < 1e-9);
        }

        let src = Quad::new(p(3., 4.), p(40., 6.), p(1., 33.), p(45., 39.)).unwrap();
        let dst = src.map(|q| q + p(5., 7.)).unwrap();
        let h = compute_homography(&src, &dst).unwrap();
        let expected = Homography::translation(5., 7.);
        for (a, b) in h
            .matrix()
            .iter()
            .flatten()
            .zip(expected.matrix().iter().flatten())
        {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn homography_rejects_degenerate_target() {
        let src = Quad::new(p(0., 0.), p(1., 0.), p(0., 1.), p(1., 1.)).unwrap();
        let collapsed = Quad {
            tl: p(0., 0.),
            tr: p(1., 1.),
            bl: p(2., 2.),
            br: p(3., 3.),
        };
        assert!(compute_homography(&src, &collapsed).is_err());
        assert!(Homography::from_matrix([[1., 2., 0.], [2., 4., 0.], [0., 0., 1.]]).is_err());
    }

    #[test]
    fn homography_inverse_and_compose() {
        let src = Quad::new(p(10., 12.), p(300., 20.), p(15., 200.), p(280., 240.)).unwrap();
        let dst = Quad::output_rect(301, 221).unwrap();
        let h = compute_homography(&src, &dst).unwrap();
        let round = h.inverse().unwrap().compose(&h).unwrap();
        for (a, b) in round
            .matrix()
            .iter()
            .flatten()
            .zip(Homography::IDENTITY.matrix().iter().flatten())
        {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn warp_identity_is_exact() {
        let img = GrayRaster::from_fn(13, 9, |x, y| (x * 19 + y * 7) as u8);
        assert_eq!(warp_perspective(&img, &Homography::IDENTITY, 13, 9), img);
    }

    #[test]
    fn warp_integer_translation() {
        let img = GrayRaster::from_fn(10, 8, |x, y| (1 + x * 20 + y) as u8);
        let out = warp_perspective(&img, &Homography::translation(3., -2.), 10, 8);
        for y in 0..8 {
            for x in 0..10 {
                let expected = if x >= 3 && y + 2 < 8 {
                    img.get(x - 3, y + 2)
                } else {
                    0
                };
                assert_eq!(out.get(x, y), expected, "({x},{y})");
            }
        }
    }
}
