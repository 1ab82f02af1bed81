//! Slow, obviously-correct reference computations used as test oracles.
//!
//! Everything here works on plain tuples and slices so that it shares no
//! code with the implementation under test.

use std::collections::VecDeque;

use num_bigint::BigUint;

pub type Pt = (f64, f64);

fn orient(a: Pt, b: Pt, c: Pt) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

/// Hull vertices by the all-pairs half-plane test, sorted lexicographically.
///
/// `(i, j)` is a hull edge when every other point lies on its left or on
/// the closed segment itself.
pub fn hull_vertices(points: &[Pt]) -> Vec<Pt> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut verts: Vec<Pt> = Vec::new();
    for i in 0..pts.len() {
        for j in 0..pts.len() {
            if i == j {
                continue;
            }
            let (a, b) = (pts[i], pts[j]);
            let edge = pts.iter().enumerate().all(|(k, &c)| {
                if k == i || k == j {
                    return true;
                }
                let o = orient(a, b, c);
                if o > 0.0 {
                    return true;
                }
                if o < 0.0 {
                    return false;
                }
                // collinear: must sit between a and b
                let t = (c.0 - a.0) * (b.0 - a.0) + (c.1 - a.1) * (b.1 - a.1);
                let len2 = (b.0 - a.0).powi(2) + (b.1 - a.1).powi(2);
                t > 0.0 && t < len2
            });
            if edge {
                verts.push(a);
                verts.push(b);
            }
        }
    }
    verts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    verts.dedup();
    verts
}

/// Smallest bounding-box area over rotations `0, step, 2·step, … < 90°`.
pub fn min_box_area_sweep(points: &[Pt], step_deg: f64) -> f64 {
    let mut best = f64::INFINITY;
    let steps = (90.0 / step_deg).ceil() as usize;
    for k in 0..steps {
        best = best.min(box_area_at(points, k as f64 * step_deg));
    }
    best
}

/// Area of the bounding box of `points` rotated by `angle_deg`.
pub fn box_area_at(points: &[Pt], angle_deg: f64) -> f64 {
    let (s, c) = angle_deg.to_radians().sin_cos();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in points {
        let u = x * c + y * s;
        let v = -x * s + y * c;
        x0 = x0.min(u);
        x1 = x1.max(u);
        y0 = y0.min(v);
        y1 = y1.max(v);
    }
    (x1 - x0) * (y1 - y0)
}

/// Exhaustive Otsu: for every `t`, class sums are recomputed from scratch and
/// the between-class variance `n0·n1·(μ0 − μ1)²` is compared exactly as a
/// rational. Lower class is `<= t`; ties keep the smallest `t`. A single
/// occupied level is returned as is.
pub fn otsu_exhaustive(hist: &[u64; 256]) -> u8 {
    let levels: Vec<usize> = (0..256).filter(|&i| hist[i] > 0).collect();
    if levels.len() == 1 {
        return levels[0] as u8;
    }
    // variance ∝ (s0·n1 − s1·n0)² / (n0·n1); store as (num, den)
    let mut best: Option<(BigUint, BigUint, u8)> = None;
    for t in 0..256usize {
        let (mut n0, mut s0, mut n1, mut s1) = (0u128, 0u128, 0u128, 0u128);
        for (v, &n) in hist.iter().enumerate() {
            if v <= t {
                n0 += n as u128;
                s0 += v as u128 * n as u128;
            } else {
                n1 += n as u128;
                s1 += v as u128 * n as u128;
            }
        }
        if n0 == 0 || n1 == 0 {
            continue;
        }
        let a = BigUint::from(s0) * BigUint::from(n1);
        let b = BigUint::from(s1) * BigUint::from(n0);
        let d = if a > b { a - b } else { b - a };
        let num = &d * &d;
        let den = BigUint::from(n0) * BigUint::from(n1);
        let better = match &best {
            None => true,
            Some((bn, bd, _)) => &num * bd > bn * &den,
        };
        if better {
            best = Some((num, den, t as u8));
        }
    }
    best.map(|b| b.2).unwrap_or(0)
}

/// Adaptive mean threshold by explicit window averaging in `f64`.
pub fn adaptive_mean_direct(data: &[u8], w: usize, h: usize, block: usize, c: u8) -> Vec<u8> {
    let r = (block / 2) as i64;
    let mut out = Vec::with_capacity(w * h);
    for y in 0..h as i64 {
        for x in 0..w as i64 {
            let (mut sum, mut n) = (0.0, 0.0);
            for yy in (y - r).max(0)..(y + r + 1).min(h as i64) {
                for xx in (x - r).max(0)..(x + r + 1).min(w as i64) {
                    sum += data[yy as usize * w + xx as usize] as f64;
                    n += 1.0;
                }
            }
            let v = data[y as usize * w + x as usize] as f64;
            out.push(if v > sum / n - c as f64 { 255 } else { 0 });
        }
    }
    out
}

/// Number of 8-connected components of `true` cells, by breadth-first fill.
pub fn count_components8(mask: &[bool], w: usize, h: usize) -> usize {
    let mut seen = vec![false; w * h];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for start in 0..w * h {
        if !mask[start] || seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        queue.push_back(start);
        while let Some(i) = queue.pop_front() {
            let (x, y) = ((i % w) as i64, (i / w) as i64);
            for dy in -1..=1 {
                for dx in -1..=1 {
                    let (nx, ny) = (x + dx, y + dy);
                    if nx < 0 || ny < 0 || nx >= w as i64 || ny >= h as i64 {
                        continue;
                    }
                    let j = ny as usize * w + nx as usize;
                    if mask[j] && !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
    }
    count
}

/// Mean absolute difference between two equally long sample buffers,
/// restricted to indices where `keep` is true.
pub fn masked_mad(a: &[u8], b: &[u8], keep: impl Fn(usize) -> bool) -> f64 {
    let (mut sum, mut n) = (0.0, 0usize);
    for i in 0..a.len().min(b.len()) {
        if keep(i) {
            sum += (a[i] as f64 - b[i] as f64).abs();
            n += 1;
        }
    }
    if n == 0 {
        0.0
    } else {
        sum / n as f64
    }
}
