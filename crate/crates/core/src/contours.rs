//! Outer border tracing of white regions in binary images.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::raster::BinaryRaster;

/// Integer pixel coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PixelPoint {
    pub x: i32,
    pub y: i32,
}

impl PixelPoint {
    pub const fn new(x: i32, y: i32) -> Self {
        PixelPoint { x, y }
    }
}

/// Closed boundary of one 8-connected white component.
///
/// Points are boundary pixel centres, each an 8-neighbour of the next, and
/// the last point neighbours the first. Traversal runs down the left side
/// first, i.e. counter-clockwise as displayed with y pointing down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contour {
    pub points: Vec<PixelPoint>,
}

impl Contour {
    pub fn new(points: Vec<PixelPoint>) -> Self {
        Contour { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Traced contours with their areas kept both as a list and as a map.
#[derive(Debug, Clone, Default)]
pub struct ContourSet {
    pub contours: Vec<Contour>,
    pub areas: Vec<f64>,
    pub area_by_index: BTreeMap<usize, f64>,
}

impl ContourSet {
    pub fn from_contours(contours: Vec<Contour>) -> Self {
        let areas: Vec<f64> = contours.iter().map(contour_area).collect();
        let area_by_index = areas.iter().copied().enumerate().collect();
        ContourSet {
            contours,
            areas,
            area_by_index,
        }
    }

    pub fn len(&self) -> usize {
        self.contours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.contours.is_empty()
    }
}

// Clockwise as displayed (y down), starting west.
const NEIGHBOURS: [(i32, i32); 8] = [
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, -1),
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
];

fn direction_of(from: PixelPoint, to: PixelPoint) -> usize {
    let d = (to.x - from.x, to.y - from.y);
    NEIGHBOURS
        .iter()
        .position(|&n| n == d)
        .expect("points are 8-neighbours")
}

struct Grid<'a> {
    img: &'a BinaryRaster,
    w: i32,
    h: i32,
}

impl Grid<'_> {
    fn white(&self, p: PixelPoint) -> bool {
        p.x >= 0
            && p.y >= 0
            && p.x < self.w
            && p.y < self.h
            && self.img.is_white(p.x as usize, p.y as usize)
    }

    fn step(p: PixelPoint, dir: usize) -> PixelPoint {
        let (dx, dy) = NEIGHBOURS[dir];
        PixelPoint::new(p.x + dx, p.y + dy)
    }

    /// Outer border following from `start`, whose west neighbour is background.
    fn trace(&self, start: PixelPoint) -> Vec<PixelPoint> {
        // Clockwise search from the west neighbour for the first white pixel.
        let first = (0..8)
            .map(|k| Self::step(start, k))
            .find(|&q| self.white(q));
        let Some(first) = first else {
            return vec![start];
        };

        let mut points = Vec::new();
        let mut prev = first;
        let mut cur = start;
        loop {
            // Counter-clockwise search around `cur`, beginning just after `prev`.
            let back = direction_of(cur, prev);
            let next = (1..=8)
                .map(|k| Self::step(cur, (back + 8 - k) % 8))
                .find(|&q| self.white(q))
                .expect("cur has at least one white neighbour");
            points.push(cur);
            if next == start && cur == first {
                break;
            }
            prev = cur;
            cur = next;
        }
        points
    }
}

/// Traces one outer contour per 8-connected white component, in raster
/// order of each component's first pixel. Holes are not traced.
pub fn find_external_contours(img: &BinaryRaster) -> ContourSet {
    let (w, h) = img.dimensions();
    let grid = Grid {
        img,
        w: w as i32,
        h: h as i32,
    };
    let mut seen = vec![false; w * h];
    let mut stack = Vec::new();
    let mut contours = Vec::new();

    for y in 0..h {
        for x in 0..w {
            if seen[y * w + x] || !img.is_white(x, y) {
                continue;
            }
            contours.push(Contour::new(
                grid.trace(PixelPoint::new(x as i32, y as i32)),
            ));

            // Mark the whole component so it is traced once.
            seen[y * w + x] = true;
            stack.push((x, y));
            while let Some((cx, cy)) = stack.pop() {
                for (dx, dy) in NEIGHBOURS {
                    let nx = cx as i32 + dx;
                    let ny = cy as i32 + dy;
                    if nx < 0 || ny < 0 || nx >= w as i32 || ny >= h as i32 {
                        continue;
                    }
                    let (nx, ny) = (nx as usize, ny as usize);
                    if !seen[ny * w + nx] && img.is_white(nx, ny) {
                        seen[ny * w + nx] = true;
                        stack.push((nx, ny));
                    }
                }
            }
        }
    }
    ContourSet::from_contours(contours)
}

/// Twice the signed shoelace area, exact in integers.
pub fn signed_area_x2(points: &[PixelPoint]) -> i64 {
    let n = points.len();
    (0..n)
        .map(|i| {
            let a = points[i];
            let b = points[(i + 1) % n];
            a.x as i64 * b.y as i64 - b.x as i64 * a.y as i64
        })
        .sum()
}

/// Absolute shoelace area of the closed polygon through the contour points.
pub fn contour_area(c: &Contour) -> f64 {
    signed_area_x2(&c.points).unsigned_abs() as f64 / 2.0
}

/// Index and contour of maximum area; ties go to the smallest index.
pub fn largest_contour(set: &ContourSet) -> Result<(usize, &Contour)> {
    let mut best: Option<usize> = None;
    for (i, &a) in set.areas.iter().enumerate() {
        if best.is_none_or(|b| a > set.areas[b]) {
            best = Some(i);
        }
    }
    best.map(|i| (i, &set.contours[i])).ok_or(Error::NoDocument)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pts: &[(i32, i32)]) -> Contour {
        Contour::new(pts.iter().map(|&(x, y)| PixelPoint::new(x, y)).collect())
    }

    fn set_with_areas(areas: &[f64]) -> ContourSet {
        ContourSet {
            contours: areas.iter().map(|_| poly(&[(0, 0)])).collect(),
            areas: areas.to_vec(),
            area_by_index: areas.iter().copied().enumerate().collect(),
        }
    }

    #[test]
    fn shoelace_examples() {
        assert_eq!(contour_area(&poly(&[(0, 0), (9, 0), (9, 9), (0, 9)])), 81.0);
        assert_eq!(contour_area(&poly(&[(0, 0), (4, 0), (0, 3)])), 6.0);
        assert_eq!(contour_area(&poly(&[(0, 0), (1, 1), (2, 2), (5, 5)])), 0.0);
        assert_eq!(contour_area(&poly(&[(3, 3)])), 0.0);
    }

    #[test]
    fn largest_picks_argmax_first() {
        assert_eq!(
            largest_contour(&set_with_areas(&[5.0, 81.0, 12.0]))
                .unwrap()
                .0,
            1
        );
        assert_eq!(largest_contour(&set_with_areas(&[3.0])).unwrap().0, 0);
        assert_eq!(
            largest_contour(&set_with_areas(&[10.0, 10.0])).unwrap().0,
            0
        );
        assert!(matches!(
            largest_contour(&ContourSet::default()),
            Err(Error::NoDocument)
        ));
    }

    #[test]
    fn black_image_has_no_contours() {
        let img = BinaryRaster::from_fn(8, 8, |_, _| false);
        assert!(find_external_contours(&img).is_empty());
    }

    #[test]
    fn single_pixel_and_line() {
        let img = BinaryRaster::from_fn(5, 5, |x, y| (x, y) == (2, 2));
        let set = find_external_contours(&img);
        assert_eq!(set.contours[0].points, vec![PixelPoint::new(2, 2)]);

        let img = BinaryRaster::from_fn(6, 3, |x, y| y == 1 && (1..5).contains(&x));
        let set = find_external_contours(&img);
        assert_eq!(set.len(), 1);
        let xs: Vec<i32> = set.contours[0].points.iter().map(|p| p.x).collect();
        assert_eq!(xs, vec![1, 2, 3, 4, 3, 2]);
        assert_eq!(set.areas[0], 0.0);
    }

    #[test]
    fn rectangle_trace_order() {
        let img = BinaryRaster::from_fn(6, 6, |x, y| (1..4).contains(&x) && (1..4).contains(&y));
        let set = find_external_contours(&img);
        let pts: Vec<(i32, i32)> = set.contours[0].points.iter().map(|p| (p.x, p.y)).collect();
        assert_eq!(
            pts,
            vec![
                (1, 1),
                (1, 2),
                (1, 3),
                (2, 3),
                (3, 3),
                (3, 2),
                (3, 1),
                (2, 1)
            ]
        );
        assert_eq!(set.areas[0], 4.0);
        assert_eq!(set.area_by_index[&0], 4.0);
    }

    #[test]
    fn ring_traces_outer_border_only() {
        let img = BinaryRaster::from_fn(12, 12, |x, y| {
            let inside = (2..10).contains(&x) && (2..10).contains(&y);
            let hole = (4..8).contains(&x) && (4..8).contains(&y);
            inside && !hole
        });
        let set = find_external_contours(&img);
        assert_eq!(set.len(), 1);
        assert_eq!(set.areas[0], 49.0);
    }

    #[test]
    fn frame_filling_component() {
        let img = BinaryRaster::from_fn(10, 7, |_, _| true);
        let set = find_external_contours(&img);
        assert_eq!(set.len(), 1);
        assert_eq!(set.areas[0], 54.0);
    }
}
