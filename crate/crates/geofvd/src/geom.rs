//! Planar primitives shared by every other module.
//!
//! Orientation uses the adaptively-exact predicate from the `robust` crate so
//! sign decisions are never wrong for representable inputs; all metric
//! comparisons go through [`Tolerance`].

use serde::{Deserialize, Serialize};

/// A point in the plane. Coordinates must be finite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite());
        Point { x, y }
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn dist2(self, other: Point) -> f64 {
        let d = self - other;
        d.x * d.x + d.y * d.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn scale(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }

    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        Point::new(self.x + (other.x - self.x) * t, self.y + (other.y - self.y) * t)
    }

    pub fn normalize(self) -> Point {
        let n = self.norm();
        if n == 0.0 {
            Point::new(0.0, 0.0)
        } else {
            self.scale(1.0 / n)
        }
    }
}

impl std::ops::Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

/// Comparison slack for metric decisions. Sign decisions never use it.
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { eps: 1e-9 }
    }
}

impl Tolerance {
    pub fn new(eps: f64) -> Self {
        assert!(eps > 0.0, "tolerance must be positive");
        Tolerance { eps }
    }
}

/// Sign of twice the signed area of triangle `pqr`: +1 counterclockwise,
/// -1 clockwise, 0 collinear. Exact for all representable inputs.
pub fn orient(p: Point, q: Point, r: Point) -> i8 {
    let v = robust::orient2d(
        robust::Coord { x: p.x, y: p.y },
        robust::Coord { x: q.x, y: q.y },
        robust::Coord { x: r.x, y: r.y },
    );
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        0
    }
}

/// Twice the signed area of triangle `pqr`, as a plain double.
pub fn cross2(p: Point, q: Point, r: Point) -> f64 {
    (q - p).cross(r - p)
}

/// Proper intersection point of segments `a1a2` and `b1b2`.
///
/// Returns `None` for disjoint, parallel, collinear or merely touching
/// configurations (endpoint contacts within `tol` do not count).
pub fn segment_intersection(
    a1: Point,
    a2: Point,
    b1: Point,
    b2: Point,
    tol: Tolerance,
) -> Option<Point> {
    let o1 = orient(a1, a2, b1);
    let o2 = orient(a1, a2, b2);
    let o3 = orient(b1, b2, a1);
    let o4 = orient(b1, b2, a2);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        let d1 = a2 - a1;
        let d2 = b2 - b1;
        let denom = d1.cross(d2);
        if denom == 0.0 {
            return None;
        }
        let t = (b1 - a1).cross(d2) / denom;
        let p = a1 + d1.scale(t);
        // Reject crossings that graze an endpoint of either segment.
        let near_end = p.dist(a1) <= tol.eps
            || p.dist(a2) <= tol.eps
            || p.dist(b1) <= tol.eps
            || p.dist(b2) <= tol.eps;
        if near_end {
            None
        } else {
            Some(p)
        }
    } else {
        None
    }
}

/// True when the closed segments share at least one point, including
/// endpoint and collinear-overlap contacts.
pub fn segments_touch(a1: Point, a2: Point, b1: Point, b2: Point) -> bool {
    let o1 = orient(a1, a2, b1);
    let o2 = orient(a1, a2, b2);
    let o3 = orient(b1, b2, a1);
    let o4 = orient(b1, b2, a2);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    let on = |p: Point, q: Point, r: Point| -> bool {
        orient(p, q, r) == 0
            && r.x >= p.x.min(q.x)
            && r.x <= p.x.max(q.x)
            && r.y >= p.y.min(q.y)
            && r.y <= p.y.max(q.y)
    };
    on(a1, a2, b1) || on(a1, a2, b2) || on(b1, b2, a1) || on(b1, b2, a2)
}

/// Squared distance from `p` to segment `ab`.
pub fn point_segment_dist2(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return p.dist2(a);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    p.dist2(a + ab.scale(t))
}

/// Where a point sits relative to a simple closed boundary chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointLocation {
    Inside,
    Boundary,
    Outside,
}

/// Ray-crossing classification with eps-snapping to the boundary.
pub fn point_in_simple_polygon(p: Point, boundary: &[Point], tol: Tolerance) -> PointLocation {
    let n = boundary.len();
    let eps2 = tol.eps * tol.eps;
    for i in 0..n {
        let a = boundary[i];
        let b = boundary[(i + 1) % n];
        if point_segment_dist2(p, a, b) <= eps2 {
            return PointLocation::Boundary;
        }
    }
    let mut inside = false;
    for i in 0..n {
        let a = boundary[i];
        let b = boundary[(i + 1) % n];
        if (a.y > p.y) != (b.y > p.y) {
            let x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if p.x < x_cross {
                inside = !inside;
            }
        }
    }
    if inside {
        PointLocation::Inside
    } else {
        PointLocation::Outside
    }
}

/// Shoelace area of a closed chain (positive when counterclockwise).
pub fn signed_area(chain: &[Point]) -> f64 {
    let n = chain.len();
    let mut s = 0.0;
    for i in 0..n {
        let a = chain[i];
        let b = chain[(i + 1) % n];
        s += a.cross(b);
    }
    s * 0.5
}

/// Axis-aligned bounding box.
#[derive(Debug, Clone, Copy)]
pub struct Bbox {
    pub min: Point,
    pub max: Point,
}

impl Bbox {
    pub fn empty() -> Self {
        Bbox {
            min: Point::new(f64::INFINITY, f64::INFINITY),
            max: Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    pub fn of(points: impl IntoIterator<Item = Point>) -> Self {
        let mut b = Bbox::empty();
        for p in points {
            b.add(p);
        }
        b
    }

    pub fn add(&mut self, p: Point) {
        self.min = Point::new(self.min.x.min(p.x), self.min.y.min(p.y));
        self.max = Point::new(self.max.x.max(p.x), self.max.y.max(p.y));
    }

    pub fn diagonal(&self) -> f64 {
        self.min.dist(self.max)
    }

    pub fn contains(&self, p: Point, slack: f64) -> bool {
        p.x >= self.min.x - slack
            && p.x <= self.max.x + slack
            && p.y >= self.min.y - slack
            && p.y <= self.max.y + slack
    }
}

/// A uniform grid bucketing items by bounding box, for local candidate queries.
#[derive(Debug, Clone)]
pub struct UniformGrid {
    bbox: Bbox,
    nx: usize,
    ny: usize,
    cell: f64,
    buckets: Vec<Vec<u32>>,
}

impl UniformGrid {
    pub fn new(bbox: Bbox, expected_items: usize) -> Self {
        let w = (bbox.max.x - bbox.min.x).max(1e-12);
        let h = (bbox.max.y - bbox.min.y).max(1e-12);
        let target = (expected_items.max(1) as f64).sqrt().ceil() as usize;
        let nx = target.clamp(1, 512);
        let ny = target.clamp(1, 512);
        let cell = (w / nx as f64).max(h / ny as f64);
        UniformGrid {
            bbox,
            nx,
            ny,
            cell,
            buckets: vec![Vec::new(); nx * ny],
        }
    }

    fn cell_of(&self, p: Point) -> (usize, usize) {
        let ix = ((p.x - self.bbox.min.x) / self.cell).floor() as isize;
        let iy = ((p.y - self.bbox.min.y) / self.cell).floor() as isize;
        (
            ix.clamp(0, self.nx as isize - 1) as usize,
            iy.clamp(0, self.ny as isize - 1) as usize,
        )
    }

    pub fn insert(&mut self, id: u32, bb: Bbox) {
        let (x0, y0) = self.cell_of(bb.min);
        let (x1, y1) = self.cell_of(bb.max);
        for y in y0..=y1 {
            for x in x0..=x1 {
                self.buckets[y * self.nx + x].push(id);
            }
        }
    }

    pub fn query(&self, bb: Bbox, out: &mut Vec<u32>) {
        out.clear();
        let (x0, y0) = self.cell_of(bb.min);
        let (x1, y1) = self.cell_of(bb.max);
        for y in y0..=y1 {
            for x in x0..=x1 {
                out.extend_from_slice(&self.buckets[y * self.nx + x]);
            }
        }
        if x1 > x0 || y1 > y0 {
            out.sort_unstable();
            out.dedup();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)), 1);
        assert_eq!(orient(p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0)), 0);
        assert_eq!(orient(p(0.0, 0.0), p(0.0, 1.0), p(1.0, 0.0)), -1);
    }

    #[test]
    fn orient_antisymmetric() {
        let mut rng = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            rng ^= rng << 13;
            rng ^= rng >> 7;
            rng ^= rng << 17;
            ((rng >> 11) as f64 / (1u64 << 53) as f64) * 100.0 - 50.0
        };
        for _ in 0..1000 {
            let a = p(next(), next());
            let b = p(next(), next());
            let c = p(next(), next());
            assert_eq!(orient(a, b, c), -orient(b, a, c));
            assert_eq!(orient(a, b, c), -orient(a, c, b));
            assert_eq!(orient(a, b, c), orient(b, c, a));
        }
    }

    #[test]
    fn orient_matches_exact_rational_on_integer_inputs() {
        use num_bigint::BigInt;
        let exact = |a: Point, b: Point, c: Point| -> i8 {
            let [ax, ay, bx, by, cx, cy] = [a.x, a.y, b.x, b.y, c.x, c.y]
                .map(|v| BigInt::from(v as i64));
            let det = (bx.clone() - ax.clone()) * (cy - ay.clone())
                - (by - ay) * (cx - ax);
            match det.sign() {
                num_bigint::Sign::Plus => 1,
                num_bigint::Sign::Minus => -1,
                num_bigint::Sign::NoSign => 0,
            }
        };
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next_int = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 40) as i64 % 1000) as f64
        };
        let mut zeros = 0;
        for _ in 0..5000 {
            let a = p(next_int(), next_int());
            let b = p(next_int(), next_int());
            // Force frequent collinear triples.
            let c = if next_int() as i64 % 3 == 0 {
                let t = (next_int() as i64 % 7) as f64;
                p(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)
            } else {
                p(next_int(), next_int())
            };
            if orient(a, b, c) == 0 {
                zeros += 1;
            }
            assert_eq!(orient(a, b, c), exact(a, b, c));
        }
        assert!(zeros > 100, "collinear cases should be exercised, got {zeros}");
    }

    #[test]
    fn segment_intersection_examples() {
        let tol = Tolerance::default();
        let x = segment_intersection(p(0.0, 0.0), p(2.0, 2.0), p(0.0, 2.0), p(2.0, 0.0), tol)
            .expect("symmetric cross");
        assert!(x.dist(p(1.0, 1.0)) < 1e-12);
        assert!(segment_intersection(p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0), p(3.0, 0.0), tol).is_none());
        assert!(segment_intersection(p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0), p(1.0, 1.0), tol).is_none());
    }

    #[test]
    fn segment_intersection_lies_on_both_segments() {
        let tol = Tolerance::default();
        let mut state = 42u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            (state >> 11) as f64 / (1u64 << 53) as f64 * 10.0
        };
        let mut hits = 0;
        for _ in 0..2000 {
            let (a1, a2) = (p(next(), next()), p(next(), next()));
            let (b1, b2) = (p(next(), next()), p(next(), next()));
            if let Some(x) = segment_intersection(a1, a2, b1, b2, tol) {
                hits += 1;
                assert!(point_segment_dist2(x, a1, a2).sqrt() <= tol.eps);
                assert!(point_segment_dist2(x, b1, b2).sqrt() <= tol.eps);
            }
        }
        assert!(hits > 100);
    }

    #[test]
    fn point_in_polygon_examples() {
        let sq = [p(0.0, 0.0), p(4.0, 0.0), p(4.0, 4.0), p(0.0, 4.0)];
        let tol = Tolerance::default();
        assert_eq!(point_in_simple_polygon(p(2.0, 2.0), &sq, tol), PointLocation::Inside);
        assert_eq!(point_in_simple_polygon(p(4.0, 2.0), &sq, tol), PointLocation::Boundary);
        assert_eq!(point_in_simple_polygon(p(5.0, 5.0), &sq, tol), PointLocation::Outside);
    }

    #[test]
    fn grid_query_finds_inserted_items() {
        let bb = Bbox::of([p(0.0, 0.0), p(10.0, 10.0)]);
        let mut g = UniformGrid::new(bb, 100);
        for i in 0..100u32 {
            let x = (i % 10) as f64;
            let y = (i / 10) as f64;
            g.insert(i, Bbox::of([p(x, y), p(x + 0.5, y + 0.5)]));
        }
        let mut out = Vec::new();
        g.query(Bbox::of([p(4.9, 4.9), p(5.1, 5.1)]), &mut out);
        assert!(out.contains(&44) || out.contains(&55) || out.contains(&45) || out.contains(&54));
    }
}
