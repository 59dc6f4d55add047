//! Planar primitives and exact distance queries between points, segments
//! and circular arcs.

use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A point (or free vector) in scene units.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn from_angle(theta: f64) -> Self {
        Self::new(theta.cos(), theta.sin())
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn normalized(self) -> Point {
        self * (1.0 / self.norm())
    }

    /// Counterclockwise perpendicular.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        self + (other - self) * t
    }
}

impl From<[f64; 2]> for Point {
    fn from(v: [f64; 2]) -> Self {
        Point::new(v[0], v[1])
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "({:.*}, {:.*})", p, self.x, p, self.y),
            None => write!(f, "({}, {})", self.x, self.y),
        }
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Normalizes an angle into `[0, 2π)`.
pub fn wrap_tau(theta: f64) -> f64 {
    let w = theta.rem_euclid(TAU);
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// Signed area of a polygon (positive for counterclockwise order).
pub fn signed_area(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    (0..n)
        .map(|i| vertices[i].cross(vertices[(i + 1) % n]))
        .sum::<f64>()
        * 0.5
}

pub fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    p.distance(closest_on_segment(p, a, b))
}

pub fn closest_on_segment(p: Point, a: Point, b: Point) -> Point {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return a;
    }
    let t = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
    a + ab * t
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

fn on_segment(p: Point, a: Point, b: Point) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(a, c, d))
        || (d2 == 0.0 && on_segment(b, c, d))
        || (d3 == 0.0 && on_segment(c, a, b))
        || (d4 == 0.0 && on_segment(d, a, b))
}

pub fn segment_segment_distance(a: Point, b: Point, c: Point, d: Point) -> f64 {
    if segments_intersect(a, b, c, d) {
        return 0.0;
    }
    point_segment_distance(a, c, d)
        .min(point_segment_distance(b, c, d))
        .min(point_segment_distance(c, a, b))
        .min(point_segment_distance(d, a, b))
}

/// A circular arc starting at `start_angle` and sweeping `sweep` radians
/// (positive counterclockwise, negative clockwise).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArcSpan {
    pub center: Point,
    pub radius: f64,
    pub start_angle: f64,
    pub sweep: f64,
}

impl ArcSpan {
    pub fn point_at(&self, t: f64) -> Point {
        self.center + Point::from_angle(self.start_angle + self.sweep * t) * self.radius
    }

    pub fn start(&self) -> Point {
        self.point_at(0.0)
    }

    pub fn end(&self) -> Point {
        self.point_at(1.0)
    }

    pub fn length(&self) -> f64 {
        self.radius * self.sweep.abs()
    }

    /// Whether the direction `theta` (absolute angle) lies on the arc.
    pub fn contains_angle(&self, theta: f64) -> bool {
        if self.sweep.abs() >= TAU {
            return true;
        }
        let rel = if self.sweep >= 0.0 {
            wrap_tau(theta - self.start_angle)
        } else {
            wrap_tau(self.start_angle - theta)
        };
        rel <= self.sweep.abs()
    }

    pub fn distance_to_point(&self, p: Point) -> f64 {
        let v = p - self.center;
        let d = v.norm();
        let to_ends = p.distance(self.start()).min(p.distance(self.end()));
        if d == 0.0 {
            return self.radius;
        }
        if self.contains_angle(v.angle()) {
            (d - self.radius).abs().min(to_ends)
        } else {
            to_ends
        }
    }

    pub fn distance_to_segment(&self, a: Point, b: Point) -> f64 {
        let mut best = point_segment_distance(self.start(), a, b)
            .min(point_segment_distance(self.end(), a, b))
            .min(self.distance_to_point(a))
            .min(self.distance_to_point(b));

        let ab = b - a;
        let len_sq = ab.norm_sq();
        if len_sq == 0.0 {
            return best;
        }
        // Circle/segment crossings lying on the arc.
        let f = a - self.center;
        let bq = 2.0 * f.dot(ab);
        let cq = f.norm_sq() - self.radius * self.radius;
        let disc = bq * bq - 4.0 * len_sq * cq;
        if disc >= 0.0 {
            let sq = disc.sqrt();
            for t in [(-bq - sq) / (2.0 * len_sq), (-bq + sq) / (2.0 * len_sq)] {
                if (0.0..=1.0).contains(&t) {
                    let x = a + ab * t;
                    if self.contains_angle((x - self.center).angle()) {
                        return 0.0;
                    }
                }
            }
        }
        // Interior critical point along the common normal.
        let t = (-(f.dot(ab)) / len_sq).clamp(0.0, 1.0);
        let foot = a + ab * t;
        let v = foot - self.center;
        let d = v.norm();
        if d > 0.0 && self.contains_angle(v.angle()) {
            best = best.min((d - self.radius).abs());
        }
        best
    }

    /// Axis-aligned bounding box as (min, max).
    pub fn bounding_box(&self) -> (Point, Point) {
        let (s, e) = (self.start(), self.end());
        let mut lo = Point::new(s.x.min(e.x), s.y.min(e.y));
        let mut hi = Point::new(s.x.max(e.x), s.y.max(e.y));
        for k in 0..4 {
            let theta = k as f64 * PI / 2.0;
            if self.contains_angle(theta) {
                let p = self.center + Point::from_angle(theta) * self.radius;
                lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
                hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
            }
        }
        (lo, hi)
    }
}
