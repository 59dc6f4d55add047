//! Independent geometry used as a test oracle. It shares nothing with the
//! library beyond `Point`: tangent points come from `acos` rotations picked
//! by a side test, equal-radius inner tangents go through the midpoint of
//! the centers, and arcs are measured with `atan2(cross, dot)`.
#![allow(dead_code)]

use arcroute::Point;
use std::f64::consts::TAU;

#[derive(Clone, Copy, Debug)]
pub struct Wrap {
    pub center: Point,
    pub radius: f64,
    /// +1 with the center on the left of travel, -1 on the right.
    pub side: f64,
}

impl Wrap {
    pub fn left(x: f64, y: f64, radius: f64) -> Self {
        Wrap {
            center: Point::new(x, y),
            radius,
            side: 1.0,
        }
    }

    pub fn right(x: f64, y: f64, radius: f64) -> Self {
        Wrap {
            center: Point::new(x, y),
            radius,
            side: -1.0,
        }
    }
}

fn rotate(v: Point, a: f64) -> Point {
    Point::new(v.x * a.cos() - v.y * a.sin(), v.x * a.sin() + v.y * a.cos())
}

fn cross(a: Point, b: Point) -> f64 {
    a.x * b.y - a.y * b.x
}

fn candidates(p: Point, w: &Wrap) -> [Point; 2] {
    let d = p - w.center;
    let len = (d.x * d.x + d.y * d.y).sqrt();
    let phi = (w.radius / len).acos();
    let u = Point::new(d.x / len, d.y / len);
    [
        w.center + rotate(u, phi) * w.radius,
        w.center + rotate(u, -phi) * w.radius,
    ]
}

/// Tangent point reached from `p` heading onto the circle.
pub fn onto(p: Point, w: &Wrap) -> Point {
    let [a, b] = candidates(p, w);
    if w.side * cross(a - p, w.center - a) > 0.0 {
        a
    } else {
        b
    }
}

/// Tangent point where the circle is left towards `q`.
pub fn off(w: &Wrap, q: Point) -> Point {
    let [a, b] = candidates(q, w);
    if w.side * cross(q - a, w.center - a) > 0.0 {
        a
    } else {
        b
    }
}

/// Tangent between two equal-radius circles, leaving `a`, joining `b`.
pub fn between(a: &Wrap, b: &Wrap) -> (Point, Point) {
    let delta = b.center - a.center;
    let len = (delta.x * delta.x + delta.y * delta.y).sqrt();
    let u = Point::new(delta.x / len, delta.y / len);
    if a.side == b.side {
        // Center on the left means the line runs on the circle's right.
        let normal = Point::new(u.y, -u.x) * (a.side * a.radius);
        (a.center + normal, b.center + normal)
    } else {
        let mid = Point::new(
            0.5 * (a.center.x + b.center.x),
            0.5 * (a.center.y + b.center.y),
        );
        (off(a, mid), onto(mid, b))
    }
}

/// Arc length from `p` to `q` turning with `w.side`.
pub fn arc(w: &Wrap, p: Point, q: Point) -> f64 {
    let (a, b) = (p - w.center, q - w.center);
    let mut theta = w.side * cross(a, b).atan2(a.x * b.x + a.y * b.y);
    if theta < 0.0 {
        theta += TAU;
    }
    if theta > TAU - 1e-12 {
        theta = 0.0;
    }
    w.radius * theta
}

/// Alternating line/arc lengths of the chained path and its tangent points.
pub fn chain(start: Point, wraps: &[Wrap], end: Point) -> (Vec<f64>, Vec<Point>) {
    if wraps.is_empty() {
        return (vec![start.distance(end)], Vec::new());
    }
    let mut rows = Vec::new();
    let mut points = Vec::new();
    let mut at = onto(start, &wraps[0]);
    rows.push(start.distance(at));
    points.push(at);
    for pair in wraps.windows(2) {
        let (leave, join) = between(&pair[0], &pair[1]);
        rows.push(arc(&pair[0], at, leave));
        rows.push(leave.distance(join));
        points.extend([leave, join]);
        at = join;
    }
    let last = wraps.last().unwrap();
    let exit = off(last, end);
    rows.push(arc(last, at, exit));
    rows.push(exit.distance(end));
    points.push(exit);
    (rows, points)
}

pub fn o_to_a() -> Vec<Wrap> {
    vec![Wrap::right(80.0, 210.0, 10.0)]
}

pub fn o_to_b() -> Vec<Wrap> {
    vec![
        Wrap::right(60.0, 300.0, 10.0),
        Wrap::right(150.0, 435.0, 10.0),
        Wrap::left(220.0, 470.0, 10.0),
        Wrap::left(220.0, 530.0, 10.0),
        Wrap::right(150.0, 600.0, 10.0),
    ]
}

/// Values produced by the oracle above, frozen.
pub const O_TO_A_TOTAL: f64 = 471.037239983679;
pub const O_TO_B_TOTAL: f64 = 853.700125800678;
pub const O_TO_B_ROWS: [f64; 11] = [
    305.777697028413,
    4.23298889181358,
    162.24980739588,
    7.77563311715221,
    75.6637297521078,
    13.6556591526279,
    60.0,
    9.88828903668531,
    96.9535971483266,
    6.1474370210717,
    111.3552872566,
];
