//! Tangent constructions between points and turning circles, and chaining of
//! turning circles into a smooth path.

use crate::error::{Error, Result};
use crate::geometry::{wrap_tau, Point};
use crate::path::{PathSegment, SmoothPath, TurnDirection, TurningCircle};
use std::f64::consts::TAU;

/// Sweeps closer than this to zero or a full turn are treated as no arc.
const SWEEP_EPS: f64 = 1e-12;

/// Tolerance for accepting a point as lying on a circle.
pub const ON_CIRCLE_TOL: f64 = 1e-6;

/// Length of the tangent from `p` to a circle, or `None` if `p` is inside.
pub fn tangent_length(p: Point, center: Point, radius: f64) -> Option<f64> {
    let d_sq = (p - center).norm_sq();
    let r_sq = radius * radius;
    (d_sq >= r_sq).then(|| (d_sq - r_sq).sqrt())
}

/// Tangent point where a robot leaving `p` in a straight line joins
/// `circle` travelling in the circle's direction.
pub fn departure_tangent(p: Point, circle: &TurningCircle) -> Result<Point> {
    let to_center = circle.center - p;
    let dist = to_center.norm();
    let len = tangent_length(p, circle.center, circle.radius)
        .filter(|_| dist > 0.0)
        .ok_or(Error::Tangency {
            point: p,
            center: circle.center,
            radius: circle.radius,
        })?;
    let half = (circle.radius / dist).min(1.0).asin();
    let heading = to_center.angle() - circle.direction.sign() * half;
    Ok(p + Point::from_angle(heading) * len)
}

/// Tangent point where a robot travelling on `circle` leaves it in a
/// straight line towards `q`.
pub fn arrival_tangent(circle: &TurningCircle, q: Point) -> Result<Point> {
    departure_tangent(q, &circle.flipped())
}

/// Both tangent points from `p` to the circle: `[ccw, cw]` by the direction
/// a robot coming from `p` would then travel.
pub fn tangents_from_point(p: Point, center: Point, radius: f64) -> Result<[Point; 2]> {
    Ok([
        departure_tangent(p, &TurningCircle::ccw(center, radius))?,
        departure_tangent(p, &TurningCircle::cw(center, radius))?,
    ])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TangentKind {
    /// Does not cross the center line; joins circles turning the same way.
    Outer,
    /// Crosses the center line; reverses the turn direction.
    Inner,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CommonTangent {
    pub from: Point,
    pub to: Point,
    pub first: TurnDirection,
    pub second: TurnDirection,
    pub kind: TangentKind,
}

impl CommonTangent {
    pub fn length(&self) -> f64 {
        self.from.distance(self.to)
    }
}

/// Directed tangent leaving `a` (in its direction) and joining `b` (in its
/// direction). `None` when the circles overlap too much for it to exist.
pub fn directed_tangent(a: &TurningCircle, b: &TurningCircle) -> Option<(Point, Point)> {
    let delta = b.center - a.center;
    let dist = delta.norm();
    let sa = a.radius * a.direction.sign();
    let sb = b.radius * b.direction.sign();
    let k = sb - sa;
    if dist == 0.0 || dist < k.abs() {
        return None;
    }
    let len = (dist * dist - k * k).max(0.0).sqrt();
    let u = Point::from_angle(delta.angle() - k.atan2(len));
    let n = u.perp();
    Some((a.center - n * sa, b.center - n * sb))
}

/// All common tangents of two circles, one per direction pair that admits
/// one (up to four).
pub fn common_tangents(c1: Point, r1: f64, c2: Point, r2: f64) -> Result<Vec<CommonTangent>> {
    if c1 == c2 {
        return Err(Error::DegenerateCircles);
    }
    use TurnDirection::*;
    let mut out = Vec::with_capacity(4);
    for (first, second) in [(Ccw, Ccw), (Cw, Cw), (Ccw, Cw), (Cw, Ccw)] {
        let a = TurningCircle::new(c1, r1, first);
        let b = TurningCircle::new(c2, r2, second);
        if let Some((from, to)) = directed_tangent(&a, &b) {
            let kind = if first == second {
                TangentKind::Outer
            } else {
                TangentKind::Inner
            };
            out.push(CommonTangent {
                from,
                to,
                first,
                second,
                kind,
            });
        }
    }
    Ok(out)
}

/// Signed sweep (in the circle's direction) from angle `from` to `to`.
pub(crate) fn directed_sweep(direction: TurnDirection, from: f64, to: f64) -> f64 {
    let sweep = wrap_tau(direction.sign() * (to - from));
    if sweep < SWEEP_EPS || TAU - sweep < SWEEP_EPS {
        0.0
    } else {
        sweep
    }
}

/// Arc on `circle` from `p1` to `p2`, travelling in the circle's direction.
pub fn arc_between(circle: &TurningCircle, p1: Point, p2: Point) -> Result<PathSegment> {
    for p in [p1, p2] {
        let offset = p.distance(circle.center) - circle.radius;
        if offset.abs() > ON_CIRCLE_TOL {
            return Err(Error::OffCircle { point: p, offset });
        }
    }
    let a1 = (p1 - circle.center).angle();
    let sweep = directed_sweep(circle.direction, a1, (p2 - circle.center).angle());
    Ok(PathSegment::Arc {
        circle: *circle,
        start_angle: a1,
        end_angle: a1 + circle.direction.sign() * sweep,
    })
}

fn push_line(segments: &mut Vec<PathSegment>, from: Point, to: Point) {
    if from.distance(to) > SWEEP_EPS {
        segments.push(PathSegment::Line { from, to });
    }
}

fn push_arc(segments: &mut Vec<PathSegment>, circle: &TurningCircle, from: Point, to: Point) {
    let a1 = (from - circle.center).angle();
    let sweep = directed_sweep(circle.direction, a1, (to - circle.center).angle());
    if sweep > 0.0 {
        segments.push(PathSegment::Arc {
            circle: *circle,
            start_angle: a1,
            end_angle: a1 + circle.direction.sign() * sweep,
        });
    }
}

/// Joins `start`, each turning circle in order and `end` with tangent lines
/// and arcs. Consecutive circles with equal directions are joined by an
/// outer tangent, opposite directions by an inner one.
pub fn chain_path(start: Point, circles: &[TurningCircle], end: Point) -> Result<SmoothPath> {
    let Some(first) = circles.first() else {
        return Ok(SmoothPath::straight(start, end));
    };
    let mut segments = Vec::with_capacity(2 * circles.len() + 1);
    let mut entry = departure_tangent(start, first)?;
    push_line(&mut segments, start, entry);
    for (i, pair) in circles.windows(2).enumerate() {
        let (leave, join) = directed_tangent(&pair[0], &pair[1]).ok_or(Error::Chaining {
            index: i,
            first: pair[0].center,
            second: pair[1].center,
        })?;
        push_arc(&mut segments, &pair[0], entry, leave);
        push_line(&mut segments, leave, join);
        entry = join;
    }
    let last = circles.last().expect("non-empty");
    let exit = arrival_tangent(last, end)?;
    push_arc(&mut segments, last, entry, exit);
    push_line(&mut segments, exit, end);
    Ok(SmoothPath::new(segments))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, SQRT_2};

    #[test]
    fn tangent_length_at_r_sqrt2() {
        let r = 7.0;
        let p = Point::new(r * SQRT_2, 0.0);
        let [a, b] = tangents_from_point(p, Point::ORIGIN, r).unwrap();
        assert!((a.distance(p) - r).abs() < 1e-12);
        assert!((b.distance(p) - r).abs() < 1e-12);
    }

    #[test]
    fn point_inside_circle_is_rejected() {
        let c = TurningCircle::ccw(Point::ORIGIN, 10.0);
        assert!(matches!(
            departure_tangent(Point::new(3.0, 0.0), &c),
            Err(Error::Tangency { .. })
        ));
    }

    #[test]
    fn concentric_circles_have_no_tangents() {
        assert!(matches!(
            common_tangents(Point::ORIGIN, 10.0, Point::ORIGIN, 10.0),
            Err(Error::DegenerateCircles)
        ));
    }

    #[test]
    fn touching_circles_share_inner_tangent_point() {
        let t = common_tangents(Point::ORIGIN, 10.0, Point::new(20.0, 0.0), 10.0).unwrap();
        let inner: Vec<_> = t.iter().filter(|t| t.kind == TangentKind::Inner).collect();
        assert_eq!(inner.len(), 2);
        for t in inner {
            assert!(t.length() < 1e-9);
            assert!(t.from.distance(Point::new(10.0, 0.0)) < 1e-9);
        }
    }

    #[test]
    fn overlapping_circles_only_outer() {
        let t = common_tangents(Point::ORIGIN, 10.0, Point::new(15.0, 0.0), 10.0).unwrap();
        assert_eq!(t.len(), 2);
        assert!(t.iter().all(|t| t.kind == TangentKind::Outer));
    }

    #[test]
    fn diameter_arc_is_half_circle() {
        let c = TurningCircle::ccw(Point::ORIGIN, 10.0);
        let arc = arc_between(&c, Point::new(10.0, 0.0), Point::new(-10.0, 0.0)).unwrap();
        assert!((arc.length() - 10.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn off_circle_points_are_rejected() {
        let c = TurningCircle::ccw(Point::ORIGIN, 10.0);
        assert!(matches!(
            arc_between(&c, Point::new(10.1, 0.0), Point::new(0.0, 10.0)),
            Err(Error::OffCircle { .. })
        ));
    }

    #[test]
    fn empty_chain_is_straight() {
        let p = chain_path(Point::ORIGIN, &[], Point::new(3.0, 4.0)).unwrap();
        assert_eq!(p.segments.len(), 1);
        assert_eq!(p.length(), 5.0);
    }

    #[test]
    fn chain_reports_failing_pair() {
        let circles = [
            TurningCircle::ccw(Point::new(0.0, 50.0), 10.0),
            TurningCircle::cw(Point::new(15.0, 50.0), 10.0),
        ];
        match chain_path(Point::ORIGIN, &circles, Point::new(100.0, 0.0)) {
            Err(Error::Chaining { index, .. }) => assert_eq!(index, 0),
            other => panic!("expected chaining error, got {other:?}"),
        }
    }
}
