//! Line-and-arc path representation.

use crate::geometry::{ArcSpan, Point};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Smallest arc radius the robot may turn on.
pub const MIN_TURN_RADIUS: f64 = 10.0;

/// Sense in which the robot travels around a turning circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TurnDirection {
    /// Counterclockwise: the circle center is on the robot's left.
    Ccw,
    /// Clockwise: the circle center is on the robot's right.
    Cw,
}

impl TurnDirection {
    pub fn sign(self) -> f64 {
        match self {
            TurnDirection::Ccw => 1.0,
            TurnDirection::Cw => -1.0,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            TurnDirection::Ccw => TurnDirection::Cw,
            TurnDirection::Cw => TurnDirection::Ccw,
        }
    }
}

impl fmt::Display for TurnDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TurnDirection::Ccw => "CCW",
            TurnDirection::Cw => "CW",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TurningCircle {
    pub center: Point,
    pub radius: f64,
    pub direction: TurnDirection,
}

impl TurningCircle {
    pub fn new(center: Point, radius: f64, direction: TurnDirection) -> Self {
        Self {
            center,
            radius,
            direction,
        }
    }

    pub fn ccw(center: Point, radius: f64) -> Self {
        Self::new(center, radius, TurnDirection::Ccw)
    }

    pub fn cw(center: Point, radius: f64) -> Self {
        Self::new(center, radius, TurnDirection::Cw)
    }

    pub fn flipped(self) -> Self {
        Self {
            direction: self.direction.flipped(),
            ..self
        }
    }

    pub fn point_at(&self, theta: f64) -> Point {
        self.center + Point::from_angle(theta) * self.radius
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum PathSegment {
    Line {
        from: Point,
        to: Point,
    },
    /// `end_angle - start_angle` is the signed sweep; its sign agrees with
    /// the circle's direction.
    Arc {
        circle: TurningCircle,
        start_angle: f64,
        end_angle: f64,
    },
}

impl PathSegment {
    pub fn start(&self) -> Point {
        match *self {
            PathSegment::Line { from, .. } => from,
            PathSegment::Arc {
                circle,
                start_angle,
                ..
            } => circle.point_at(start_angle),
        }
    }

    pub fn end(&self) -> Point {
        match *self {
            PathSegment::Line { to, .. } => to,
            PathSegment::Arc {
                circle, end_angle, ..
            } => circle.point_at(end_angle),
        }
    }

    pub fn length(&self) -> f64 {
        match *self {
            PathSegment::Line { from, to } => from.distance(to),
            PathSegment::Arc {
                circle,
                start_angle,
                end_angle,
            } => circle.radius * (end_angle - start_angle).abs(),
        }
    }

    pub fn is_arc(&self) -> bool {
        matches!(self, PathSegment::Arc { .. })
    }

    /// Unit direction of travel at the start of the segment.
    pub fn start_tangent(&self) -> Point {
        match *self {
            PathSegment::Line { from, to } => (to - from).normalized(),
            PathSegment::Arc {
                circle,
                start_angle,
                ..
            } => Point::from_angle(start_angle).perp() * circle.direction.sign(),
        }
    }

    pub fn end_tangent(&self) -> Point {
        match *self {
            PathSegment::Line { from, to } => (to - from).normalized(),
            PathSegment::Arc {
                circle, end_angle, ..
            } => Point::from_angle(end_angle).perp() * circle.direction.sign(),
        }
    }

    pub fn arc_span(&self) -> Option<ArcSpan> {
        match *self {
            PathSegment::Arc {
                circle,
                start_angle,
                end_angle,
            } => Some(ArcSpan {
                center: circle.center,
                radius: circle.radius,
                start_angle,
                sweep: end_angle - start_angle,
            }),
            PathSegment::Line { .. } => None,
        }
    }

    /// Point at fraction `t` in `[0, 1]` of the segment.
    pub fn point_at(&self, t: f64) -> Point {
        match *self {
            PathSegment::Line { from, to } => from.lerp(to, t),
            PathSegment::Arc {
                circle,
                start_angle,
                end_angle,
            } => circle.point_at(start_angle + (end_angle - start_angle) * t),
        }
    }

    pub fn reversed(&self) -> PathSegment {
        match *self {
            PathSegment::Line { from, to } => PathSegment::Line { from: to, to: from },
            PathSegment::Arc {
                circle,
                start_angle,
                end_angle,
            } => PathSegment::Arc {
                circle: circle.flipped(),
                start_angle: end_angle,
                end_angle: start_angle,
            },
        }
    }
}

/// A chain of segments where each one starts where the previous one ends.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SmoothPath {
    pub segments: Vec<PathSegment>,
}

impl SmoothPath {
    pub fn new(segments: Vec<PathSegment>) -> Self {
        Self { segments }
    }

    pub fn straight(from: Point, to: Point) -> Self {
        if from == to {
            Self::default()
        } else {
            Self::new(vec![PathSegment::Line { from, to }])
        }
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn length(&self) -> f64 {
        path_length(self)
    }

    pub fn start(&self) -> Option<Point> {
        self.segments.first().map(PathSegment::start)
    }

    pub fn end(&self) -> Option<Point> {
        self.segments.last().map(PathSegment::end)
    }

    pub fn arcs(&self) -> impl Iterator<Item = &PathSegment> {
        self.segments.iter().filter(|s| s.is_arc())
    }

    /// Points along the path no more than `step` apart, including every
    /// segment endpoint.
    pub fn sample(&self, step: f64) -> Vec<Point> {
        let mut out = Vec::new();
        for seg in &self.segments {
            let n = ((seg.length() / step).ceil() as usize).max(1);
            let first = if out.is_empty() { 0 } else { 1 };
            out.extend((first..=n).map(|i| seg.point_at(i as f64 / n as f64)));
        }
        out
    }

    pub fn reversed(&self) -> SmoothPath {
        SmoothPath::new(
            self.segments
                .iter()
                .rev()
                .map(PathSegment::reversed)
                .collect(),
        )
    }
}

/// Sum of line and arc lengths.
pub fn path_length(path: &SmoothPath) -> f64 {
    path.segments.iter().map(PathSegment::length).sum()
}
