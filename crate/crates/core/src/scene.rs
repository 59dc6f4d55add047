//! Scene model: convex obstacles, their clearance envelopes and clearance
//! queries for points, segments and arcs.

use crate::error::{Error, Result};
use crate::geometry::{
    point_segment_distance, segment_segment_distance, signed_area, wrap_tau, ArcSpan, Point,
};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Tolerance applied to every clearance comparison.
pub const CLEARANCE_EPS: f64 = 1e-9;

pub const DEFAULT_CLEARANCE: f64 = 10.0;
pub const DEFAULT_BOUNDS: (f64, f64) = (800.0, 800.0);

/// Obstacle parameters as they appear in the scene table. Polygon vertices
/// are derived from these by [`obstacle_vertices`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ObstacleShape {
    /// Axis-aligned rectangle; `length` runs along x, `width` along y.
    Rect {
        corner: Point,
        length: f64,
        width: f64,
    },
    Circle {
        center: Point,
        radius: f64,
    },
    Triangle {
        corner: Point,
        top: Point,
        lower_right: Point,
    },
    /// Bottom edge from `corner` with the given base length; the top edge is
    /// parallel and starts at `top_left`.
    Parallelogram {
        corner: Point,
        base: f64,
        top_left: Point,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObstacleSpec {
    pub id: u32,
    #[serde(flatten)]
    pub shape: ObstacleShape,
}

impl ObstacleSpec {
    pub fn new(id: u32, shape: ObstacleShape) -> Self {
        Self { id, shape }
    }

    pub fn is_circle(&self) -> bool {
        matches!(self.shape, ObstacleShape::Circle { .. })
    }
}

/// Counterclockwise vertex list of a polygonal obstacle.
pub fn obstacle_vertices(spec: &ObstacleSpec) -> Result<Vec<Point>> {
    let verts = match spec.shape {
        ObstacleShape::Rect {
            corner,
            length,
            width,
        } => vec![
            corner,
            corner + Point::new(length, 0.0),
            corner + Point::new(length, width),
            corner + Point::new(0.0, width),
        ],
        ObstacleShape::Triangle {
            corner,
            top,
            lower_right,
        } => vec![corner, lower_right, top],
        ObstacleShape::Parallelogram {
            corner,
            base,
            top_left,
        } => {
            let offset = Point::new(base, 0.0);
            vec![corner, corner + offset, top_left + offset, top_left]
        }
        ObstacleShape::Circle { .. } => return Err(Error::ShapeKind { id: spec.id }),
    };
    Ok(verts)
}

#[derive(Clone, Debug)]
enum Solid {
    Polygon(Vec<Point>),
    Disc { center: Point, radius: f64 },
}

impl Solid {
    fn contains(&self, p: Point) -> bool {
        match self {
            Solid::Polygon(v) => {
                let n = v.len();
                (0..n).all(|i| (v[(i + 1) % n] - v[i]).cross(p - v[i]) >= 0.0)
            }
            Solid::Disc { center, radius } => p.distance(*center) <= *radius,
        }
    }

    fn edges(v: &[Point]) -> impl Iterator<Item = (Point, Point)> + '_ {
        (0..v.len()).map(move |i| (v[i], v[(i + 1) % v.len()]))
    }

    fn distance_to_point(&self, p: Point) -> f64 {
        match self {
            Solid::Polygon(v) => {
                if self.contains(p) {
                    0.0
                } else {
                    Self::edges(v)
                        .map(|(a, b)| point_segment_distance(p, a, b))
                        .fold(f64::INFINITY, f64::min)
                }
            }
            Solid::Disc { center, radius } => (p.distance(*center) - radius).max(0.0),
        }
    }

    fn distance_to_segment(&self, a: Point, b: Point) -> f64 {
        match self {
            Solid::Polygon(v) => {
                if self.contains(a) || self.contains(b) {
                    0.0
                } else {
                    Self::edges(v)
                        .map(|(c, d)| segment_segment_distance(a, b, c, d))
                        .fold(f64::INFINITY, f64::min)
                }
            }
            Solid::Disc { center, radius } => {
                (point_segment_distance(*center, a, b) - radius).max(0.0)
            }
        }
    }

    fn distance_to_arc(&self, arc: &ArcSpan) -> f64 {
        match self {
            Solid::Polygon(v) => {
                if self.contains(arc.start()) {
                    0.0
                } else {
                    Self::edges(v)
                        .map(|(c, d)| arc.distance_to_segment(c, d))
                        .fold(f64::INFINITY, f64::min)
                }
            }
            Solid::Disc { center, radius } => (arc.distance_to_point(*center) - radius).max(0.0),
        }
    }
}

/// Obstacle field with a bounding rectangle `[0, w] x [0, h]` and a required
/// clearance distance.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "SceneFile", into = "SceneFile")]
pub struct Scene {
    bounds: (f64, f64),
    clearance: f64,
    obstacles: Vec<ObstacleSpec>,
    solids: Vec<Solid>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SceneFile {
    bounds: [f64; 2],
    clearance: f64,
    obstacles: Vec<ObstacleSpec>,
}

impl TryFrom<SceneFile> for Scene {
    type Error = Error;
    fn try_from(f: SceneFile) -> Result<Scene> {
        Scene::new((f.bounds[0], f.bounds[1]), f.clearance, f.obstacles)
    }
}

impl From<Scene> for SceneFile {
    fn from(s: Scene) -> Self {
        SceneFile {
            bounds: [s.bounds.0, s.bounds.1],
            clearance: s.clearance,
            obstacles: s.obstacles,
        }
    }
}

impl PartialEq for Scene {
    fn eq(&self, other: &Self) -> bool {
        self.bounds == other.bounds
            && self.clearance == other.clearance
            && self.obstacles == other.obstacles
    }
}

impl Scene {
    pub fn new(bounds: (f64, f64), clearance: f64, obstacles: Vec<ObstacleSpec>) -> Result<Self> {
        if !(bounds.0 > 0.0 && bounds.1 > 0.0 && bounds.0.is_finite() && bounds.1.is_finite()) {
            return Err(Error::InvalidScene(format!("bad bounds {bounds:?}")));
        }
        if !(clearance > 0.0 && clearance.is_finite()) {
            return Err(Error::InvalidScene(format!(
                "clearance must be positive, got {clearance}"
            )));
        }
        let mut solids = Vec::with_capacity(obstacles.len());
        for (k, spec) in obstacles.iter().enumerate() {
            if obstacles[..k].iter().any(|o| o.id == spec.id) {
                return Err(Error::InvalidScene(format!(
                    "duplicate obstacle id {}",
                    spec.id
                )));
            }
            let solid = match spec.shape {
                ObstacleShape::Circle { center, radius } => {
                    if !(radius > 0.0 && radius.is_finite() && center.is_finite()) {
                        return Err(Error::InvalidScene(format!(
                            "obstacle {}: radius must be positive",
                            spec.id
                        )));
                    }
                    Solid::Disc { center, radius }
                }
                _ => {
                    let v = obstacle_vertices(spec)?;
                    if v.iter().any(|p| !p.is_finite()) || !is_convex_ccw(&v) {
                        return Err(Error::InvalidScene(format!(
                            "obstacle {}: not a convex counterclockwise polygon",
                            spec.id
                        )));
                    }
                    Solid::Polygon(v)
                }
            };
            let (lo, hi) = match &solid {
                Solid::Polygon(v) => v.iter().fold(
                    (
                        Point::new(f64::MAX, f64::MAX),
                        Point::new(f64::MIN, f64::MIN),
                    ),
                    |(lo, hi), p| {
                        (
                            Point::new(lo.x.min(p.x), lo.y.min(p.y)),
                            Point::new(hi.x.max(p.x), hi.y.max(p.y)),
                        )
                    },
                ),
                Solid::Disc { center, radius } => (
                    *center - Point::new(*radius, *radius),
                    *center + Point::new(*radius, *radius),
                ),
            };
            if lo.x < 0.0 || lo.y < 0.0 || hi.x > bounds.0 || hi.y > bounds.1 {
                return Err(Error::InvalidScene(format!(
                    "obstacle {} extends outside the scene bounds",
                    spec.id
                )));
            }
            solids.push(solid);
        }
        Ok(Self {
            bounds,
            clearance,
            obstacles,
            solids,
        })
    }

    /// A scene with no obstacles.
    pub fn empty(bounds: (f64, f64), clearance: f64) -> Result<Self> {
        Self::new(bounds, clearance, Vec::new())
    }

    pub fn bounds(&self) -> (f64, f64) {
        self.bounds
    }

    pub fn clearance(&self) -> f64 {
        self.clearance
    }

    pub fn obstacles(&self) -> &[ObstacleSpec] {
        &self.obstacles
    }

    pub fn obstacle(&self, id: u32) -> Option<&ObstacleSpec> {
        self.obstacles.iter().find(|o| o.id == id)
    }

    pub fn from_json_str(source: &str) -> Result<Self> {
        serde_json::from_str(source).map_err(|e| Error::parse(source, e))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("scene serializes")
    }

    pub fn contains_point(&self, p: Point) -> bool {
        p.x >= 0.0 && p.y >= 0.0 && p.x <= self.bounds.0 && p.y <= self.bounds.1
    }

    pub fn contains_arc(&self, arc: &ArcSpan) -> bool {
        let (lo, hi) = arc.bounding_box();
        let slack = 1e-9;
        lo.x >= -slack
            && lo.y >= -slack
            && hi.x <= self.bounds.0 + slack
            && hi.y <= self.bounds.1 + slack
    }

    /// Distance from `p` to the nearest obstacle and that obstacle's id.
    pub fn nearest_obstacle(&self, p: Point) -> Option<(u32, f64)> {
        self.nearest_by(|s| s.distance_to_point(p))
    }

    /// Minimum distance from the segment `pq` to any obstacle, with the id of
    /// the closest one.
    pub fn segment_clearance(&self, p: Point, q: Point) -> Option<(u32, f64)> {
        self.nearest_by(|s| s.distance_to_segment(p, q))
    }

    pub fn arc_clearance(&self, arc: &ArcSpan) -> Option<(u32, f64)> {
        self.nearest_by(|s| s.distance_to_arc(arc))
    }

    pub fn arc_clear(&self, arc: &ArcSpan) -> bool {
        self.solids
            .iter()
            .all(|s| s.distance_to_arc(arc) >= self.clearance - CLEARANCE_EPS)
    }

    /// Ids of obstacles whose hazard zone the segment enters.
    pub fn blocking_obstacles(&self, p: Point, q: Point) -> Vec<u32> {
        self.obstacles
            .iter()
            .zip(&self.solids)
            .filter(|(_, s)| s.distance_to_segment(p, q) < self.clearance - CLEARANCE_EPS)
            .map(|(o, _)| o.id)
            .collect()
    }

    fn nearest_by(&self, f: impl Fn(&Solid) -> f64) -> Option<(u32, f64)> {
        self.obstacles
            .iter()
            .zip(&self.solids)
            .map(|(o, s)| (o.id, f(s)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
    }
}

fn is_convex_ccw(v: &[Point]) -> bool {
    let n = v.len();
    n >= 3
        && signed_area(v) > 0.0
        && (0..n).all(|i| (v[(i + 1) % n] - v[i]).cross(v[(i + 2) % n] - v[(i + 1) % n]) > 0.0)
}

/// The twelve-obstacle 800 x 800 benchmark scene with clearance 10.
pub fn builtin_scene() -> Scene {
    use ObstacleShape::*;
    let p = Point::new;
    let square = |x, y, side| Rect {
        corner: p(x, y),
        length: side,
        width: side,
    };
    let rect = |x, y, length, width| Rect {
        corner: p(x, y),
        length,
        width,
    };
    let shapes = vec![
        square(300.0, 400.0, 200.0),
        Circle {
            center: p(550.0, 450.0),
            radius: 70.0,
        },
        Parallelogram {
            corner: p(360.0, 240.0),
            base: 140.0,
            top_left: p(400.0, 330.0),
        },
        Triangle {
            corner: p(280.0, 100.0),
            top: p(345.0, 210.0),
            lower_right: p(410.0, 100.0),
        },
        square(80.0, 60.0, 150.0),
        Triangle {
            corner: p(60.0, 300.0),
            top: p(150.0, 435.0),
            lower_right: p(235.0, 300.0),
        },
        rect(0.0, 470.0, 220.0, 60.0),
        Parallelogram {
            corner: p(150.0, 600.0),
            base: 90.0,
            top_left: p(180.0, 680.0),
        },
        rect(370.0, 680.0, 60.0, 120.0),
        square(540.0, 600.0, 130.0),
        square(640.0, 520.0, 80.0),
        rect(500.0, 140.0, 300.0, 60.0),
    ];
    let obstacles = shapes
        .into_iter()
        .enumerate()
        .map(|(i, s)| ObstacleSpec::new(i as u32 + 1, s))
        .collect();
    Scene::new(DEFAULT_BOUNDS, DEFAULT_CLEARANCE, obstacles).expect("builtin scene is valid")
}

/// Distance from `p` to the nearest obstacle (0 inside an obstacle). Returns
/// infinity for an empty scene.
pub fn min_clearance(p: Point, scene: &Scene) -> f64 {
    scene.nearest_obstacle(p).map_or(f64::INFINITY, |(_, d)| d)
}

/// Whether every point of `pq` keeps at least the scene clearance.
pub fn segment_clear(p: Point, q: Point, scene: &Scene) -> bool {
    scene
        .solids
        .iter()
        .all(|s| s.distance_to_segment(p, q) >= scene.clearance - CLEARANCE_EPS)
}

/// Arc of an envelope corner, counterclockwise from `start_angle` to
/// `end_angle`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CornerArc {
    pub center: Point,
    pub radius: f64,
    pub start_angle: f64,
    pub end_angle: f64,
}

impl CornerArc {
    pub fn span(&self) -> ArcSpan {
        ArcSpan {
            center: self.center,
            radius: self.radius,
            start_angle: self.start_angle,
            sweep: self.end_angle - self.start_angle,
        }
    }
}

/// Boundary of the hazard zone around one obstacle.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum EnvelopeRegion {
    /// Offset polygon: `offset_edges[i]` is parallel to edge `v[i] -> v[i+1]`
    /// and `corner_arcs[i]` rounds vertex `v[i]`, joining the previous edge's
    /// offset to this one.
    Polygon {
        source: u32,
        offset_edges: Vec<(Point, Point)>,
        corner_arcs: Vec<CornerArc>,
    },
    Circle {
        source: u32,
        center: Point,
        radius: f64,
    },
}

impl EnvelopeRegion {
    pub fn source(&self) -> u32 {
        match self {
            EnvelopeRegion::Polygon { source, .. } | EnvelopeRegion::Circle { source, .. } => {
                *source
            }
        }
    }

    /// Enclosed area, integrated along the boundary.
    pub fn area(&self) -> f64 {
        match self {
            EnvelopeRegion::Circle { radius, .. } => std::f64::consts::PI * radius * radius,
            EnvelopeRegion::Polygon {
                offset_edges,
                corner_arcs,
                ..
            } => {
                let edges: f64 = offset_edges.iter().map(|(a, b)| a.cross(*b)).sum();
                let arcs: f64 = corner_arcs
                    .iter()
                    .map(|a| {
                        let (s, e) = (a.start_angle, a.end_angle);
                        a.radius * a.center.x * (e.sin() - s.sin())
                            - a.radius * a.center.y * (e.cos() - s.cos())
                            + a.radius * a.radius * (e - s)
                    })
                    .sum();
                0.5 * (edges + arcs)
            }
        }
    }

    /// Points spread along the boundary, at least `per_piece` per edge/arc.
    pub fn boundary_samples(&self, per_piece: usize) -> Vec<Point> {
        let n = per_piece.max(1);
        let ts = (0..=n).map(move |i| i as f64 / n as f64);
        match self {
            EnvelopeRegion::Circle { center, radius, .. } => ts
                .map(|t| *center + Point::from_angle(t * std::f64::consts::TAU) * *radius)
                .collect(),
            EnvelopeRegion::Polygon {
                offset_edges,
                corner_arcs,
                ..
            } => {
                let mut out = Vec::new();
                for (a, b) in offset_edges {
                    out.extend(ts.clone().map(|t| a.lerp(*b, t)));
                }
                for arc in corner_arcs {
                    let span = arc.span();
                    out.extend(ts.clone().map(|t| span.point_at(t)));
                }
                out
            }
        }
    }
}

/// Builds the clearance envelope of every obstacle.
pub fn inflate_scene(scene: &Scene) -> Vec<EnvelopeRegion> {
    let c = scene.clearance;
    scene
        .obstacles
        .iter()
        .zip(&scene.solids)
        .map(|(spec, solid)| match solid {
            Solid::Disc { center, radius } => EnvelopeRegion::Circle {
                source: spec.id,
                center: *center,
                radius: radius + c,
            },
            Solid::Polygon(v) => {
                let n = v.len();
                // Outward normal of a CCW edge is its clockwise perpendicular.
                let normal = |i: usize| -(v[(i + 1) % n] - v[i]).normalized().perp();
                let offset_edges = (0..n)
                    .map(|i| {
                        let off = normal(i) * c;
                        (v[i] + off, v[(i + 1) % n] + off)
                    })
                    .collect();
                let corner_arcs = (0..n)
                    .map(|i| {
                        let start = normal((i + n - 1) % n).angle();
                        let sweep = wrap_tau(normal(i).angle() - start);
                        CornerArc {
                            center: v[i],
                            radius: c,
                            start_angle: start,
                            end_angle: start + sweep,
                        }
                    })
                    .collect();
                EnvelopeRegion::Polygon {
                    source: spec.id,
                    offset_edges,
                    corner_arcs,
                }
            }
        })
        .collect()
}
