//! Legality checks for a smooth path against a scene.

use crate::geometry::Point;
use crate::path::{PathSegment, SmoothPath, MIN_TURN_RADIUS};
use crate::scene::{Scene, CLEARANCE_EPS};
use serde::Serialize;
use std::fmt;

/// Maximum spacing of clearance samples along a path.
pub const SAMPLE_STEP: f64 = 0.5;

/// Junction tolerances: endpoint gap and `1 - dot` of unit tangents.
pub const JUNCTION_GAP_TOL: f64 = 1e-6;
pub const TANGENCY_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Gap {
        junction: usize,
        gap: f64,
    },
    NotTangent {
        junction: usize,
        dot: f64,
    },
    Radius {
        segment: usize,
        radius: f64,
    },
    Clearance {
        segment: usize,
        obstacle: u32,
        clearance: f64,
        at: Option<Point>,
    },
    OutOfBounds {
        segment: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Gap { junction, gap } => {
                write!(f, "junction {junction}: endpoints {gap:.3e} apart")
            }
            Violation::NotTangent { junction, dot } => {
                write!(f, "junction {junction}: tangent dot product {dot:.12}")
            }
            Violation::Radius { segment, radius } => {
                write!(
                    f,
                    "segment {segment}: arc radius {radius} below {MIN_TURN_RADIUS}"
                )
            }
            Violation::Clearance {
                segment,
                obstacle,
                clearance,
                at,
            } => {
                write!(
                    f,
                    "segment {segment}: clearance {clearance:.6} to obstacle {obstacle}"
                )?;
                if let Some(p) = at {
                    write!(f, " at {p:.4}")?;
                }
                Ok(())
            }
            Violation::OutOfBounds { segment } => write!(f, "segment {segment}: leaves the scene"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Diagnostics {
    pub violations: Vec<Violation>,
    /// Smallest obstacle distance seen along the path.
    pub min_clearance: f64,
}

impl Diagnostics {
    pub fn is_legal(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks tangent continuity at every junction, arc radii, scene bounds and
/// clearance (exactly per segment and by sampling at [`SAMPLE_STEP`]).
pub fn validate_path(path: &SmoothPath, scene: &Scene) -> Diagnostics {
    let mut violations = Vec::new();

    for (j, pair) in path.segments.windows(2).enumerate() {
        let gap = pair[0].end().distance(pair[1].start());
        if gap > JUNCTION_GAP_TOL {
            violations.push(Violation::Gap { junction: j, gap });
        }
        let dot = pair[0].end_tangent().dot(pair[1].start_tangent());
        if 1.0 - dot > TANGENCY_TOL {
            violations.push(Violation::NotTangent { junction: j, dot });
        }
    }

    let required = scene.clearance() - CLEARANCE_EPS;
    let mut min_clearance = f64::INFINITY;
    for (i, seg) in path.segments.iter().enumerate() {
        let exact = match seg {
            PathSegment::Line { from, to } => {
                if !scene.contains_point(*from) || !scene.contains_point(*to) {
                    violations.push(Violation::OutOfBounds { segment: i });
                }
                scene.segment_clearance(*from, *to)
            }
            PathSegment::Arc { circle, .. } => {
                if circle.radius < MIN_TURN_RADIUS {
                    violations.push(Violation::Radius {
                        segment: i,
                        radius: circle.radius,
                    });
                }
                let span = seg.arc_span().expect("arc");
                if !scene.contains_arc(&span) {
                    violations.push(Violation::OutOfBounds { segment: i });
                }
                scene.arc_clearance(&span)
            }
        };
        if let Some((obstacle, clearance)) = exact {
            min_clearance = min_clearance.min(clearance);
            if clearance < required {
                violations.push(Violation::Clearance {
                    segment: i,
                    obstacle,
                    clearance,
                    at: None,
                });
                continue;
            }
        }
        // Sampled check, independent of the exact distance routines above.
        let n = ((seg.length() / SAMPLE_STEP).ceil() as usize).max(1);
        for k in 0..=n {
            let p = seg.point_at(k as f64 / n as f64);
            if let Some((obstacle, clearance)) = scene.nearest_obstacle(p) {
                min_clearance = min_clearance.min(clearance);
                if clearance < required {
                    violations.push(Violation::Clearance {
                        segment: i,
                        obstacle,
                        clearance,
                        at: Some(p),
                    });
                    break;
                }
            }
        }
    }

    Diagnostics {
        violations,
        min_clearance,
    }
}
