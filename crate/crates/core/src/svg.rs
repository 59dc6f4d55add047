//! SVG drawing of a scene, its clearance envelopes and a path. Scene y runs
//! up; the drawing flips it so the picture reads the same way.

use crate::geometry::{ArcSpan, Point};
use crate::path::{PathSegment, SmoothPath};
use crate::scene::{inflate_scene, obstacle_vertices, EnvelopeRegion, ObstacleShape, Scene};
use std::f64::consts::PI;
use std::fmt::Write;

struct Canvas {
    height: f64,
}

impl Canvas {
    fn xy(&self, p: Point) -> String {
        format!("{:.4} {:.4}", p.x, self.height - p.y)
    }

    /// Arc command to the end of `span`. With y flipped, counterclockwise in
    /// scene coordinates is sweep-flag 0.
    fn arc_to(&self, span: &ArcSpan) -> String {
        let large = u8::from(span.sweep.abs() > PI);
        let sweep = u8::from(span.sweep < 0.0);
        format!(
            "A {r:.4} {r:.4} 0 {large} {sweep} {}",
            self.xy(span.end()),
            r = span.radius
        )
    }

    /// Full circle as two half arcs, which a single arc command cannot draw.
    fn circle_path(&self, center: Point, radius: f64) -> String {
        let a = center + Point::new(radius, 0.0);
        let b = center - Point::new(radius, 0.0);
        format!(
            "M {} A {r:.4} {r:.4} 0 1 0 {} A {r:.4} {r:.4} 0 1 0 {} Z",
            self.xy(a),
            self.xy(b),
            self.xy(a),
            r = radius
        )
    }
}

/// Drawing with one element per obstacle, per envelope region and per path
/// segment, each tagged by a class attribute.
pub fn render_svg(scene: &Scene, path: Option<&SmoothPath>) -> String {
    let (w, h) = scene.bounds();
    let canvas = Canvas { height: h };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}">"#
    );
    let _ = writeln!(
        out,
        r#"<style>.obstacle{{fill:#888}}.envelope{{fill:none;stroke:#c33;stroke-dasharray:4 3}}.line,.arc{{fill:none;stroke:#06c;stroke-width:2}}.arc{{stroke:#f80}}</style>"#
    );
    let _ = writeln!(
        out,
        r##"<rect class="bounds" x="0" y="0" width="{w}" height="{h}" fill="none" stroke="#000"/>"##
    );

    for spec in scene.obstacles() {
        match spec.shape {
            ObstacleShape::Circle { center, radius } => {
                let _ = writeln!(
                    out,
                    r#"<circle class="obstacle" data-id="{}" cx="{:.4}" cy="{:.4}" r="{:.4}"/>"#,
                    spec.id,
                    center.x,
                    h - center.y,
                    radius
                );
            }
            _ => {
                let pts: Vec<String> = obstacle_vertices(spec)
                    .expect("polygonal obstacle")
                    .into_iter()
                    .map(|p| format!("{:.4},{:.4}", p.x, h - p.y))
                    .collect();
                let _ = writeln!(
                    out,
                    r#"<polygon class="obstacle" data-id="{}" points="{}"/>"#,
                    spec.id,
                    pts.join(" ")
                );
            }
        }
    }

    for region in inflate_scene(scene) {
        let d = match &region {
            EnvelopeRegion::Circle { center, radius, .. } => canvas.circle_path(*center, *radius),
            EnvelopeRegion::Polygon {
                offset_edges,
                corner_arcs,
                ..
            } => {
                let mut d = format!("M {}", canvas.xy(corner_arcs[0].span().start()));
                for (arc, (_, b)) in corner_arcs.iter().zip(offset_edges) {
                    let _ = write!(d, " {} L {}", canvas.arc_to(&arc.span()), canvas.xy(*b));
                }
                d.push_str(" Z");
                d
            }
        };
        let _ = writeln!(
            out,
            r#"<path class="envelope" data-id="{}" d="{d}"/>"#,
            region.source()
        );
    }

    if let Some(path) = path {
        for (i, seg) in path.segments.iter().enumerate() {
            let (class, d) = match seg {
                PathSegment::Line { from, to } => (
                    "line",
                    format!("M {} L {}", canvas.xy(*from), canvas.xy(*to)),
                ),
                PathSegment::Arc { .. } => {
                    let span = seg.arc_span().expect("arc");
                    (
                        "arc",
                        format!("M {} {}", canvas.xy(span.start()), canvas.arc_to(&span)),
                    )
                }
            };
            let _ = writeln!(
                out,
                r#"<path class="{class}" data-segment="{}" d="{d}"/>"#,
                i + 1
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::builtin_scene;

    #[test]
    fn one_element_per_item() {
        let scene = builtin_scene();
        let path = SmoothPath::straight(Point::new(5.0, 5.0), Point::new(5.0, 50.0));
        let svg = render_svg(&scene, Some(&path));
        assert_eq!(svg.matches(r#"class="obstacle""#).count(), 12);
        assert_eq!(svg.matches(r#"class="envelope""#).count(), 12);
        assert_eq!(svg.matches(r#"class="line""#).count(), 1);
        assert!(svg.contains("M 5.0000 795.0000 L 5.0000 750.0000"));
    }
}
