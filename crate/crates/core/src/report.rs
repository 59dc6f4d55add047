//! Plain-text and JSON reports for plans, colony runs and ranked candidates.
//!
//! Text output uses four decimals; JSON keeps full precision. Nothing here
//! depends on wall time, so identical inputs give identical bytes.

use crate::aco::AcoResult;
use crate::geometry::Point;
use crate::path::{PathSegment, SmoothPath, TurnDirection};
use crate::planner::{CandidatePath, EngineTrace, PlanResult};
use serde::Serialize;
use std::fmt::Write;

/// One row of a segment table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SegmentRow {
    /// One-based.
    pub no: usize,
    pub start: Point,
    pub end: Point,
    /// Arc center and direction; `None` for straight lines.
    pub arc: Option<(Point, TurnDirection)>,
    pub length: f64,
}

impl SegmentRow {
    pub fn describe(&self) -> String {
        match self.arc {
            None => "straight line".to_string(),
            Some((c, d)) => format!("arc about {c:.4} {d}"),
        }
    }
}

pub fn segment_rows(path: &SmoothPath) -> Vec<SegmentRow> {
    path.segments
        .iter()
        .enumerate()
        .map(|(i, seg)| SegmentRow {
            no: i + 1,
            start: seg.start(),
            end: seg.end(),
            arc: match seg {
                PathSegment::Arc { circle, .. } => Some((circle.center, circle.direction)),
                PathSegment::Line { .. } => None,
            },
            length: seg.length(),
        })
        .collect()
}

/// Human-readable result of one planning run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    /// `(key, value)` echo of the inputs, in order.
    pub inputs: Vec<(String, String)>,
    pub rows: Vec<SegmentRow>,
    pub total: f64,
    pub travel_time: f64,
    pub min_clearance: f64,
    pub trace: Vec<String>,
}

impl RunReport {
    pub fn for_plan(inputs: Vec<(String, String)>, result: &PlanResult) -> Self {
        let rows = segment_rows(&result.path);
        let total = rows.iter().map(|r| r.length).sum();
        let trace = match &result.trace {
            EngineTrace::Exact { tangent_links } => {
                vec![format!("engine exact, {tangent_links} tangent links")]
            }
            EngineTrace::Aco {
                roadmap_nodes,
                roadmap_route,
                roadmap_cost,
                colony,
            } => vec![
                format!("engine aco, {roadmap_nodes} roadmap nodes"),
                format!("chromosome {}", colony.best),
                format!("roadmap route {}", one_based(roadmap_route)),
                format!("roadmap cost {roadmap_cost:.4}"),
            ],
        };
        Self {
            inputs,
            rows,
            total,
            travel_time: result.travel_time,
            min_clearance: result.diagnostics.min_clearance,
            trace,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "{k}: {v}");
        }
        out.push('\n');
        let _ = writeln!(
            out,
            "{:<4}{:<24}{:<24}{:<36}{:>12}",
            "No", "Start", "End", "Type", "Length"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<4}{:<24}{:<24}{:<36}{:>12.4}",
                r.no,
                format!("{:.4}", r.start),
                format!("{:.4}", r.end),
                r.describe(),
                r.length
            );
        }
        let _ = writeln!(out, "Total length {:.4}", self.total);
        let _ = writeln!(out, "Travel time {:.4} s", self.travel_time);
        if self.min_clearance.is_finite() {
            let _ = writeln!(out, "Min clearance {:.4}", self.min_clearance);
        }
        for line in &self.trace {
            let _ = writeln!(out, "{line}");
        }
        out
    }
}

/// Full-precision machine-readable plan.
pub fn plan_json(result: &PlanResult) -> String {
    serde_json::to_string_pretty(result).expect("plan serializes")
}

fn one_based(nodes: &[usize]) -> String {
    nodes
        .iter()
        .map(|n| (n + 1).to_string())
        .collect::<Vec<_>>()
        .join(" -> ")
}

/// Summary of a colony run on a graph (nodes printed one-based).
pub fn aco_text(result: &AcoResult, seed: u64) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "seed: {seed}");
    let _ = writeln!(out, "chromosome: {}", result.best);
    let _ = writeln!(out, "route: {}", one_based(&result.nodes));
    let _ = writeln!(out, "cost: {:.4}", result.best_cost);
    let _ = writeln!(
        out,
        "generations: {}",
        result.best_curve.len().saturating_sub(1)
    );
    out
}

pub fn candidates_text(candidates: &[CandidatePath]) -> String {
    let mut out = String::new();
    for (rank, c) in candidates.iter().enumerate() {
        let corners: Vec<String> = c
            .corners
            .iter()
            .map(|p| format!("{:.4} {}", p.circle.center, p.circle.direction))
            .collect();
        let _ = writeln!(
            out,
            "{}  {:.4}  [{}]",
            rank + 1,
            c.length,
            corners.join(", ")
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planner::{plan_route, KnownTargets, RouteRequest};
    use crate::scene::builtin_scene;

    #[test]
    fn rows_sum_to_total() {
        let r = plan_route(
            &builtin_scene(),
            &RouteRequest::exact(KnownTargets::O, KnownTargets::B),
        )
        .unwrap();
        let report = RunReport::for_plan(Vec::new(), &r);
        assert_eq!(report.rows.len(), 11);
        assert!((report.total - r.length).abs() < 1e-9);
        assert!(report.to_text().contains("Total length 853.7001"));
    }
}
