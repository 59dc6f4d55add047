//! Fixture verification: replans the reference routes, reruns the reference
//! corner and colony problems, and compares against the expectations stored
//! in the fixture directory.

use crate::aco::{aco_run, AcoParams, Chromosome};
use crate::corner::{solve_corner, CornerProblem};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::graph::{dijkstra_shortest, WeightedGraph};
use crate::planner::{build_roadmap, plan_route, KnownTargets, RoadmapNode, RouteRequest};
use crate::report::segment_rows;
use crate::scene::{builtin_scene, Scene};
use crate::speed::max_turn_speed;
use serde::Deserialize;
use std::fmt;
use std::path::{Path, PathBuf};

/// Environment variable overriding the fixture directory.
pub const FIXTURES_ENV: &str = "ARCROUTE_FIXTURES";

pub fn fixtures_dir() -> PathBuf {
    std::env::var_os(FIXTURES_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

fn check(name: impl Into<String>, passed: bool, detail: String) -> Check {
    Check {
        name: name.into(),
        passed,
        detail,
    }
}

fn near(name: String, actual: f64, expected: f64, tol: f64) -> Check {
    let diff = (actual - expected).abs();
    check(
        name,
        diff <= tol,
        format!("{actual:.6} vs {expected} (|diff| {diff:.2e}, tol {tol:.0e})"),
    )
}

fn near_point(name: String, actual: Point, expected: Point, tol: f64) -> Check {
    let diff = actual.distance(expected);
    check(
        name,
        diff <= tol,
        format!("{actual:.4} vs {expected} (dist {diff:.2e}, tol {tol:.0e})"),
    )
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RowFixture {
    start: Point,
    end: Point,
    center: Option<Point>,
    /// Printed value.
    length: f64,
    /// Recomputed from the printed geometry.
    oracle_length: f64,
    /// The printed length disagrees with its own geometry.
    #[serde(default)]
    erratum: bool,
}

/// Expected route between two named points.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PathFixture {
    label: String,
    from: String,
    to: String,
    total: f64,
    total_tolerance: f64,
    oracle_total: f64,
    oracle_tolerance: f64,
    point_tolerance: f64,
    row_tolerance: f64,
    max_seconds: f64,
    rows: Vec<RowFixture>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CornerFixture {
    label: String,
    start: Point,
    end: Point,
    center: Point,
    radius: f64,
    length: f64,
    tolerance: f64,
    reference_length: f64,
    reference_tolerance: f64,
    first_segment: f64,
    first_segment_tolerance: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ColonyFixture {
    graph: String,
    /// One-based.
    expected_route: Vec<usize>,
    expected_cost: f64,
    expected_chromosome: String,
    ants: usize,
    generations: usize,
    global_transfer: f64,
    evaporation: f64,
    seeds: Vec<u64>,
    min_successes: usize,
}

fn read<T: for<'de> Deserialize<'de>>(dir: &Path, name: &str) -> Result<T> {
    let source = std::fs::read_to_string(dir.join(name))?;
    serde_json::from_str(&source).map_err(|e| Error::parse(&source, e))
}

fn target(name: &str) -> Result<Point> {
    KnownTargets::named(name).ok_or_else(|| Error::InvalidRequest(format!("unknown target {name}")))
}

fn verify_path(
    scene: &Scene,
    fx: &PathFixture,
    tolerance: Option<f64>,
    out: &mut Vec<Check>,
) -> Result<()> {
    let (from, to) = (target(&fx.from)?, target(&fx.to)?);
    let label = &fx.label;
    let timer = std::time::Instant::now();
    let plan = plan_route(scene, &RouteRequest::exact(from, to));
    let seconds = timer.elapsed().as_secs_f64();
    let plan = match plan {
        Ok(p) => p,
        Err(e) => {
            out.push(check(format!("{label} plan"), false, e.to_string()));
            return Ok(());
        }
    };
    let total_tol = tolerance.unwrap_or(fx.total_tolerance);
    let point_tol = tolerance.unwrap_or(fx.point_tolerance);
    out.push(near(
        format!("{label} total vs printed"),
        plan.length,
        fx.total,
        total_tol,
    ));
    out.push(near(
        format!("{label} total vs chain oracle"),
        plan.length,
        fx.oracle_total,
        fx.oracle_tolerance,
    ));
    out.push(check(
        format!("{label} runtime"),
        seconds < fx.max_seconds,
        format!("under {} s", fx.max_seconds),
    ));
    out.push(check(
        format!("{label} legal"),
        plan.diagnostics.is_legal(),
        format!("{} violations", plan.diagnostics.violations.len()),
    ));

    let rows = segment_rows(&plan.path);
    out.push(check(
        format!("{label} segment count"),
        rows.len() == fx.rows.len(),
        format!("{} vs {}", rows.len(), fx.rows.len()),
    ));
    for (i, (row, want)) in rows.iter().zip(&fx.rows).enumerate() {
        let no = i + 1;
        out.push(near_point(
            format!("{label} row {no} start"),
            row.start,
            want.start,
            point_tol,
        ));
        out.push(near_point(
            format!("{label} row {no} end"),
            row.end,
            want.end,
            point_tol,
        ));
        match (row.arc, want.center) {
            (Some((c, _)), Some(w)) => {
                out.push(near_point(format!("{label} row {no} center"), c, w, 1e-9))
            }
            (None, None) => {}
            _ => out.push(check(
                format!("{label} row {no} type"),
                false,
                "line/arc mismatch".into(),
            )),
        }
        out.push(near(
            format!("{label} row {no} vs oracle"),
            row.length,
            want.oracle_length,
            fx.oracle_tolerance,
        ));
        if !want.erratum {
            out.push(near(
                format!("{label} row {no} vs printed"),
                row.length,
                want.length,
                fx.row_tolerance,
            ));
        }
    }

    let roadmap = build_roadmap(scene, from, to)?;
    for c in fx.rows.iter().filter_map(|r| r.center) {
        let found = roadmap
            .nodes
            .iter()
            .any(|n| matches!(n, RoadmapNode::Corner { center, .. } if *center == c));
        out.push(check(
            format!("{label} roadmap has corner {c}"),
            found,
            String::new(),
        ));
    }
    Ok(())
}

fn verify_corner(fx: &CornerFixture, out: &mut Vec<Check>) {
    let prob = CornerProblem::new(fx.start, fx.end, fx.center, fx.radius);
    let label = &fx.label;
    match solve_corner(&prob) {
        Ok(sol) => {
            out.push(near(
                format!("{label} length vs printed"),
                sol.length,
                fx.length,
                fx.tolerance,
            ));
            out.push(near(
                format!("{label} length vs reference"),
                sol.length,
                fx.reference_length,
                fx.reference_tolerance,
            ));
            let first = sol.path.segments.first().map_or(0.0, |s| s.length());
            out.push(near(
                format!("{label} first segment"),
                first,
                fx.first_segment,
                fx.first_segment_tolerance,
            ));
        }
        Err(e) => out.push(check(format!("{label} solve"), false, e.to_string())),
    }
}

fn verify_colony(dir: &Path, fx: &ColonyFixture, out: &mut Vec<Check>) -> Result<()> {
    let g = WeightedGraph::load(dir.join(&fx.graph))?;
    let last = g.node_count() - 1;
    let expected_route: Vec<usize> = fx.expected_route.iter().map(|n| n - 1).collect();
    let expected: Chromosome = fx.expected_chromosome.parse()?;

    let expected_cost: f64 = expected_route
        .windows(2)
        .map(|w| g.weight(w[0], w[1]))
        .sum();
    out.push(near(
        "graph expected route cost".into(),
        expected_cost,
        fx.expected_cost,
        1e-9,
    ));
    match dijkstra_shortest(&g, 0, last) {
        Some((route, cost)) => {
            let shown: Vec<usize> = route.iter().map(|n| n + 1).collect();
            out.push(check(
                "graph shortest route",
                route == expected_route,
                format!("{shown:?} vs {:?}", fx.expected_route),
            ));
            out.push(near(
                "graph shortest cost".into(),
                cost,
                fx.expected_cost,
                1e-9,
            ));
        }
        None => out.push(check(
            "graph shortest route",
            false,
            "goal unreachable".into(),
        )),
    }

    let mut successes = 0;
    let mut monotone = true;
    for &seed in &fx.seeds {
        let params = AcoParams {
            ants: fx.ants,
            generations: fx.generations,
            global_transfer: fx.global_transfer,
            evaporation: fx.evaporation,
            seed,
        };
        let r = aco_run(&g, &params)?;
        if r.best == expected && r.best_cost == fx.expected_cost {
            successes += 1;
        }
        monotone &= r.best_curve.windows(2).all(|w| w[1] <= w[0]);
    }
    out.push(check(
        "colony success rate",
        successes >= fx.min_successes,
        format!(
            "{successes}/{} seeds reached {} at cost {} (need {})",
            fx.seeds.len(),
            fx.expected_chromosome,
            fx.expected_cost,
            fx.min_successes
        ),
    ));
    out.push(check(
        "colony curves nonincreasing",
        monotone,
        String::new(),
    ));
    Ok(())
}

/// Runs every fixture check. `tolerance` overrides the point and total
/// tolerances of the route fixtures.
pub fn verify_fixtures(dir: &Path, tolerance: Option<f64>) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let scene = Scene::load(dir.join("scene.json"))?;
    out.push(check(
        "scene fixture matches builtin scene",
        scene == builtin_scene(),
        String::new(),
    ));
    for name in ["table3.json", "table4.json"] {
        let fx: PathFixture = read(dir, name)?;
        verify_path(&scene, &fx, tolerance, &mut out)?;
    }
    let corner: CornerFixture = read(dir, "corner_b3.json")?;
    verify_corner(&corner, &mut out);
    let colony: ColonyFixture = read(dir, "colony.json")?;
    verify_colony(dir, &colony, &mut out)?;
    out.push(near(
        "turn speed at radius 10".into(),
        max_turn_speed(10.0),
        2.5,
        0.0,
    ));
    out.push(check(
        "named targets",
        [
            ("O", 0.0, 0.0),
            ("A", 300.0, 300.0),
            ("B", 100.0, 700.0),
            ("C", 700.0, 640.0),
        ]
        .iter()
        .all(|&(n, x, y)| KnownTargets::named(n) == Some(Point::new(x, y))),
        String::new(),
    ));
    Ok(out)
}
