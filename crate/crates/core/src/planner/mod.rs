//! End-to-end route planning: roadmap construction, corner-sequence
//! selection (exact tangent-graph search or ant colony), smooth path
//! chaining and validation.

mod search;

pub use search::CornerCandidate;

use crate::aco::{aco_run, AcoParams, AcoResult};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::graph::WeightedGraph;
use crate::path::{SmoothPath, TurningCircle};
use crate::scene::{min_clearance, Scene, CLEARANCE_EPS};
use crate::speed::travel_time;
use crate::tangent::chain_path;
use crate::validate::{validate_path, Diagnostics};
use search::{Route, TangentGraph, Terminal};
use serde::Serialize;

/// Named targets of the benchmark scene.
pub struct KnownTargets;

impl KnownTargets {
    pub const O: Point = Point::new(0.0, 0.0);
    pub const A: Point = Point::new(300.0, 300.0);
    pub const B: Point = Point::new(100.0, 700.0);
    pub const C: Point = Point::new(700.0, 640.0);

    pub fn named(name: &str) -> Option<Point> {
        match name.trim().to_ascii_uppercase().as_str() {
            "O" => Some(Self::O),
            "A" => Some(Self::A),
            "B" => Some(Self::B),
            "C" => Some(Self::C),
            _ => None,
        }
    }
}

/// Most corners a single enumerated route may wrap.
pub const MAX_ROUTE_CORNERS: usize = 12;

/// Sentinel weight for roadmap pairs without a clear tangent connection.
pub const ROADMAP_NO_EDGE: f64 = 1.0e6;

const ENUMERATION_BUDGET: usize = 2_000_000;

/// Relative slack of the corridor the colony searches: corners whose best
/// start-to-goal detour exceeds the roadmap optimum by more are dropped.
pub const CORRIDOR_SLACK: f64 = 0.1;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Engine {
    Exact,
    Aco(AcoParams),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RouteRequest {
    pub start: Point,
    pub goal: Point,
    pub engine: Engine,
}

impl RouteRequest {
    pub fn exact(start: Point, goal: Point) -> Self {
        Self {
            start,
            goal,
            engine: Engine::Exact,
        }
    }

    pub fn aco(start: Point, goal: Point, params: AcoParams) -> Self {
        Self {
            start,
            goal,
            engine: Engine::Aco(params),
        }
    }
}

/// One wrapped corner of a planned route.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PlannedCorner {
    pub circle: TurningCircle,
    pub source: u32,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "engine", rename_all = "lowercase")]
pub enum EngineTrace {
    Exact {
        tangent_links: usize,
    },
    Aco {
        roadmap_nodes: usize,
        /// Roadmap node indices of the colony's best route.
        roadmap_route: Vec<usize>,
        roadmap_cost: f64,
        colony: AcoResult,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct PlanResult {
    pub corners: Vec<PlannedCorner>,
    pub path: SmoothPath,
    pub length: f64,
    pub travel_time: f64,
    pub diagnostics: Diagnostics,
    pub trace: EngineTrace,
}

/// Start, goal or one corner of a roadmap.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RoadmapNode {
    Start {
        at: Point,
    },
    Corner {
        candidate: usize,
        center: Point,
        radius: f64,
        source: u32,
    },
    Goal {
        at: Point,
    },
}

impl RoadmapNode {
    pub fn position(&self) -> Point {
        match *self {
            RoadmapNode::Start { at } | RoadmapNode::Goal { at } => at,
            RoadmapNode::Corner { center, .. } => center,
        }
    }
}

/// Weighted roadmap: node 0 is the start, the last node the goal, corners in
/// between ordered by distance from the start.
#[derive(Clone, Debug)]
pub struct Roadmap {
    pub graph: WeightedGraph,
    pub nodes: Vec<RoadmapNode>,
}

impl Roadmap {
    /// Sub-roadmap of the corners lying on some start-to-goal roadmap route
    /// at most `(1 + slack)` times the shortest one, ordered by roadmap
    /// distance from the start so every shortest route is ascending.
    /// `None` if the goal is unreachable.
    pub fn corridor(&self, slack: f64) -> Option<Roadmap> {
        let n = self.graph.node_count();
        let from_start = distances(&self.graph, 0);
        let to_goal = distances(&self.graph, n - 1);
        let best = from_start[n - 1];
        if !best.is_finite() {
            return None;
        }
        let limit = best * (1.0 + slack) + 1e-9;
        let mut keep: Vec<usize> = (1..n - 1)
            .filter(|&i| from_start[i] + to_goal[i] <= limit)
            .collect();
        keep.sort_by(|&a, &b| from_start[a].total_cmp(&from_start[b]).then(a.cmp(&b)));
        keep.insert(0, 0);
        keep.push(n - 1);

        let mut graph = WeightedGraph::new(keep.len(), self.graph.no_edge());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                if self.graph.has_edge(i, j) {
                    graph.set_edge(a, b, self.graph.weight(i, j));
                }
            }
        }
        let nodes: Vec<RoadmapNode> = keep.iter().map(|&i| self.nodes[i]).collect();
        let coords = nodes.iter().map(RoadmapNode::position).collect();
        Some(Roadmap {
            graph: graph.with_coords(coords),
            nodes,
        })
    }
}

/// Single-source roadmap distances, infinite where unreachable.
fn distances(g: &WeightedGraph, src: usize) -> Vec<f64> {
    let n = g.node_count();
    let mut dist = vec![f64::INFINITY; n];
    let mut done = vec![false; n];
    dist[src] = 0.0;
    for _ in 0..n {
        let Some(u) = (0..n)
            .filter(|&i| !done[i] && dist[i].is_finite())
            .min_by(|&a, &b| dist[a].total_cmp(&dist[b]))
        else {
            break;
        };
        done[u] = true;
        for (v, w) in g.neighbors(u) {
            dist[v] = dist[v].min(dist[u] + w);
        }
    }
    dist
}

fn check_endpoint(scene: &Scene, p: Point, role: &str) -> Result<()> {
    if !p.is_finite() || !scene.contains_point(p) {
        return Err(Error::InvalidRequest(format!(
            "{role} {p} is outside the scene"
        )));
    }
    let clearance = min_clearance(p, scene);
    if clearance < scene.clearance() - CLEARANCE_EPS {
        return Err(Error::InvalidRequest(format!(
            "{role} {p} is only {clearance:.4} from the nearest obstacle (need {})",
            scene.clearance()
        )));
    }
    Ok(())
}

fn roadmap_from(tg: &TangentGraph<'_>) -> Roadmap {
    let (start, goal) = (tg.start, tg.goal);
    let mut used = vec![false; tg.candidates.len()];
    for l in &tg.links {
        for t in [l.from, l.to] {
            if let Terminal::Circle(i, _) = t {
                used[i] = true;
            }
        }
    }
    let mut corners: Vec<usize> = (0..tg.candidates.len()).filter(|&i| used[i]).collect();
    corners.sort_by(|&a, &b| {
        let da = tg.candidates[a].center.distance(start);
        let db = tg.candidates[b].center.distance(start);
        da.total_cmp(&db).then(a.cmp(&b))
    });

    let mut nodes = vec![RoadmapNode::Start { at: start }];
    nodes.extend(corners.iter().map(|&i| {
        let c = &tg.candidates[i];
        RoadmapNode::Corner {
            candidate: i,
            center: c.center,
            radius: c.radius,
            source: c.source,
        }
    }));
    nodes.push(RoadmapNode::Goal { at: goal });

    let goal_node = nodes.len() - 1;
    let mut node_of = vec![usize::MAX; tg.candidates.len()];
    for (k, &i) in corners.iter().enumerate() {
        node_of[i] = k + 1;
    }
    let index = |t: Terminal| match t {
        Terminal::Start => 0,
        Terminal::Goal => goal_node,
        Terminal::Circle(i, _) => node_of[i],
    };
    let mut graph = WeightedGraph::new(nodes.len(), ROADMAP_NO_EDGE);
    for l in &tg.links {
        let (i, j) = (index(l.from), index(l.to));
        if i != j && !graph.has_edge(i, j) {
            let w = nodes[i].position().distance(nodes[j].position());
            // Coincident nodes still need a positive weight.
            graph.set_edge(i, j, w.max(f64::MIN_POSITIVE));
        }
    }
    let coords = nodes.iter().map(RoadmapNode::position).collect();
    Roadmap {
        graph: graph.with_coords(coords),
        nodes,
    }
}

/// Roadmap over the start, the goal and every obstacle corner; two nodes
/// are joined when some clear tangent connects them, weighted by the
/// straight-line distance between them.
pub fn build_roadmap(scene: &Scene, start: Point, goal: Point) -> Result<Roadmap> {
    check_endpoint(scene, start, "start")?;
    check_endpoint(scene, goal, "goal")?;
    Ok(roadmap_from(&TangentGraph::build(scene, start, goal)))
}

fn realize(
    tg: &TangentGraph<'_>,
    route: &Route,
) -> Result<(Vec<PlannedCorner>, SmoothPath, Diagnostics)> {
    let corners: Vec<PlannedCorner> = route
        .corners
        .iter()
        .map(|&(i, d)| PlannedCorner {
            circle: tg.circle(i, d),
            source: tg.candidates[i].source,
        })
        .collect();
    let circles: Vec<TurningCircle> = corners.iter().map(|c| c.circle).collect();
    let path = chain_path(tg.start, &circles, tg.goal)?;
    debug_assert!((path.length() - route.length).abs() < 1e-6);
    let diagnostics = validate_path(&path, tg.scene());
    if !diagnostics.is_legal() {
        let first = diagnostics.violations[0].to_string();
        return Err(Error::Infeasible {
            reason: format!("chained path failed validation: {first}"),
            blocking: Vec::new(),
        });
    }
    Ok((corners, path, diagnostics))
}

fn no_route(scene: &Scene, start: Point, goal: Point, why: &str) -> Error {
    Error::Infeasible {
        reason: why.to_string(),
        blocking: scene.blocking_obstacles(start, goal),
    }
}

pub fn plan_route(scene: &Scene, req: &RouteRequest) -> Result<PlanResult> {
    check_endpoint(scene, req.start, "start")?;
    check_endpoint(scene, req.goal, "goal")?;
    if req.start == req.goal {
        return Ok(PlanResult {
            corners: Vec::new(),
            path: SmoothPath::default(),
            length: 0.0,
            travel_time: 0.0,
            diagnostics: Diagnostics {
                violations: Vec::new(),
                min_clearance: min_clearance(req.start, scene),
            },
            trace: EngineTrace::Exact { tangent_links: 0 },
        });
    }
    let tg = TangentGraph::build(scene, req.start, req.goal);
    let (route, trace) = match req.engine {
        Engine::Exact => {
            let route = tg
                .shortest(|_| true)
                .ok_or_else(|| no_route(scene, req.start, req.goal, "goal unreachable"))?;
            (
                route,
                EngineTrace::Exact {
                    tangent_links: tg.links.len(),
                },
            )
        }
        Engine::Aco(params) => {
            let roadmap = roadmap_from(&tg).corridor(CORRIDOR_SLACK).ok_or_else(|| {
                no_route(
                    scene,
                    req.start,
                    req.goal,
                    "goal unreachable on the roadmap",
                )
            })?;
            let colony = aco_run(&roadmap.graph, &params)?;
            let hops = &colony.nodes;
            if hops.windows(2).any(|w| !roadmap.graph.has_edge(w[0], w[1])) {
                return Err(no_route(
                    scene,
                    req.start,
                    req.goal,
                    "colony did not find a connected roadmap route",
                ));
            }
            let sequence: Vec<usize> = hops[1..hops.len() - 1]
                .iter()
                .map(|&n| match roadmap.nodes[n] {
                    RoadmapNode::Corner { candidate, .. } => candidate,
                    _ => unreachable!("interior roadmap nodes are corners"),
                })
                .collect();
            let route = shortest_through(&tg, &sequence).ok_or_else(|| {
                no_route(
                    scene,
                    req.start,
                    req.goal,
                    "no legal turn directions along the colony's corner sequence",
                )
            })?;
            let trace = EngineTrace::Aco {
                roadmap_nodes: roadmap.nodes.len(),
                roadmap_route: hops.clone(),
                roadmap_cost: colony.best_cost,
                colony,
            };
            (route, trace)
        }
    };
    let (corners, path, diagnostics) = realize(&tg, &route)?;
    let length = path.length();
    Ok(PlanResult {
        corners,
        travel_time: travel_time(&path),
        path,
        length,
        diagnostics,
        trace,
    })
}

/// Shortest legal route visiting exactly the given corners in order, with
/// turn directions chosen freely.
fn shortest_through(tg: &TangentGraph<'_>, sequence: &[usize]) -> Option<Route> {
    let position = |t: Terminal| -> Option<usize> {
        match t {
            Terminal::Start => Some(0),
            Terminal::Goal => Some(sequence.len() + 1),
            Terminal::Circle(i, _) => sequence.iter().position(|&s| s == i).map(|p| p + 1),
        }
    };
    tg.shortest(|l| match (position(l.from), position(l.to)) {
        (Some(a), Some(b)) => b == a + 1,
        _ => false,
    })
}

/// A ranked alternative from [`enumerate_candidates`].
#[derive(Clone, Debug, Serialize)]
pub struct CandidatePath {
    pub corners: Vec<PlannedCorner>,
    pub path: SmoothPath,
    pub length: f64,
}

/// The `k` shortest legal routes over distinct corner sequences, ascending
/// by length.
pub fn enumerate_candidates(
    scene: &Scene,
    start: Point,
    goal: Point,
    k: usize,
) -> Result<Vec<CandidatePath>> {
    if k == 0 {
        return Err(Error::InvalidRequest("k must be at least 1".into()));
    }
    check_endpoint(scene, start, "start")?;
    check_endpoint(scene, goal, "goal")?;
    if start == goal {
        return Ok(vec![CandidatePath {
            corners: Vec::new(),
            path: SmoothPath::default(),
            length: 0.0,
        }]);
    }
    let tg = TangentGraph::build(scene, start, goal);
    let mut out = Vec::with_capacity(k);
    for route in tg.k_shortest(k, MAX_ROUTE_CORNERS, ENUMERATION_BUDGET) {
        if let Ok((corners, path, _)) = realize(&tg, &route) {
            out.push(CandidatePath {
                corners,
                length: path.length(),
                path,
            });
        }
    }
    out.sort_by(|a, b| a.length.total_cmp(&b.length));
    Ok(out)
}
