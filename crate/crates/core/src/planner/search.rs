//! Tangent graph over the clearance envelope: every straight piece of a
//! shortest path is a tangent between the start, the goal and the turning
//! circles at obstacle corners, and every curved piece is an arc of one of
//! those circles. Searches run over "arrived on link" states so the arc cost
//! between an incoming and an outgoing tangent is exact.

use crate::geometry::{ArcSpan, Point};
use crate::path::{TurnDirection, TurningCircle, MIN_TURN_RADIUS};
use crate::scene::{obstacle_vertices, ObstacleShape, Scene};
use crate::tangent::{arrival_tangent, departure_tangent, directed_sweep, directed_tangent};
use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};

/// A turning circle the planner may wrap: an obstacle vertex or an inflated
/// circular obstacle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CornerCandidate {
    pub center: Point,
    pub radius: f64,
    /// Obstacle the corner belongs to.
    pub source: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Terminal {
    Start,
    Goal,
    Circle(usize, TurnDirection),
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Link {
    pub from: Terminal,
    pub to: Terminal,
    pub a: Point,
    pub b: Point,
    pub length: f64,
}

pub(crate) struct TangentGraph<'s> {
    scene: &'s Scene,
    pub start: Point,
    pub goal: Point,
    pub candidates: Vec<CornerCandidate>,
    pub links: Vec<Link>,
    outgoing: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub(crate) struct Route {
    /// Candidate index and direction per corner, in travel order.
    pub corners: Vec<(usize, TurnDirection)>,
    pub length: f64,
}

fn slot(t: Terminal) -> usize {
    match t {
        Terminal::Start => 0,
        Terminal::Goal => 1,
        Terminal::Circle(i, TurnDirection::Ccw) => 2 + 2 * i,
        Terminal::Circle(i, TurnDirection::Cw) => 3 + 2 * i,
    }
}

pub(crate) fn corner_candidates(scene: &Scene) -> Vec<CornerCandidate> {
    let corner_radius = scene.clearance().max(MIN_TURN_RADIUS);
    let mut out = Vec::new();
    for spec in scene.obstacles() {
        match spec.shape {
            ObstacleShape::Circle { center, radius } => out.push(CornerCandidate {
                center,
                radius: (radius + scene.clearance()).max(MIN_TURN_RADIUS),
                source: spec.id,
            }),
            _ => {
                let verts = obstacle_vertices(spec).expect("polygonal obstacle");
                out.extend(verts.into_iter().map(|center| CornerCandidate {
                    center,
                    radius: corner_radius,
                    source: spec.id,
                }));
            }
        }
    }
    out
}

#[derive(PartialEq)]
struct QueueItem {
    priority: f64,
    id: usize,
}

impl Eq for QueueItem {}

impl Ord for QueueItem {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .priority
            .total_cmp(&self.priority)
            .then_with(|| other.id.cmp(&self.id))
    }
}

impl PartialOrd for QueueItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'s> TangentGraph<'s> {
    pub fn build(scene: &'s Scene, start: Point, goal: Point) -> Self {
        let candidates = corner_candidates(scene);
        let mut g = TangentGraph {
            scene,
            start,
            goal,
            outgoing: vec![Vec::new(); 2 + 2 * candidates.len()],
            candidates,
            links: Vec::new(),
        };
        g.add_link(Terminal::Start, Terminal::Goal, start, goal);
        let dirs = [TurnDirection::Ccw, TurnDirection::Cw];
        for i in 0..g.candidates.len() {
            for d in dirs {
                let c = g.circle(i, d);
                if let Ok(q) = departure_tangent(start, &c) {
                    g.add_link(Terminal::Start, Terminal::Circle(i, d), start, q);
                }
                if let Ok(q) = arrival_tangent(&c, goal) {
                    g.add_link(Terminal::Circle(i, d), Terminal::Goal, q, goal);
                }
            }
        }
        for i in 0..g.candidates.len() {
            for j in 0..g.candidates.len() {
                if i == j || g.candidates[i].center == g.candidates[j].center {
                    continue;
                }
                for d1 in dirs {
                    for d2 in dirs {
                        let (ci, cj) = (g.circle(i, d1), g.circle(j, d2));
                        if let Some((a, b)) = directed_tangent(&ci, &cj) {
                            g.add_link(Terminal::Circle(i, d1), Terminal::Circle(j, d2), a, b);
                        }
                    }
                }
            }
        }
        g
    }

    pub fn circle(&self, i: usize, d: TurnDirection) -> TurningCircle {
        let c = &self.candidates[i];
        TurningCircle::new(c.center, c.radius, d)
    }

    pub fn scene(&self) -> &Scene {
        self.scene
    }

    fn add_link(&mut self, from: Terminal, to: Terminal, a: Point, b: Point) {
        if !(self.scene.contains_point(a) && self.scene.contains_point(b)) {
            return;
        }
        if !crate::scene::segment_clear(a, b, self.scene) {
            return;
        }
        self.outgoing[slot(from)].push(self.links.len());
        self.links.push(Link {
            from,
            to,
            a,
            b,
            length: a.distance(b),
        });
    }

    /// Arc cost from arriving at `at` on `via` to leaving at `leave`, or
    /// `None` if that arc is not clear.
    fn arc_cost(&self, via: Terminal, at: Point, leave: Point) -> Option<f64> {
        let Terminal::Circle(i, d) = via else {
            return Some(0.0);
        };
        let c = self.circle(i, d);
        let a1 = (at - c.center).angle();
        let sweep = directed_sweep(d, a1, (leave - c.center).angle());
        if sweep == 0.0 {
            return Some(0.0);
        }
        let span = ArcSpan {
            center: c.center,
            radius: c.radius,
            start_angle: a1,
            sweep: d.sign() * sweep,
        };
        (self.scene.contains_arc(&span) && self.scene.arc_clear(&span)).then_some(c.radius * sweep)
    }

    /// Shortest route using only links accepted by `allow`.
    pub fn shortest(&self, allow: impl Fn(&Link) -> bool) -> Option<Route> {
        let mut dist = vec![f64::INFINITY; self.links.len()];
        let mut prev = vec![usize::MAX; self.links.len()];
        let mut heap = BinaryHeap::new();
        for &l in &self.outgoing[slot(Terminal::Start)] {
            if allow(&self.links[l]) {
                dist[l] = self.links[l].length;
                heap.push(QueueItem {
                    priority: dist[l],
                    id: l,
                });
            }
        }
        while let Some(QueueItem { priority, id }) = heap.pop() {
            if priority > dist[id] {
                continue;
            }
            let link = self.links[id];
            if link.to == Terminal::Goal {
                return Some(self.route_from(id, &prev, priority));
            }
            for &m in &self.outgoing[slot(link.to)] {
                let next = &self.links[m];
                if !allow(next) {
                    continue;
                }
                let Some(arc) = self.arc_cost(link.to, link.b, next.a) else {
                    continue;
                };
                let c = priority + arc + next.length;
                if c < dist[m] {
                    dist[m] = c;
                    prev[m] = id;
                    heap.push(QueueItem { priority: c, id: m });
                }
            }
        }
        None
    }

    fn route_from(&self, last: usize, prev: &[usize], length: f64) -> Route {
        let mut chain = vec![last];
        while let Some(&l) = chain.last() {
            if prev[l] == usize::MAX {
                break;
            }
            chain.push(prev[l]);
        }
        chain.reverse();
        Route {
            corners: self.corners_of(&chain),
            length,
        }
    }

    fn corners_of(&self, chain: &[usize]) -> Vec<(usize, TurnDirection)> {
        chain
            .iter()
            .filter_map(|&l| match self.links[l].to {
                Terminal::Circle(i, d) => Some((i, d)),
                _ => None,
            })
            .collect()
    }

    /// Routes in nondecreasing length over distinct corner sequences (by
    /// candidate, ignoring direction), each with at most `max_corners`
    /// corners. Best-first search with the straight-line distance to the
    /// goal as an admissible bound; `max_expansions` caps the work.
    pub fn k_shortest(&self, k: usize, max_corners: usize, max_expansions: usize) -> Vec<Route> {
        struct Partial {
            link: usize,
            parent: Option<usize>,
            depth: usize,
            cost: f64,
        }
        let mut arena: Vec<Partial> = Vec::new();
        let mut heap = BinaryHeap::new();
        let h = |p: Point| p.distance(self.goal);
        for &l in &self.outgoing[slot(Terminal::Start)] {
            let link = &self.links[l];
            let depth = usize::from(link.to != Terminal::Goal);
            arena.push(Partial {
                link: l,
                parent: None,
                depth,
                cost: link.length,
            });
            heap.push(QueueItem {
                priority: link.length + h(link.b),
                id: arena.len() - 1,
            });
        }
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut out = Vec::new();
        let mut expansions = 0;
        let chain_of = |arena: &[Partial], mut id: usize| {
            let mut chain = vec![arena[id].link];
            while let Some(p) = arena[id].parent {
                chain.push(arena[p].link);
                id = p;
            }
            chain.reverse();
            chain
        };
        while let Some(QueueItem { id, .. }) = heap.pop() {
            expansions += 1;
            if expansions > max_expansions || out.len() >= k {
                break;
            }
            let (link_id, depth, cost) = (arena[id].link, arena[id].depth, arena[id].cost);
            let link = self.links[link_id];
            if link.to == Terminal::Goal {
                let chain = chain_of(&arena, id);
                let corners = self.corners_of(&chain);
                let key: Vec<usize> = corners.iter().map(|c| c.0).collect();
                if seen.insert(key) {
                    out.push(Route {
                        corners,
                        length: cost,
                    });
                }
                continue;
            }
            let Terminal::Circle(here, _) = link.to else {
                continue;
            };
            let visited: Vec<usize> = self
                .corners_of(&chain_of(&arena, id))
                .iter()
                .map(|c| c.0)
                .collect();
            for &m in &self.outgoing[slot(link.to)] {
                let next = self.links[m];
                let next_depth = match next.to {
                    Terminal::Circle(j, _) => {
                        if j == here || visited.contains(&j) || depth + 1 > max_corners {
                            continue;
                        }
                        depth + 1
                    }
                    _ => depth,
                };
                let Some(arc) = self.arc_cost(link.to, link.b, next.a) else {
                    continue;
                };
                let c = cost + arc + next.length;
                arena.push(Partial {
                    link: m,
                    parent: Some(id),
                    depth: next_depth,
                    cost: c,
                });
                heap.push(QueueItem {
                    priority: c + h(next.b),
                    id: arena.len() - 1,
                });
            }
        }
        out
    }
}
