//! Symmetric weighted graphs with a "no edge" sentinel weight, the 15-node
//! benchmark roadmap, and an exact shortest-path oracle.

use crate::error::{Error, Result};
use crate::geometry::Point;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::path::Path;

/// Sentinel weight of the benchmark matrix.
pub const APPENDIX_NO_EDGE: f64 = 1000.0;

/// Dense symmetric weight matrix. Node indices are zero-based. A weight equal
/// to or above `no_edge` means "no edge"; path costs still add it as a
/// penalty when a chromosome decodes through a missing edge.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    weights: Vec<f64>,
    no_edge: f64,
    coords: Option<Vec<Point>>,
}

impl WeightedGraph {
    pub fn new(node_count: usize, no_edge: f64) -> Self {
        let mut weights = vec![no_edge; node_count * node_count];
        for i in 0..node_count {
            weights[i * node_count + i] = 0.0;
        }
        Self {
            n: node_count,
            weights,
            no_edge,
            coords: None,
        }
    }

    /// Builds from a full matrix, checking shape, symmetry, the zero diagonal
    /// and positive off-diagonal weights.
    pub fn from_matrix(rows: &[Vec<f64>], no_edge: f64) -> Result<Self> {
        let n = rows.len();
        let mut g = Self::new(n, no_edge);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGraph(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &w) in row.iter().enumerate() {
                if i == j && w != 0.0 {
                    return Err(Error::InvalidGraph(format!(
                        "nonzero diagonal at node {}",
                        i + 1
                    )));
                }
                if i != j && (w.is_nan() || w <= 0.0) {
                    return Err(Error::InvalidGraph(format!(
                        "weight ({}, {}) must be positive",
                        i + 1,
                        j + 1
                    )));
                }
                if rows[j][i] != w {
                    return Err(Error::InvalidGraph(format!(
                        "asymmetric weights at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
                g.weights[i * n + j] = w;
            }
        }
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn no_edge(&self) -> f64 {
        self.no_edge
    }

    pub fn coords(&self) -> Option<&[Point]> {
        self.coords.as_deref()
    }

    pub fn with_coords(mut self, coords: Vec<Point>) -> Self {
        assert_eq!(coords.len(), self.n);
        self.coords = Some(coords);
        self
    }

    /// Raw matrix entry, sentinel included.
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.weights[i * self.n + j]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.weight(i, j) < self.no_edge
    }

    pub fn set_edge(&mut self, i: usize, j: usize, w: f64) {
        assert!(i != j && w > 0.0, "edge ({i}, {j}) with weight {w}");
        self.weights[i * self.n + j] = w;
        self.weights[j * self.n + i] = w;
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        self.weights[i * self.n + j] = self.no_edge;
        self.weights[j * self.n + i] = self.no_edge;
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        (0..self.n)
            .filter(move |&j| self.has_edge(i, j))
            .map(move |j| (j, self.weight(i, j)))
    }

    /// Edges `(i, j, w)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |i| {
            (i + 1..self.n)
                .filter(move |&j| self.has_edge(i, j))
                .map(move |j| (i, j, self.weight(i, j)))
        })
    }

    pub fn from_json_str(source: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(source).map_err(|e| Error::parse(source, e))?;
        file.try_into()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&GraphFile::from(self)).expect("graph serializes")
    }
}

/// File form: node count, sentinel and a one-based edge list.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    node_count: usize,
    no_edge: f64,
    edges: Vec<(usize, usize, f64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coords: Option<Vec<Point>>,
}

impl TryFrom<GraphFile> for WeightedGraph {
    type Error = Error;
    fn try_from(f: GraphFile) -> Result<Self> {
        let mut g = WeightedGraph::new(f.node_count, f.no_edge);
        for (i, j, w) in f.edges {
            if i == 0 || j == 0 || i > f.node_count || j > f.node_count || i == j {
                return Err(Error::InvalidGraph(format!("bad edge ({i}, {j})")));
            }
            if w.is_nan() || w <= 0.0 {
                return Err(Error::InvalidGraph(format!("edge ({i}, {j}) weight {w}")));
            }
            g.set_edge(i - 1, j - 1, w);
        }
        if let Some(c) = f.coords {
            if c.len() != f.node_count {
                return Err(Error::InvalidGraph(
                    "coords length differs from node count".into(),
                ));
            }
            g.coords = Some(c);
        }
        Ok(g)
    }
}

impl From<&WeightedGraph> for GraphFile {
    fn from(g: &WeightedGraph) -> Self {
        GraphFile {
            node_count: g.n,
            no_edge: g.no_edge,
            edges: g.edges().map(|(i, j, w)| (i + 1, j + 1, w)).collect(),
            coords: g.coords.clone(),
        }
    }
}

/// The 15-node benchmark roadmap (start = node 1, goal = node 15).
///
/// The 500-weight entry is placed between nodes 3 and 8.
pub fn appendix_graph() -> WeightedGraph {
    const X: f64 = APPENDIX_NO_EDGE;
    #[rustfmt::skip]
    let rows: [[f64; 15]; 15] = [
        [0.0, 70.0, X, 276.0, 208.0, X, X, X, X, X, X, X, X, X, X],
        [70.0, 0.0, 141.0, 211.0, 120.0, 182.0, X, X, X, X, X, X, X, X, X],
        [X, 141.0, 0.0, 68.0, 168.0, 100.0, 132.0, 500.0, X, X, X, X, X, X, X],
        [276.0, 211.0, 68.0, 0.0, X, X, 145.0, 131.0, X, X, X, X, X, X, X],
        [208.0, 120.0, 168.0, X, 0.0, 120.0, X, X, X, X, X, 313.0, X, X, X],
        [X, 182.0, 100.0, X, 120.0, 0.0, 60.0, X, X, X, X, X, X, X, X],
        [X, X, 132.0, 145.0, X, 60.0, 0.0, 131.0, 141.0, X, X, 89.0, X, X, X],
        [X, X, 500.0, 131.0, X, X, 131.0, 0.0, 49.0, X, X, X, X, 555.0, X],
        [X, X, X, X, X, X, 141.0, 49.0, 0.0, X, 30.0, X, X, 118.0, X],
        [X, X, X, X, X, X, X, X, X, 0.0, 76.0, 170.0, 55.0, X, X],
        [X, X, X, X, X, X, X, X, 30.0, 76.0, 0.0, 123.0, 128.0, 69.0, X],
        [X, X, X, X, 313.0, X, 89.0, X, X, 170.0, 123.0, 0.0, X, X, X],
        [X, X, X, X, X, X, X, X, X, 55.0, 128.0, X, 0.0, X, 141.0],
        [X, X, X, X, X, X, X, 555.0, 118.0, X, 69.0, X, X, 0.0, 82.0],
        [X, X, X, X, X, X, X, X, X, X, X, X, 141.0, 82.0, 0.0],
    ];
    let rows: Vec<Vec<f64>> = rows.iter().map(|r| r.to_vec()).collect();
    WeightedGraph::from_matrix(&rows, APPENDIX_NO_EDGE).expect("benchmark matrix is valid")
}

#[derive(PartialEq)]
struct Entry {
    cost: f64,
    node: usize,
}

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .cost
            .total_cmp(&self.cost)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact shortest path ignoring sentinel edges. `None` if `dst` is
/// unreachable.
pub fn dijkstra_shortest(g: &WeightedGraph, src: usize, dst: usize) -> Option<(Vec<usize>, f64)> {
    let n = g.node_count();
    let mut dist = vec![f64::INFINITY; n];
    let mut prev = vec![usize::MAX; n];
    let mut heap = BinaryHeap::new();
    dist[src] = 0.0;
    heap.push(Entry {
        cost: 0.0,
        node: src,
    });
    while let Some(Entry { cost, node }) = heap.pop() {
        if cost > dist[node] {
            continue;
        }
        if node == dst {
            break;
        }
        for (next, w) in g.neighbors(node) {
            let c = cost + w;
            if c < dist[next] {
                dist[next] = c;
                prev[next] = node;
                heap.push(Entry {
                    cost: c,
                    node: next,
                });
            }
        }
    }
    if !dist[dst].is_finite() {
        return None;
    }
    let mut path = vec![dst];
    while let Some(&last) = path.last() {
        if last == src {
            break;
        }
        path.push(prev[last]);
    }
    path.reverse();
    Some((path, dist[dst]))
}
