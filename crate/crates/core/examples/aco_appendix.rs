//! Runs the ant colony on the 15-node benchmark graph and compares it with
//! Dijkstra.

use arcroute::aco::{aco_run, AcoParams};
use arcroute::graph::{appendix_graph, dijkstra_shortest};

fn main() -> arcroute::Result<()> {
    let g = appendix_graph();
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let result = aco_run(&g, &AcoParams::with_seed(seed))?;

    let route: Vec<usize> = result.nodes.iter().map(|n| n + 1).collect();
    println!(
        "seed {seed}: chromosome {} route {route:?} cost {}",
        result.best, result.best_cost
    );
    println!("wall time {:.4} s", result.elapsed.as_secs_f64());
    for (gen, (b, m)) in result
        .best_curve
        .iter()
        .zip(&result.mean_curve)
        .enumerate()
        .step_by(10)
    {
        println!("  gen {gen:>3}  best {b:>8.1}  mean {m:>9.1}");
    }

    if let Some((path, cost)) = dijkstra_shortest(&g, 0, g.node_count() - 1) {
        let path: Vec<usize> = path.iter().map(|n| n + 1).collect();
        println!("dijkstra: {path:?} cost {cost}");
    }
    Ok(())
}
