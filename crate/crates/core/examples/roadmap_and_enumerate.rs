//! Builds the corner roadmap for O -> B and lists the shortest alternative
//! routes over distinct corner sequences.

use arcroute::planner::{build_roadmap, enumerate_candidates, KnownTargets, CORRIDOR_SLACK};
use arcroute::report::candidates_text;
use arcroute::scene::builtin_scene;

fn main() -> arcroute::Result<()> {
    let scene = builtin_scene();
    let (from, to) = (KnownTargets::O, KnownTargets::B);

    let roadmap = build_roadmap(&scene, from, to)?;
    println!(
        "roadmap: {} nodes, {} edges",
        roadmap.graph.node_count(),
        roadmap.graph.edges().count()
    );
    if let Some(corridor) = roadmap.corridor(CORRIDOR_SLACK) {
        println!("colony corridor: {} nodes", corridor.graph.node_count());
        for (i, node) in corridor.nodes.iter().enumerate() {
            println!("  {:>2} {:.1}", i + 1, node.position());
        }
    }

    println!("five shortest routes:");
    print!(
        "{}",
        candidates_text(&enumerate_candidates(&scene, from, to, 5)?)
    );
    Ok(())
}
