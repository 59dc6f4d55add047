//! Plans the O -> A route on the built-in scene and prints its segment table.

use arcroute::planner::{plan_route, KnownTargets, RouteRequest};
use arcroute::report::RunReport;
use arcroute::scene::builtin_scene;

fn main() -> arcroute::Result<()> {
    let scene = builtin_scene();
    let result = plan_route(
        &scene,
        &RouteRequest::exact(KnownTargets::O, KnownTargets::A),
    )?;
    let inputs = vec![
        ("from".to_string(), "O".to_string()),
        ("to".to_string(), "A".to_string()),
    ];
    print!("{}", RunReport::for_plan(inputs, &result).to_text());
    for c in &result.corners {
        println!(
            "corner of obstacle {} at {} ({})",
            c.source, c.circle.center, c.circle.direction
        );
    }
    Ok(())
}
