//! Draws the built-in scene, its clearance envelopes and the O -> B route.
//! Writes `route.svg` or the path given as the first argument.

use arcroute::planner::{plan_route, KnownTargets, RouteRequest};
use arcroute::scene::{builtin_scene, inflate_scene};
use arcroute::svg::render_svg;

fn main() -> arcroute::Result<()> {
    let out = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "route.svg".to_string());
    let scene = builtin_scene();
    for region in inflate_scene(&scene) {
        println!(
            "obstacle {:>2}: hazard zone area {:.3}",
            region.source(),
            region.area()
        );
    }
    let plan = plan_route(
        &scene,
        &RouteRequest::exact(KnownTargets::O, KnownTargets::B),
    )?;
    std::fs::write(&out, render_svg(&scene, Some(&plan.path)))?;
    println!("wrote {out}");
    Ok(())
}
