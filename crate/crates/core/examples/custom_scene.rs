//! Plans on a scene read from JSON, with both engines.

use arcroute::aco::AcoParams;
use arcroute::planner::{plan_route, RouteRequest};
use arcroute::scene::Scene;
use arcroute::Point;

const SCENE: &str = r#"{
  "bounds": [400, 300],
  "clearance": 10,
  "obstacles": [
    {"id": 1, "kind": "rect", "corner": [100, 0], "length": 40, "width": 200},
    {"id": 2, "kind": "triangle", "corner": [220, 100], "top": [260, 300], "lower_right": [300, 100]},
    {"id": 3, "kind": "circle", "center": [330, 60], "radius": 25}
  ]
}"#;

fn main() -> arcroute::Result<()> {
    let scene = Scene::from_json_str(SCENE)?;
    let (start, goal) = (Point::new(20.0, 20.0), Point::new(380.0, 20.0));
    let exact = plan_route(&scene, &RouteRequest::exact(start, goal))?;
    println!(
        "exact: {:.4} over {} corners",
        exact.length,
        exact.corners.len()
    );
    for seed in 1..=3 {
        match plan_route(
            &scene,
            &RouteRequest::aco(start, goal, AcoParams::with_seed(seed)),
        ) {
            Ok(r) => println!("aco seed {seed}: {:.4}", r.length),
            Err(e) => println!("aco seed {seed}: {e}"),
        }
    }
    Ok(())
}
