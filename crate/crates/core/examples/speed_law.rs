//! Turn-speed limit by radius and the travel times it implies.

use arcroute::planner::{plan_route, KnownTargets, RouteRequest};
use arcroute::scene::builtin_scene;
use arcroute::speed::{max_turn_speed, SpeedLaw};

fn main() -> arcroute::Result<()> {
    for rho in [0.0, 5.0, 10.0, 15.0, 20.0, 30.0, 80.0] {
        println!("v({rho:>4}) = {:.6}", max_turn_speed(rho));
    }
    let scene = builtin_scene();
    for (name, goal) in [
        ("A", KnownTargets::A),
        ("B", KnownTargets::B),
        ("C", KnownTargets::C),
    ] {
        let plan = plan_route(&scene, &RouteRequest::exact(KnownTargets::O, goal))?;
        let slow = SpeedLaw { v0: 2.0 }.travel_time(&plan.path);
        println!(
            "O -> {name}: {:.4} units, {:.4} s at v0 = 5, {slow:.4} s at v0 = 2",
            plan.length, plan.travel_time
        );
    }
    Ok(())
}
