//! Chains a hand-picked corner sequence from O to B into a smooth path and
//! checks it against the scene.

use arcroute::path::TurningCircle;
use arcroute::scene::builtin_scene;
use arcroute::tangent::chain_path;
use arcroute::validate::validate_path;
use arcroute::Point;

fn main() -> arcroute::Result<()> {
    let p = Point::new;
    let circles = [
        TurningCircle::cw(p(60.0, 300.0), 10.0),
        TurningCircle::cw(p(150.0, 435.0), 10.0),
        TurningCircle::ccw(p(220.0, 470.0), 10.0),
        TurningCircle::ccw(p(220.0, 530.0), 10.0),
        TurningCircle::cw(p(150.0, 600.0), 10.0),
    ];
    let path = chain_path(Point::ORIGIN, &circles, p(100.0, 700.0))?;
    for (i, seg) in path.segments.iter().enumerate() {
        let kind = if seg.is_arc() { "arc" } else { "line" };
        println!(
            "{:>2} {kind:<4} {:.4} -> {:.4}  {:.4}",
            i + 1,
            seg.start(),
            seg.end(),
            seg.length()
        );
    }
    println!("total {:.6}", path.length());

    let diagnostics = validate_path(&path, &builtin_scene());
    println!(
        "legal: {}, min clearance {:.6}",
        diagnostics.is_legal(),
        diagnostics.min_clearance
    );
    Ok(())
}
