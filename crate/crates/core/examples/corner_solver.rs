//! Single-corner optimum in closed form, next to the numeric descent.

use arcroute::corner::{corner_in_direction, descend_corner, solve_corner, CornerProblem};
use arcroute::path::TurnDirection;
use arcroute::Point;

fn main() -> arcroute::Result<()> {
    let prob = CornerProblem::new(
        Point::ORIGIN,
        Point::new(100.0, 378.0),
        Point::new(60.0, 300.0),
        10.0,
    );

    for dir in [TurnDirection::Ccw, TurnDirection::Cw] {
        println!(
            "{dir:<3} wrap {:.9}",
            corner_in_direction(&prob, dir)?.length
        );
    }

    let best = solve_corner(&prob)?;
    let turn = best.turn.expect("center projects inside the segment");
    let numeric = descend_corner(&prob, turn.direction);
    println!("descent in the chosen direction {:.9}", numeric.length);
    println!(
        "best: {} via {:.4} and {:.4}",
        turn.direction, turn.entry, turn.exit
    );
    println!("  line {:.4}", best.path.segments[0].length());
    println!("  arc  {:.4}", best.arc_length(prob.radius));
    println!("  line {:.4}", best.path.segments[2].length());
    println!("  total {:.4}", best.length);
    Ok(())
}
