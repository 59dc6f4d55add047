//! Single-corner problem: shortest line-arc-line path from a start point,
//! around one turning circle, to an end point.
//!
//! The optimum is found in closed form. Both tangent lines are point-circle
//! tangents of length `sqrt(D^2 - r^2)` and the arc joins the two tangent
//! points in the chosen turn direction. [`descend_corner`] solves the same
//! problem numerically over the two tangent-point angles and is kept as an
//! independent cross-check.

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::path::{SmoothPath, TurnDirection, TurningCircle};
use crate::tangent::{arrival_tangent, chain_path, departure_tangent, directed_sweep};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CornerProblem {
    pub start: Point,
    pub end: Point,
    pub center: Point,
    pub radius: f64,
}

impl CornerProblem {
    pub fn new(start: Point, end: Point, center: Point, radius: f64) -> Self {
        Self {
            start,
            end,
            center,
            radius,
        }
    }

    /// The same problem travelled backwards.
    pub fn reversed(&self) -> Self {
        Self::new(self.end, self.start, self.center, self.radius)
    }

    fn check(&self) -> Result<()> {
        for p in [self.start, self.end] {
            if p.distance(self.center) <= self.radius {
                return Err(Error::Tangency {
                    point: p,
                    center: self.center,
                    radius: self.radius,
                });
            }
        }
        Ok(())
    }

    /// Whether the circle sits alongside the straight start-end segment, so
    /// that a path around it is a genuine corner.
    pub fn is_corner(&self) -> bool {
        let ab = self.end - self.start;
        let len_sq = ab.norm_sq();
        if len_sq == 0.0 {
            return false;
        }
        let t = (self.center - self.start).dot(ab) / len_sq;
        t > 0.0 && t < 1.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CornerTurn {
    pub direction: TurnDirection,
    pub entry: Point,
    pub exit: Point,
    /// Half the swept angle; the arc length is `2 * radius * half_angle`.
    pub half_angle: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CornerSolution {
    /// `None` when the straight segment already avoids the corner.
    pub turn: Option<CornerTurn>,
    pub path: SmoothPath,
    pub length: f64,
}

impl CornerSolution {
    pub fn arc_length(&self, radius: f64) -> f64 {
        self.turn.map_or(0.0, |t| 2.0 * radius * t.half_angle)
    }
}

/// Corner path for one fixed turn direction.
pub fn corner_in_direction(
    prob: &CornerProblem,
    direction: TurnDirection,
) -> Result<CornerSolution> {
    prob.check()?;
    let circle = TurningCircle::new(prob.center, prob.radius, direction);
    let entry = departure_tangent(prob.start, &circle)?;
    let exit = arrival_tangent(&circle, prob.end)?;
    let sweep = directed_sweep(
        direction,
        (entry - prob.center).angle(),
        (exit - prob.center).angle(),
    );
    let path = chain_path(prob.start, &[circle], prob.end)?;
    let length = prob.start.distance(entry) + prob.radius * sweep + exit.distance(prob.end);
    Ok(CornerSolution {
        turn: Some(CornerTurn {
            direction,
            entry,
            exit,
            half_angle: sweep / 2.0,
        }),
        path,
        length,
    })
}

/// Shortest path around the corner. Both wrap directions are evaluated and
/// the shorter one returned (ties go to the smaller sweep). When the circle
/// is not alongside the segment the straight segment is returned.
pub fn solve_corner(prob: &CornerProblem) -> Result<CornerSolution> {
    prob.check()?;
    if !prob.is_corner() {
        return Ok(CornerSolution {
            turn: None,
            path: SmoothPath::straight(prob.start, prob.end),
            length: prob.start.distance(prob.end),
        });
    }
    let ccw = corner_in_direction(prob, TurnDirection::Ccw)?;
    let cw = corner_in_direction(prob, TurnDirection::Cw)?;
    let half = |s: &CornerSolution| s.turn.map_or(0.0, |t| t.half_angle);
    let pick_cw = if (cw.length - ccw.length).abs() <= 1e-12 {
        half(&cw) < half(&ccw)
    } else {
        cw.length < ccw.length
    };
    Ok(if pick_cw { cw } else { ccw })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DescentResult {
    pub entry_angle: f64,
    pub exit_angle: f64,
    pub length: f64,
}

/// Minimizes `|start - P(a)| + r * sweep(a -> b) + |P(b) - end|` over the
/// tangent-point angles `a`, `b` by grid search followed by cyclic
/// golden-section refinement. No tangency condition is imposed; straight
/// pieces must only stay outside the circle and keep its center on the
/// turn side.
pub fn descend_corner(prob: &CornerProblem, direction: TurnDirection) -> DescentResult {
    let r = prob.radius;
    let on = |theta: f64| prob.center + Point::from_angle(theta) * r;
    // A chord from an outside point to P stays outside the disc iff it
    // leaves P at no more than a right angle to the outward normal.
    let outside = |p: Point, outer: Point| (p - prob.center).dot(outer - p) >= 0.0;
    let sign = direction.sign();
    let turn_side = |from: Point, to: Point| sign * (to - from).cross(prob.center - from) >= 0.0;
    let objective = |a: f64, b: f64| {
        let (pa, pb) = (on(a), on(b));
        if !outside(pa, prob.start)
            || !outside(pb, prob.end)
            || !turn_side(prob.start, pa)
            || !turn_side(pb, prob.end)
        {
            return f64::INFINITY;
        }
        prob.start.distance(pa) + r * directed_sweep(direction, a, b) + pb.distance(prob.end)
    };

    const GRID: usize = 180;
    let step = std::f64::consts::TAU / GRID as f64;
    let (mut a, mut b, mut best) = (0.0, 0.0, f64::INFINITY);
    for i in 0..GRID {
        for j in 0..GRID {
            let (x, y) = (i as f64 * step, j as f64 * step);
            let f = objective(x, y);
            if f < best {
                (a, b, best) = (x, y, f);
            }
        }
    }

    let golden = |f: &dyn Fn(f64) -> f64, center: f64, half_width: f64| -> f64 {
        let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
        let (mut lo, mut hi) = (center - half_width, center + half_width);
        let mut x1 = hi - inv_phi * (hi - lo);
        let mut x2 = lo + inv_phi * (hi - lo);
        let (mut f1, mut f2) = (f(x1), f(x2));
        while hi - lo > 1e-12 {
            if f1 <= f2 {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = f(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = f(x2);
            }
        }
        0.5 * (lo + hi)
    };

    let mut width = 2.0 * step;
    for _ in 0..60 {
        let a_new = golden(&|x| objective(x, b), a, width);
        if objective(a_new, b) <= best {
            a = a_new;
            best = objective(a, b);
        }
        let b_new = golden(&|y| objective(a, y), b, width);
        let f = objective(a, b_new);
        let improvement = best - f;
        if f <= best {
            b = b_new;
            best = f;
        }
        if improvement.abs() < 1e-13 {
            break;
        }
        width = (width * 0.5).max(1e-6);
    }
    DescentResult {
        entry_angle: a,
        exit_angle: b,
        length: best,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collinear_beyond_end_is_straight() {
        let prob = CornerProblem::new(
            Point::ORIGIN,
            Point::new(100.0, 0.0),
            Point::new(150.0, 0.0),
            10.0,
        );
        let sol = solve_corner(&prob).unwrap();
        assert!(sol.turn.is_none());
        assert_eq!(sol.length, 100.0);
        assert_eq!(sol.arc_length(10.0), 0.0);
    }

    #[test]
    fn start_inside_is_infeasible() {
        let prob = CornerProblem::new(
            Point::new(81.0, 212.0),
            Point::new(300.0, 300.0),
            Point::new(80.0, 210.0),
            10.0,
        );
        assert!(matches!(solve_corner(&prob), Err(Error::Tangency { .. })));
    }

    #[test]
    fn tangency_of_solution() {
        let prob = CornerProblem::new(
            Point::ORIGIN,
            Point::new(300.0, 300.0),
            Point::new(80.0, 210.0),
            10.0,
        );
        let sol = solve_corner(&prob).unwrap();
        let t = sol.turn.unwrap();
        assert!((t.entry - prob.center).dot(t.entry - prob.start).abs() < 1e-6);
        assert!((t.exit - prob.center).dot(t.exit - prob.end).abs() < 1e-6);
        assert_eq!(t.direction, TurnDirection::Cw);
    }

    #[test]
    fn descent_agrees_on_o_to_a() {
        let prob = CornerProblem::new(
            Point::ORIGIN,
            Point::new(300.0, 300.0),
            Point::new(80.0, 210.0),
            10.0,
        );
        let closed = corner_in_direction(&prob, TurnDirection::Cw).unwrap();
        let numeric = descend_corner(&prob, TurnDirection::Cw);
        assert!(
            (closed.length - numeric.length).abs() < 1e-6,
            "{} {:?}",
            closed.length,
            numeric
        );
    }
}
