mod common;

use arcroute::corner::{corner_in_direction, descend_corner, solve_corner, CornerProblem};
use arcroute::path::{PathSegment, SmoothPath, TurnDirection, TurningCircle};
use arcroute::tangent::{arc_between, chain_path, common_tangents, departure_tangent, TangentKind};
use arcroute::{Error, Point};
use common::Wrap;
use proptest::prelude::*;

fn circles(wraps: &[Wrap]) -> Vec<TurningCircle> {
    wraps
        .iter()
        .map(|w| {
            let dir = if w.side > 0.0 {
                TurnDirection::Ccw
            } else {
                TurnDirection::Cw
            };
            TurningCircle::new(w.center, w.radius, dir)
        })
        .collect()
}

#[test]
fn oracle_reproduces_frozen_values() {
    let (rows, _) = common::chain(Point::ORIGIN, &common::o_to_b(), Point::new(100.0, 700.0));
    for (got, want) in rows.iter().zip(common::O_TO_B_ROWS) {
        assert!((got - want).abs() < 1e-9, "{got} vs {want}");
    }
    let (rows, _) = common::chain(Point::ORIGIN, &common::o_to_a(), Point::new(300.0, 300.0));
    assert!((rows.iter().sum::<f64>() - common::O_TO_A_TOTAL).abs() < 1e-9);
}

#[test]
fn o_to_b_chain_matches_oracle_row_by_row() {
    let (b, wraps) = (Point::new(100.0, 700.0), common::o_to_b());
    let path = chain_path(Point::ORIGIN, &circles(&wraps), b).unwrap();
    let (rows, points) = common::chain(Point::ORIGIN, &wraps, b);
    assert_eq!(path.segments.len(), rows.len());
    for (seg, want) in path.segments.iter().zip(&rows) {
        assert!((seg.length() - want).abs() < 1e-9);
    }
    // Every junction lands on the oracle's tangent points.
    let ends: Vec<Point> = path.segments.iter().map(PathSegment::end).collect();
    for (k, p) in points.iter().enumerate() {
        assert!(ends[k].distance(*p) < 1e-9, "junction {k}");
    }
    assert!((path.length() - common::O_TO_B_TOTAL).abs() < 1e-9);
}

#[test]
fn o_to_a_tangent_points() {
    let path = chain_path(
        Point::ORIGIN,
        &circles(&common::o_to_a()),
        Point::new(300.0, 300.0),
    )
    .unwrap();
    let entry = path.segments[0].end();
    let exit = path.segments[1].end();
    assert!(entry.distance(Point::new(70.50596375, 213.1405852)) < 1e-7);
    assert!(exit.distance(Point::new(76.60640429, 219.4065673)) < 1e-7);
}

#[test]
fn single_circle_chain_equals_corner_solution() {
    let prob = CornerProblem::new(
        Point::ORIGIN,
        Point::new(100.0, 378.0),
        Point::new(60.0, 300.0),
        10.0,
    );
    let sol = solve_corner(&prob).unwrap();
    let turn = sol.turn.unwrap();
    let chained = chain_path(
        prob.start,
        &[TurningCircle::new(prob.center, prob.radius, turn.direction)],
        prob.end,
    )
    .unwrap();
    assert!((chained.length() - sol.length).abs() < 1e-12);
    assert!((sol.length - 397.098618088585).abs() < 1e-9);
    assert!((sol.path.segments[0].length() - 305.777697028413).abs() < 1e-9);
}

#[test]
fn start_inside_circle_is_an_error() {
    let c = TurningCircle::ccw(Point::new(10.0, 10.0), 10.0);
    assert!(matches!(
        departure_tangent(Point::new(12.0, 9.0), &c),
        Err(Error::Tangency { .. })
    ));
}

#[test]
fn concentric_circles_have_no_common_tangent() {
    let p = Point::new(5.0, 5.0);
    assert!(matches!(
        common_tangents(p, 10.0, p, 20.0),
        Err(Error::DegenerateCircles)
    ));
}

#[test]
fn arc_between_rejects_points_off_the_circle() {
    let c = TurningCircle::ccw(Point::ORIGIN, 10.0);
    assert!(matches!(
        arc_between(&c, Point::new(10.0, 0.0), Point::new(0.0, 11.0)),
        Err(Error::OffCircle { .. })
    ));
}

fn arb_circle(lo: f64, hi: f64) -> impl Strategy<Value = (Point, f64)> {
    (lo..hi, lo..hi, 5.0..40.0f64).prop_map(|(x, y, r)| (Point::new(x, y), r))
}

proptest! {
    #[test]
    fn chord_formula_matches_arc_length(theta in 1e-3..(std::f64::consts::PI - 1e-3), start in 0.0..std::f64::consts::TAU, r in 10.0..100.0f64) {
        let c = TurningCircle::ccw(Point::new(400.0, 400.0), r);
        let arc = arc_between(&c, c.point_at(start), c.point_at(start + theta)).unwrap();
        let chord = arc.start().distance(arc.end());
        let from_chord = 2.0 * r * (chord / (2.0 * r)).asin();
        prop_assert!((from_chord - arc.length()).abs() < 1e-9);
        prop_assert!((arc.length() - r * theta).abs() < 1e-9);
    }

    #[test]
    fn common_tangents_touch_both_circles((c1, r1) in arb_circle(0.0, 200.0), (c2, r2) in arb_circle(300.0, 500.0)) {
        let ts = common_tangents(c1, r1, c2, r2).unwrap();
        prop_assert_eq!(ts.len(), 4);
        for t in ts {
            let dir = (t.to - t.from).normalized();
            prop_assert!(((t.from - c1).norm() - r1).abs() < 1e-9);
            prop_assert!(((t.to - c2).norm() - r2).abs() < 1e-9);
            prop_assert!((t.from - c1).dot(dir).abs() < 1e-9);
            prop_assert!((t.to - c2).dot(dir).abs() < 1e-9);
            let crosses = (c1 - t.from).cross(dir).signum() != (c2 - t.from).cross(dir).signum();
            prop_assert_eq!(crosses, t.kind == TangentKind::Inner);
        }
    }

    #[test]
    fn reversed_chain_has_same_length(
        (c1, _) in arb_circle(100.0, 300.0),
        (c2, _) in arb_circle(400.0, 600.0),
        d1 in any::<bool>(),
        d2 in any::<bool>(),
    ) {
        let dir = |b: bool| if b { TurnDirection::Ccw } else { TurnDirection::Cw };
        let cs = [TurningCircle::new(c1, 10.0, dir(d1)), TurningCircle::new(c2, 10.0, dir(d2))];
        let (s, e) = (Point::new(0.0, 0.0), Point::new(800.0, 800.0));
        let forward = chain_path(s, &cs, e).unwrap();
        let back: Vec<TurningCircle> = cs.iter().rev().map(|c| c.flipped()).collect();
        let backward = chain_path(e, &back, s).unwrap();
        prop_assert!((forward.length() - backward.length()).abs() < 1e-7);
    }

    #[test]
    fn chained_junctions_are_tangent(
        (c1, _) in arb_circle(100.0, 300.0),
        (c2, _) in arb_circle(400.0, 600.0),
        d1 in any::<bool>(),
        d2 in any::<bool>(),
    ) {
        let dir = |b: bool| if b { TurnDirection::Ccw } else { TurnDirection::Cw };
        let cs = [TurningCircle::new(c1, 10.0, dir(d1)), TurningCircle::new(c2, 10.0, dir(d2))];
        let path = chain_path(Point::new(0.0, 0.0), &cs, Point::new(800.0, 800.0)).unwrap();
        for pair in path.segments.windows(2) {
            prop_assert!(pair[0].end().distance(pair[1].start()) < 1e-9);
            prop_assert!(1.0 - pair[0].end_tangent().dot(pair[1].start_tangent()) < 1e-9);
        }
    }

    #[test]
    fn closed_form_matches_descent_when_blocked(
        sx in 0.0..200.0f64, sy in 0.0..200.0f64,
        ex in 300.0..500.0f64, ey in 300.0..500.0f64,
        t in 0.2..0.8f64, off in -9.5..9.5f64,
    ) {
        let (s, e) = (Point::new(sx, sy), Point::new(ex, ey));
        let normal = (e - s).normalized().perp();
        // The circle cuts the straight segment, so both wraps are genuine.
        let center = s.lerp(e, t) + normal * off;
        let prob = CornerProblem::new(s, e, center, 10.0);
        prop_assume!(s.distance(center) > 10.5 && e.distance(center) > 10.5);
        for dir in [TurnDirection::Ccw, TurnDirection::Cw] {
            let closed = corner_in_direction(&prob, dir).unwrap();
            let numeric = descend_corner(&prob, dir);
            prop_assert!((closed.length - numeric.length).abs() < 1e-6);
        }
    }
}

#[test]
fn straight_path_reversal() {
    let p = SmoothPath::straight(Point::new(1.0, 2.0), Point::new(4.0, 6.0));
    assert_eq!(p.length(), 5.0);
    assert_eq!(p.reversed().start(), Some(Point::new(4.0, 6.0)));
}
