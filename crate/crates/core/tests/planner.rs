mod common;

use arcroute::aco::AcoParams;
use arcroute::planner::{
    build_roadmap, enumerate_candidates, plan_route, KnownTargets, RoadmapNode, RouteRequest,
    CORRIDOR_SLACK,
};
use arcroute::scene::{builtin_scene, min_clearance, Scene};
use arcroute::validate::validate_path;
use arcroute::{Error, Point};
use proptest::prelude::*;

fn centers(r: &arcroute::planner::PlanResult) -> Vec<Point> {
    r.corners.iter().map(|c| c.circle.center).collect()
}

#[test]
fn o_to_a_wraps_one_corner() {
    let r = plan_route(
        &builtin_scene(),
        &RouteRequest::exact(KnownTargets::O, KnownTargets::A),
    )
    .unwrap();
    assert_eq!(centers(&r), vec![Point::new(80.0, 210.0)]);
    assert!((r.length - common::O_TO_A_TOTAL).abs() < 1e-6);
    assert_eq!(r.path.segments.len(), 3);
    assert!((r.travel_time - 96.017639004).abs() < 1e-6);
}

#[test]
fn o_to_b_follows_five_corners() {
    let r = plan_route(
        &builtin_scene(),
        &RouteRequest::exact(KnownTargets::O, KnownTargets::B),
    )
    .unwrap();
    let want = [
        (60.0, 300.0),
        (150.0, 435.0),
        (220.0, 470.0),
        (220.0, 530.0),
        (150.0, 600.0),
    ];
    assert_eq!(centers(&r), want.map(|(x, y)| Point::new(x, y)).to_vec());
    assert!((r.length - common::O_TO_B_TOTAL).abs() < 1e-6);
    assert!((r.length - 854.3759).abs() < 1.0);
    assert!(r.diagnostics.is_legal());
}

#[test]
fn roadmap_contains_reference_corners() {
    let scene = builtin_scene();
    let has = |rm: &arcroute::planner::Roadmap, x, y| {
        rm.nodes
            .iter()
            .any(|n| matches!(n, RoadmapNode::Corner { center, .. } if *center == Point::new(x, y)))
    };
    let rm = build_roadmap(&scene, KnownTargets::O, KnownTargets::B).unwrap();
    for (x, y) in [
        (60.0, 300.0),
        (150.0, 435.0),
        (220.0, 470.0),
        (220.0, 530.0),
        (150.0, 600.0),
    ] {
        assert!(has(&rm, x, y), "({x}, {y})");
    }
    let rm = build_roadmap(&scene, KnownTargets::O, KnownTargets::A).unwrap();
    assert!(has(&rm, 80.0, 210.0));
    assert!(matches!(rm.nodes[0], RoadmapNode::Start { .. }));
    assert!(matches!(rm.nodes.last(), Some(RoadmapNode::Goal { .. })));
}

#[test]
fn empty_scene_roadmap_is_one_edge() {
    let scene = Scene::empty((800.0, 800.0), 10.0).unwrap();
    let (s, g) = (Point::new(10.0, 20.0), Point::new(700.0, 500.0));
    let rm = build_roadmap(&scene, s, g).unwrap();
    assert_eq!(rm.graph.node_count(), 2);
    assert_eq!(rm.graph.weight(0, 1), s.distance(g));
}

#[test]
fn corridor_keeps_shortest_route_ascending() {
    let rm = build_roadmap(&builtin_scene(), KnownTargets::O, KnownTargets::B).unwrap();
    let corridor = rm.corridor(CORRIDOR_SLACK).unwrap();
    let n = corridor.graph.node_count();
    let (route, cost) = arcroute::graph::dijkstra_shortest(&corridor.graph, 0, n - 1).unwrap();
    let (_, full) =
        arcroute::graph::dijkstra_shortest(&rm.graph, 0, rm.graph.node_count() - 1).unwrap();
    assert_eq!(cost, full);
    assert!(route.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn enumeration_is_sorted_and_led_by_the_optimum() {
    let scene = builtin_scene();
    for goal in [KnownTargets::A, KnownTargets::B] {
        let exact = plan_route(&scene, &RouteRequest::exact(KnownTargets::O, goal)).unwrap();
        let list = enumerate_candidates(&scene, KnownTargets::O, goal, 3).unwrap();
        assert_eq!(list.len(), 3);
        assert!(list.windows(2).all(|w| w[0].length <= w[1].length));
        assert!((list[0].length - exact.length).abs() < 1e-9);
        let first: Vec<Point> = list[0].corners.iter().map(|c| c.circle.center).collect();
        assert_eq!(first, centers(&exact));
        for c in &list {
            assert!(validate_path(&c.path, &scene).is_legal());
        }
    }
}

#[test]
fn zero_k_is_rejected() {
    let r = enumerate_candidates(&builtin_scene(), KnownTargets::O, KnownTargets::A, 0);
    assert!(matches!(r, Err(Error::InvalidRequest(_))));
}

#[test]
fn aco_engine_never_beats_exact() {
    let scene = builtin_scene();
    for goal in [KnownTargets::A, KnownTargets::B] {
        let exact = plan_route(&scene, &RouteRequest::exact(KnownTargets::O, goal)).unwrap();
        for seed in 1..=5 {
            let aco = plan_route(
                &scene,
                &RouteRequest::aco(KnownTargets::O, goal, AcoParams::with_seed(seed)),
            )
            .unwrap();
            assert!(exact.length <= aco.length + 1e-9);
            assert!(aco.diagnostics.is_legal());
        }
    }
}

#[test]
fn aco_engine_is_deterministic() {
    let scene = builtin_scene();
    let req = RouteRequest::aco(KnownTargets::O, KnownTargets::B, AcoParams::with_seed(4));
    let a = plan_route(&scene, &req).unwrap();
    let b = plan_route(&scene, &req).unwrap();
    assert_eq!(a.path, b.path);
    assert_eq!(
        arcroute::report::plan_json(&a),
        arcroute::report::plan_json(&b)
    );
}

#[test]
fn o_to_c_smoke() {
    let scene = builtin_scene();
    let r = plan_route(
        &scene,
        &RouteRequest::exact(KnownTargets::O, KnownTargets::C),
    )
    .unwrap();
    assert!(r.diagnostics.is_legal());
    assert!(r.length >= KnownTargets::O.distance(KnownTargets::C));
}

#[test]
fn goal_in_hazard_zone_is_rejected() {
    let r = plan_route(
        &builtin_scene(),
        &RouteRequest::exact(KnownTargets::O, Point::new(305.0, 405.0)),
    );
    assert!(matches!(r, Err(Error::InvalidRequest(_))));
    let r = plan_route(
        &builtin_scene(),
        &RouteRequest::exact(KnownTargets::O, Point::new(900.0, 5.0)),
    );
    assert!(matches!(r, Err(Error::InvalidRequest(_))));
}

fn free_point() -> impl Strategy<Value = Point> {
    (0.0..800.0f64, 0.0..800.0f64)
        .prop_map(|(x, y)| Point::new(x, y))
        .prop_filter("outside hazard zones", |p| {
            min_clearance(*p, &builtin_scene()) >= 10.0
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn planned_paths_are_legal(s in free_point(), g in free_point()) {
        let scene = builtin_scene();
        match plan_route(&scene, &RouteRequest::exact(s, g)) {
            Ok(r) => {
                prop_assert!(r.diagnostics.is_legal());
                prop_assert!((r.length - r.path.length()).abs() < 1e-12);
                prop_assert!(r.length >= s.distance(g) - 1e-9);
                for arc in r.path.arcs() {
                    if let arcroute::path::PathSegment::Arc { circle, .. } = arc {
                        prop_assert!(circle.radius >= 10.0);
                    }
                }
            }
            Err(Error::Infeasible { .. }) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn empty_scene_gives_straight_line(s in (0.0..800.0f64, 0.0..800.0f64), g in (0.0..800.0f64, 0.0..800.0f64)) {
        let scene = Scene::empty((800.0, 800.0), 10.0).unwrap();
        let (s, g) = (Point::new(s.0, s.1), Point::new(g.0, g.1));
        let r = plan_route(&scene, &RouteRequest::exact(s, g)).unwrap();
        prop_assert_eq!(r.length, s.distance(g));
    }

    #[test]
    fn reversed_request_has_same_length(s in free_point(), g in free_point()) {
        let scene = builtin_scene();
        let fwd = plan_route(&scene, &RouteRequest::exact(s, g));
        let back = plan_route(&scene, &RouteRequest::exact(g, s));
        if let (Ok(a), Ok(b)) = (fwd, back) {
            prop_assert!((a.length - b.length).abs() < 1e-6);
        }
    }
}
