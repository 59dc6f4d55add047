//! Turn-speed law and travel time along a path.

use crate::path::{PathSegment, SmoothPath};

/// Straight-line top speed, units per second.
pub const STRAIGHT_SPEED: f64 = 5.0;

/// `v(rho) = v0 / (1 + exp(10 - 0.1 rho^2))`: the fastest the robot may take
/// a turn of radius `rho` without rolling over.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpeedLaw {
    pub v0: f64,
}

impl Default for SpeedLaw {
    fn default() -> Self {
        Self { v0: STRAIGHT_SPEED }
    }
}

impl SpeedLaw {
    pub fn max_turn_speed(&self, rho: f64) -> f64 {
        self.v0 / (1.0 + (10.0 - 0.1 * rho * rho).exp())
    }

    /// Time to traverse `path` with lines at `v0` and every arc at the top
    /// speed for its radius.
    pub fn travel_time(&self, path: &SmoothPath) -> f64 {
        path.segments
            .iter()
            .map(|seg| match seg {
                PathSegment::Line { .. } => seg.length() / self.v0,
                PathSegment::Arc { circle, .. } => {
                    seg.length() / self.max_turn_speed(circle.radius)
                }
            })
            .sum()
    }
}

pub fn max_turn_speed(rho: f64) -> f64 {
    SpeedLaw::default().max_turn_speed(rho)
}

pub fn travel_time(path: &SmoothPath) -> f64 {
    SpeedLaw::default().travel_time(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::path::TurningCircle;

    #[test]
    fn half_speed_at_minimum_radius() {
        assert_eq!(max_turn_speed(10.0), 2.5);
    }

    #[test]
    fn straight_500_takes_100s() {
        let p = SmoothPath::straight(Point::ORIGIN, Point::new(300.0, 400.0));
        assert!((travel_time(&p) - 100.0).abs() < 1e-12);
    }

    #[test]
    fn full_circle_time() {
        let seg = PathSegment::Arc {
            circle: TurningCircle::ccw(Point::ORIGIN, 10.0),
            start_angle: 0.0,
            end_angle: std::f64::consts::TAU,
        };
        let t = travel_time(&SmoothPath::new(vec![seg]));
        assert!((t - 8.0 * std::f64::consts::PI).abs() < 1e-12);
    }
}
