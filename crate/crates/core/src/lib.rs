//! Shortest collision-free line-and-arc paths for a point robot among convex
//! obstacles that must be kept at a clearance distance, with a minimum turn
//! radius and a radius-dependent turn-speed law.
//!
//! The crate is organised bottom-up:
//!
//! - [`scene`]: obstacles, clearance envelopes and clearance queries;
//! - [`path`], [`tangent`], [`corner`], [`speed`], [`validate`]: line/arc
//!   paths, tangent constructions, the closed-form single-corner optimum,
//!   travel time and legality checks;
//! - [`graph`], [`aco`]: weighted roadmaps, an exact shortest-path oracle
//!   and the binary-chromosome ant colony;
//! - [`planner`]: end-to-end planning over the tangent graph of a scene;
//! - [`report`], [`svg`], [`verify`]: text/JSON/SVG output and the fixture
//!   verification suite used by the `arcroute` binary.

pub mod aco;
pub mod corner;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod path;
pub mod planner;
pub mod report;
pub mod scene;
pub mod speed;
pub mod svg;
pub mod tangent;
pub mod validate;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::Point;
