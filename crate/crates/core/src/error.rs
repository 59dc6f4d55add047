use crate::geometry::Point;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("obstacle {id} is a circle and has no vertices")]
    ShapeKind { id: u32 },

    #[error("invalid scene: {0}")]
    InvalidScene(String),

    #[error("point {point} is not outside circle centered {center} with radius {radius}")]
    Tangency {
        point: Point,
        center: Point,
        radius: f64,
    },

    #[error("point {point} is {offset:.3e} units off the circle")]
    OffCircle { point: Point, offset: f64 },

    #[error("circles are concentric, no common tangent")]
    DegenerateCircles,

    #[error(
        "no common tangent between turning circle {index} at {first} and the next one at {second}"
    )]
    Chaining {
        index: usize,
        first: Point,
        second: Point,
    },

    #[error("invalid request: {0}")]
    InvalidRequest(String),

    #[error("no feasible route: {reason} (blocking obstacles: {blocking:?})")]
    Infeasible { reason: String, blocking: Vec<u32> },

    #[error("invalid chromosome: {0}")]
    InvalidChromosome(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error at line {line}, column {column}: {message}\n  | {context}")]
    Parse {
        line: usize,
        column: usize,
        context: String,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Wraps a serde_json error, capturing the offending source line.
    pub(crate) fn parse(source: &str, err: serde_json::Error) -> Self {
        let line = err.line();
        let context = source
            .lines()
            .nth(line.saturating_sub(1))
            .unwrap_or("")
            .trim_end()
            .to_string();
        let full = err.to_string();
        let suffix = format!(" at line {line} column {}", err.column());
        let message = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
        Error::Parse {
            line,
            column: err.column(),
            context,
            message,
        }
    }
}
