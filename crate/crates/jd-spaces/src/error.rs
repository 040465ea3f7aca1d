use jd_diagram::DiagramError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpaceError {
    #[error("{what} exceeds the resource bound ({bound})")]
    Bounds { what: String, bound: String },
    #[error("term `{term}` is outside the space: {reason}")]
    OutOfFlavor { term: String, reason: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
