use jd_abelian::AbelianError;
use jd_diagram::DiagramError;
use jd_spaces::SpaceError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("polynomial is not a Lie element (leading word {0} is not Lyndon)")]
    NotLie(String),
    #[error("expected degree {expected}, found {found}")]
    Degree { expected: usize, found: usize },
    #[error("not a tree diagram: {0}")]
    NotTree(String),
    #[error("tree is not of the form [a, T]: {0}")]
    NotLeftLeaf(String),
    #[error("{map} failed its certificate: {reason}")]
    Certificate { map: &'static str, reason: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
}
