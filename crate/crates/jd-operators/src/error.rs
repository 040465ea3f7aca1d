use jd_abelian::AbelianError;
use jd_diagram::DiagramError;
use jd_spaces::SpaceError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OpError {
    #[error("input contains a strut: {0}")]
    Strut(String),
    #[error("legs {v} and {w} carry different labels ({lv} vs {lw})")]
    LabelMismatch { v: usize, w: usize, lv: String, lw: String },
    #[error("legs must be distinct")]
    SameLeg,
    #[error("leg {0} out of range")]
    NoSuchLeg(usize),
    #[error("input must be connected: {0}")]
    Disconnected(String),
    #[error("left factor is not top-substantial: {0}")]
    NotTopSubstantial(String),
    #[error("unknown operator `{0}`")]
    UnknownOperator(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
}
