use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("label index {index} outside genus {genus}")]
    LabelOutOfRange { index: u16, genus: u16 },
    #[error("T requires at least 3 labels, got {0}")]
    TreeArity(usize),
    #[error("O requires at least 1 label")]
    WheelArity,
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error("diagram contains a strut")]
    Strut,
    #[error("diagram is not top-substantial")]
    NotTopSubstantial,
}
