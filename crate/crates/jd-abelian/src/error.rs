use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("homomorphism is not well defined: relator {relator} maps to a nonzero element")]
    NotWellDefined { relator: usize },
    #[error("element is not in the subgroup")]
    NotInSubgroup,
}
