use jd_abelian::AbelianError;
use jd_lie::LieError;
use jd_spaces::SpaceError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("rank formula is not integral at n={n}, g={g}")]
    NonIntegral { n: usize, g: u16 },
    #[error("length must be at least {min}, got {n}")]
    Length { n: usize, min: usize },
    #[error("{map} failed its certificate: {reason}")]
    Certificate { map: &'static str, reason: String },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
}
