//! Exact abelian-group machinery: sparse integer matrices, Smith normal form,
//! finitely presented abelian groups, certified homomorphisms and coefficient
//! change to ℤ/2, ℚ and ℚ/ℤ.

pub mod error;
pub mod f2;
pub mod group;
pub mod hom;
pub mod matrix;
pub mod smith;

pub use error::AbelianError;
pub use f2::{f2_rank, BitVec, F2Echelon};
pub use group::{GroupElement, PresentedGroup, Structure};
pub use hom::{generated_subgroup, integer_kernel, unit, GroupHom, Lattice, Subgroup};
pub use matrix::{IntMatrix, SparseVec};
pub use num_bigint::BigInt;
pub use smith::{smith, smith_decompose, Pivot, Smith, SmithDecomposition, SnfOptions};
