//! Jacobi-diagram modules as presented abelian groups.
//!
//! Connected diagrams with fixed i-degree, loop degree and leg multiset form
//! a [`Block`]: its generators are the canonical classes, its relators the
//! residual AS relators (`2x` for classes with an odd automorphism) and one
//! IHX relator per internal edge of each generator. Larger modules are
//! direct sums of blocks ([`Space`]) or symmetric products of them; zero
//! tests modulo 2 and in `⊗ ℚ/ℤ` are in [`sym`].

pub mod block;
pub mod catalog;
pub mod error;
pub mod skeleton;
pub mod space;
pub mod sym;

pub use block::{ihx_triple, internal_edges, multiset_permutations, Block, BlockId};
pub use catalog::{Catalog, Located};
pub use error::SpaceError;
pub use skeleton::skeletons;
pub use space::{ideg_bound, is_symmetric_word, label_multisets, words, Flavor, Space};
pub use sym::{equal_mod2, half_support, is_half_zero, is_zero_mod2, mod2_support, support_vectors, Monomial};
