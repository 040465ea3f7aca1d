//! Free Lie algebras `Lₙ`, free quasi-Lie algebras `L′ₙ`, bracket kernels
//! and the maps tying them to tree and one-loop diagrams.
//!
//! Letters of `H` are label codes: `1+ ↦ 0, 1- ↦ 1, 2+ ↦ 2, …`.

pub mod error;
pub mod free;
pub mod kernels;
pub mod maps;
pub mod quasi;
pub mod tensor;
pub mod tree;
pub mod word;

pub use error::LieError;
pub use free::{lyndon_tree, FreeLie};
pub use kernels::{comparison_kernel, is_trivial_subgroup, pair_homs, BracketKernel};
pub use maps::*;
pub use quasi::{canonical_trees, jacobi_terms, theta, QuasiLie};
pub use tensor::{hq_coords, id_tensor_gamma, lie_bracket_map, pairs, quasi_bracket_map, triples, word_index, HTensorSpace, TensorKind};
pub use tree::{CanonicalTree, RTree, TreeCombination};
pub use word::{all_words, is_lyndon, label_letter, letter_label, lyndon_words, mobius, render_word, witt_dimension, Tensor, Word};
