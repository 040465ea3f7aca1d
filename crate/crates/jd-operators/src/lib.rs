//! The operator calculus on Jacobi diagrams.
//!
//! `δ` and its pieces take values modulo 2; `Δ`, `⋆`, `∘` and `𝕐` are
//! integral. Operators act on [`Expr`](jd_diagram::Expr) terms through
//! their canonical representatives and are extended linearly.

pub mod delta;
pub mod doubling;
pub mod error;
pub mod half;
pub mod hom;
pub mod leibniz;
pub mod local;
pub mod named;
pub mod product;

pub use delta::{delta, delta_at, delta_double_prime, delta_prime, delta_v, delta_vw, same_label_pairs};
pub use doubling::{doubling, doubling_at, edge_join};
pub use error::OpError;
pub use half::{half_delta, half_delta_y, Half};
pub use hom::{induced_hom, induced_hom_into};
pub use leibniz::Identity;
pub use named::{apply_named, OpOutput};
pub use product::{compose, glue_along, partial_matchings, rev, star, star_i, star_matchings, y_op};
