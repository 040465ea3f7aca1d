//! Jacobi diagrams: uni-trivalent graphs with oriented trivalent vertices and
//! legs colored by `1±, …, g±`.
//!
//! Diagrams are stored at dart level (see [`Diagram`]); [`canonicalize`]
//! produces isomorphism-invariant keys together with the orientation sign,
//! and [`Expr`] holds formal combinations of classes.

pub mod canon;
pub mod diagram;
pub mod error;
pub mod expr;
pub mod label;
pub mod parse;
pub mod workbench;

pub use canon::{canonicalize, ClassKey, SignedClass};
pub use diagram::{DartOwner, Diagram, Endpoint, Metrics};
pub use error::DiagramError;
pub use expr::{Expr, Ring, Term};
pub use label::{Label, Sign};
pub use parse::{parse_diagram, parse_expr, render_diagram, render_expr};
pub use workbench::{Embedding, Workbench};
