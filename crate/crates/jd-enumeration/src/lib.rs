//! Counting cyclic words and matching them with one-loop diagrams.

pub mod counting;
pub mod cyclic;
pub mod error;
pub mod wheels;

pub use counting::{bracelets, bracelets_brute, counts, divisors, gcd, necklaces, necklaces_brute, rank_formula, totient, Counts};
pub use cyclic::{is_square, is_symmetric, least_rotation, palindrome_of, primitive_period, rotations, CyclicWord};
pub use error::EnumError;
pub use wheels::{
    doubled, one_loop, periodic_iso, periodic_symmetric_identification, phi, tensor_m, torsion_param, torsion_param_is_onto_torsion, wheel,
    wheel_expr, PeriodicIdentification, PeriodicIso, WheelMap,
};
