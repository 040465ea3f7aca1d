pub mod counting;
pub mod lie;
pub mod operators;
pub mod structure;
