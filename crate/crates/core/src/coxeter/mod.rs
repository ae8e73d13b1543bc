//! Finite Coxeter systems: root systems, reflections and group arithmetic.

mod golden;
mod group;
mod roots;
mod types;

pub use golden::Golden;
pub use group::{CoxeterSystem, Elem, DEFAULT_ELEMENT_CAP};
pub use roots::RootSystem;
pub use types::{CoxeterType, Family};
