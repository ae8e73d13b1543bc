pub mod algebra;
pub mod coxeter;
pub mod error;
pub mod lattice;
pub mod specializations;
pub mod yokonuma;

pub use error::{Error, Result};
