pub mod cli;
pub mod error;
pub mod field;
pub mod hecke;
pub mod linalg;
pub mod modrep;
pub mod poly;
pub mod ratfunc;
pub mod realization;
pub mod sbim;
pub mod weyl;

pub use error::{Error, Result};
