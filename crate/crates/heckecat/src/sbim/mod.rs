//! Graded R-bimodules with decomposition data: standard and Bott–Samelson objects,
//! Hom spaces, characters and Krull–Schmidt decomposition.

pub mod character;
pub mod decompose;
pub mod lemmas;
pub mod morphism;
pub mod object;
pub mod pmat;
pub mod qlin;
pub mod upoly;

pub use morphism::Morphism;
pub use object::{LocVec, SBimObject};
pub use pmat::PMat;
