//! Hecke algebra, Kazhdan–Lusztig and p-canonical bases, antispherical module, tilting characters.

pub mod algebra;
pub mod antispherical;
pub mod laurent;
pub mod oracle;

pub use algebra::{HeckeAlgebra, HeckeElt};
pub use antispherical::AntisphericalElt;
pub use laurent::LaurentInt;
pub mod pcan;
pub mod tilting;

pub use pcan::PCanonical;
