//! sl2 in characteristic p: reduced enveloping algebras, baby Verma modules and
//! closed-point fibers of translation bimodules.

mod fibers;
mod module;
mod point;
mod uchi;
mod verma;

pub use fibers::{
    hc_center_check, splitting_fiber_rank, translation_fiber, wall_crossing_fiber, CenterReport, SplittingReport,
    TranslationReport, WallCrossingReport,
};
pub use module::{scalar_of, Sl2Module};
pub use point::{casimir_scalar, dot_s, Borel, CentralPoint, PointReport};
pub use uchi::{verify_matrix_algebra, AzumayaReport, UChiAlgebra};
pub use verma::{build_baby_verma, BabyVerma, VermaReport};
