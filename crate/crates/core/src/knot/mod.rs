pub mod alexander;
pub mod diagram;
pub mod file;
pub mod homology;
pub mod record;

pub use alexander::{
    alexander_from_presentation, alexander_from_seifert, alexander_with_column, determinant,
    integer_coefficients, integral_normal_form, twist_knot_alexander,
};
pub use file::{KnotFile, PresentationBlock};
pub use diagram::{continued_fraction, four_plat, fraction_of, two_bridge_presentation, Crossing, CrossingDiagram};
pub use homology::{
    character_from_element, linking_form, Character, LinkedAbelianGroup, SeifertLinking, SeifertMatrix,
};
pub use record::{
    branched_cover_homology, twist_knot_model, twist_knot_order, CoverHomology, HomologyRoute, KnotRecord,
    TwistKnotReport,
};
