//! Sheaves of categories on finite spaces: constant presheaves, their
//! sheafification, global sections and the maps between them.

mod maps;
mod presheaf;
mod space;

pub use maps::{
    classify_cw_sheaf, exotic_map_demo, exotic_variant, is_in_constant_image, unit_check, CwSheafVerdict,
    ExoticDemo, ExoticVariant, FinIsoCertificate, SheafMap, UnitFailure,
};
pub use presheaf::{
    constantify, global_sections, sheafify_constant, CatPresheaf, CatSheaf, GluingVerdict, PresheafJson, RestrictionJson,
    SectionJson, SheafJson, MAX_COVER_CANDIDATES,
};
pub use space::{FiniteSpace, PointSet, SpaceJson, MAX_POINTS};
