//! Standard subgroups of S³ and the pair groups of each family.

mod family;
mod goursat;
mod standard;

pub use family::{enumerate_specs, FamilyId, FamilySpec, Params};
pub use goursat::{goursat_group, goursat_group_literal, PairGroup};
pub use standard::{
    closure, icosahedral_generator, octahedral_generator, polyhedral_generators, rotation,
    standard_group, tetrahedral_generator, StandardGroupId,
};
