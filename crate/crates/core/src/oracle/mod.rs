//! Brute-force recomputation of the Seifert data from an explicit group.

mod base;
mod compare;
mod lattice;
mod report;

pub use base::{base_group, euler_oracle, BaseActionGroup, InducedIsometry, SingularPoint};
pub use compare::{compare_reports, verify_spec, Verification};
pub use lattice::{
    slope_invariant, slope_invariant_with, torus_quotient_map, TorusLattice, TorusQuotientMap,
};
pub use report::{
    exceptional_fibers_oracle, lens_oracle, oracle_report, stabilizer_angles, OracleReport,
};
