//! Exact unit quaternions, the Hopf projection and induced isometries of the base sphere.

mod algebraic;
mod circle;
mod element;
mod field;
mod sphere;

pub use algebraic::AlgebraicQuaternion;
pub use circle::CircleJ;
pub use element::{ComplexQuaternion, GroupElement, PairElement};
pub use field::QuadField;
pub use sphere::{
    hopf_project, hopf_project_f64, induced_base_isometry, snap_angle, BaseIsometry, Mobius,
    SpherePoint, GEOMETRIC_TOLERANCE, SNAP_TOLERANCE,
};
