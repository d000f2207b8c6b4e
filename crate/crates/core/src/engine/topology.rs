//! Underlying 3-manifold and singular set of a fibered quotient.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::abelian::{abelian_singular_indices, DerivedQuantities};
use super::data::{BaseKind, Location, SeifertData};
use crate::groups::{FamilyId, FamilySpec};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Underlying {
    ThreeSphere,
    LensSpace { p: u64, q: u64 },
    NotComputed(String),
}

impl Underlying {
    /// `L(p, q)` with `q` reduced mod `p`; `L(1, 0)` is the 3-sphere.
    pub fn lens(p: i64, q: i64) -> Self {
        let p = p.abs();
        match p {
            0 => Self::NotComputed("degenerate gluing".into()),
            1 => Self::ThreeSphere,
            _ => Self::LensSpace {
                p: p as u64,
                q: q.rem_euclid(p) as u64,
            },
        }
    }

    /// Homeomorphism up to orientation; `NotComputed` is compatible with anything.
    pub fn compatible(&self, other: &Self) -> bool {
        match (self, other) {
            (Self::NotComputed(_), _) | (_, Self::NotComputed(_)) => true,
            (Self::ThreeSphere, Self::ThreeSphere) => true,
            (Self::LensSpace { p, q }, Self::LensSpace { p: p2, q: q2 }) => {
                lens_equivalent(*p as i64, *q as i64, *p2 as i64, *q2 as i64)
            }
            _ => false,
        }
    }
}

impl fmt::Display for Underlying {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ThreeSphere => f.write_str("S³"),
            Self::LensSpace { p, q } => write!(f, "L({p},{q})"),
            Self::NotComputed(reason) => write!(f, "not computed ({reason})"),
        }
    }
}

/// `L(p, q) ≅ L(p, q')` iff `q' ≡ ±q^{±1} mod p`.
pub fn lens_equivalent(p: i64, q: i64, p2: i64, q2: i64) -> bool {
    if p != p2 {
        return false;
    }
    if p <= 2 {
        return true;
    }
    let q2 = q2.rem_euclid(p);
    [q, -q].into_iter().any(|c| {
        let c = c.rem_euclid(p);
        c == q2 || super::abelian::mod_inverse(c, p) == Some(q2)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyReport {
    pub underlying: Underlying,
    /// Singularity indices of the singular components, index-1 components omitted.
    pub singular_components: Vec<u64>,
}

/// Lens space glued from the two solid tori over a sphere with at most two exceptional fibers.
pub fn two_fiber_lens(d: &SeifertData) -> Underlying {
    let n = d.normalize();
    let nonzero: Vec<Rational> = n
        .invariants
        .iter()
        .map(|x| Rational::new(x.num, x.den))
        .filter(|x| *x != Rational::from(0))
        .collect();
    if nonzero.len() > 2 {
        return Underlying::NotComputed("more than two exceptional fibers".into());
    }
    let first = nonzero
        .first()
        .copied()
        .unwrap_or_else(|| Rational::from(0));
    let second = -n.euler - first;
    let (a1, b1) = (*first.denom(), *first.numer());
    let (a2, b2) = (*second.denom(), *second.numer());
    let eg = b1.extended_gcd(&a1);
    // a1·v - b1·u = 1
    let (u, v) = (-eg.x, eg.y);
    let p = (a1 * b2 + a2 * b1).abs();
    let x = -a2 * v - b2 * u;
    Underlying::lens(p, x)
}

/// Underlying manifold, from the closed forms where available.
pub fn underlying_space(
    d: &SeifertData,
    spec: &FamilySpec,
    derived: Option<&DerivedQuantities>,
) -> Underlying {
    use FamilyId::*;
    match (spec.family, derived) {
        (F1 | F1p, Some(q)) => return Underlying::lens(q.e, q.d * q.g_bar),
        (F11 | F11p, _) => return Underlying::ThreeSphere,
        _ => {}
    }
    let n = d.normalize();
    match n.base.kind {
        BaseKind::Sphere => two_fiber_lens(d),
        BaseKind::Disc => {
            let cones: Vec<_> = n
                .invariants
                .iter()
                .filter(|x| x.location == Location::ConePoint)
                .collect();
            match (cones.len(), n.base.corners.is_empty()) {
                (0, _) => Underlying::ThreeSphere,
                (1, true) => {
                    let v = Rational::new(cones[0].num, cones[0].den);
                    Underlying::lens(*v.denom(), *v.numer())
                }
                _ => Underlying::NotComputed("disc base with cone points and corners".into()),
            }
        }
        BaseKind::ProjectivePlane => Underlying::NotComputed("projective plane base".into()),
    }
}

/// Singular components with their indices.
pub fn singular_set(d: &SeifertData, derived: Option<&DerivedQuantities>) -> Vec<u64> {
    if let Some(q) = derived {
        return abelian_singular_indices(q);
    }
    let mut v: Vec<u64> = d
        .invariants
        .iter()
        .map(|x| x.index() as u64)
        .filter(|&k| k > 1)
        .collect();
    v.sort_unstable();
    v
}
