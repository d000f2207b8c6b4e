//! Seifert data of a fibered 3-orbifold and the operations that only rearrange it.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseKind {
    Sphere,
    Disc,
    ProjectivePlane,
}

/// A spherical 2-orbifold `X(cones; corners)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BaseSignature {
    pub kind: BaseKind,
    pub cones: Vec<u64>,
    pub corners: Vec<u64>,
}

impl BaseSignature {
    pub fn sphere(cones: &[u64]) -> Self {
        Self {
            kind: BaseKind::Sphere,
            cones: cones.to_vec(),
            corners: vec![],
        }
    }

    pub fn disc(cones: &[u64], corners: &[u64]) -> Self {
        Self {
            kind: BaseKind::Disc,
            cones: cones.to_vec(),
            corners: corners.to_vec(),
        }
    }

    pub fn projective_plane(cones: &[u64]) -> Self {
        Self {
            kind: BaseKind::ProjectivePlane,
            cones: cones.to_vec(),
            corners: vec![],
        }
    }

    /// Drops index-1 entries and sorts the rest in decreasing order.
    pub fn normalize(&self) -> Self {
        let clean = |v: &[u64]| {
            let mut v: Vec<u64> = v.iter().copied().filter(|&x| x > 1).collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        };
        Self {
            kind: self.kind,
            cones: clean(&self.cones),
            corners: clean(&self.corners),
        }
    }
}

impl fmt::Display for BaseSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u64]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self.kind {
            BaseKind::Sphere if self.cones.is_empty() => write!(f, "S²"),
            BaseKind::Sphere => write!(f, "S²({})", list(&self.cones)),
            BaseKind::ProjectivePlane if self.cones.is_empty() => write!(f, "RP²"),
            BaseKind::ProjectivePlane => write!(f, "RP²({})", list(&self.cones)),
            BaseKind::Disc if self.cones.is_empty() && self.corners.is_empty() => write!(f, "D²"),
            BaseKind::Disc => write!(f, "D²({};{})", list(&self.cones), list(&self.corners)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    ConePoint,
    CornerReflector,
}

/// Local invariant `num/den` of an exceptional fiber, kept non-normalized.
///
/// The denominator is the order of the base point the fiber projects to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocalInvariant {
    pub num: i64,
    pub den: i64,
    pub location: Location,
}

impl LocalInvariant {
    pub fn cone(num: i64, den: i64) -> Self {
        Self {
            num,
            den,
            location: Location::ConePoint,
        }
    }

    pub fn corner(num: i64, den: i64) -> Self {
        Self {
            num,
            den,
            location: Location::CornerReflector,
        }
    }

    /// Representative of the numerator in `[0, den)`.
    pub fn normalized_num(&self) -> i64 {
        self.num.rem_euclid(self.den)
    }

    /// Singularity index `gcd(p, q)` of the normalized invariant `p/q`.
    pub fn index(&self) -> i64 {
        self.normalized_num().gcd(&self.den)
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.num, self.den)
    }

    pub fn normalize(&self) -> Self {
        Self {
            num: self.normalized_num(),
            ..*self
        }
    }

    /// Sort key for comparisons that ignore the non-normalized representative.
    pub fn key(&self) -> (Location, i64, i64, i64) {
        (self.location, self.den, self.normalized_num(), self.index())
    }
}

impl fmt::Display for LocalInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// `(normalized base, sorted invariant keys, ξ, Euler number)`.
pub type CanonicalKey = (
    BaseSignature,
    Vec<(Location, i64, i64, i64)>,
    Option<u8>,
    Rational,
);

/// Base orbifold, local invariants, boundary invariant and Euler number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertData {
    pub base: BaseSignature,
    pub invariants: Vec<LocalInvariant>,
    /// Present iff the base is a disc; `None` there means no value in {0, 1} works.
    pub xi: Option<u8>,
    pub euler: Rational,
}

impl SeifertData {
    /// Assembles data and derives ξ when the base has boundary.
    pub fn new(base: BaseSignature, invariants: Vec<LocalInvariant>, euler: Rational) -> Self {
        let mut d = Self {
            base,
            invariants,
            xi: None,
            euler,
        };
        d.xi = d.derive_xi();
        d
    }

    /// The value of ξ making the somma residue an integer.
    pub fn derive_xi(&self) -> Option<u8> {
        if self.base.kind != BaseKind::Disc {
            return None;
        }
        let without = residue_without_xi(self);
        [0u8, 1]
            .into_iter()
            .find(|&xi| (without + Rational::new(xi as i64, 2)).is_integer())
    }

    /// Every invariant reduced to `[0, q)`, index-1 points dropped, ξ recomputed.
    pub fn normalize(&self) -> Self {
        let invariants = self
            .invariants
            .iter()
            .filter(|x| x.den > 1)
            .map(LocalInvariant::normalize)
            .collect();
        Self::new(self.base.normalize(), invariants, self.euler)
    }

    /// Data of the same orbifold with the opposite orientation.
    pub fn flip_orientation(&self) -> Self {
        let n = self.normalize();
        let invariants = n
            .invariants
            .iter()
            .map(|x| LocalInvariant {
                num: (-x.num).rem_euclid(x.den),
                ..*x
            })
            .collect();
        Self::new(n.base, invariants, -n.euler)
    }

    pub fn somma_residue(&self) -> Rational {
        somma_residue(self)
    }

    /// Canonical comparison key: normalized base, sorted invariant keys, ξ, Euler number.
    pub fn canonical(&self) -> CanonicalKey {
        let n = self.normalize();
        let mut keys: Vec<_> = n.invariants.iter().map(LocalInvariant::key).collect();
        keys.sort_unstable();
        (n.base, keys, n.xi, n.euler)
    }
}

fn residue_without_xi(d: &SeifertData) -> Rational {
    let half = Rational::new(1, 2);
    d.invariants
        .iter()
        .fold(d.euler, |acc, x| match x.location {
            Location::ConePoint => acc + x.value(),
            Location::CornerReflector => acc + half * x.value(),
        })
}

/// `e + Σ cone invariants + ½(Σ corner invariants + ξ)`.
pub fn somma_residue(d: &SeifertData) -> Rational {
    let xi = Rational::new(d.xi.unwrap_or(0) as i64, 2);
    residue_without_xi(d) + xi
}

/// Whether the somma residue is an integer.
pub fn somma_is_integral(d: &SeifertData) -> bool {
    somma_residue(d).is_integer() && (d.base.kind != BaseKind::Disc || d.xi.is_some())
}
