//! Subgroups of S³×S³ built from their Goursat data.

use std::collections::HashSet;

use super::family::{FamilyId, FamilySpec};
use super::standard::{
    closure, octahedral_generator, polyhedral_generators, rotation, tetrahedral_generator,
    StandardGroupId,
};
use crate::error::{Error, Result};
use crate::quaternion::{AlgebraicQuaternion, CircleJ, GroupElement, PairElement};

use FamilyId::*;
use StandardGroupId::*;

/// An explicit finite subgroup of S³×S³ containing `(-1, -1)`.
#[derive(Clone, Debug)]
pub struct PairGroup {
    pub spec: FamilySpec,
    pub elements: Vec<PairElement>,
    pub left: StandardGroupId,
    pub left_kernel: StandardGroupId,
    pub right: StandardGroupId,
    pub right_kernel: StandardGroupId,
}

impl PairGroup {
    /// Order of the image in SO(4).
    pub fn phi_order(&self) -> u64 {
        self.elements.len() as u64 / 2
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn element_set(&self) -> HashSet<PairElement> {
        self.elements.iter().copied().collect()
    }

    /// First projection.
    pub fn left_factors(&self) -> HashSet<GroupElement> {
        self.elements.iter().map(|e| e.left).collect()
    }

    /// Second projection.
    pub fn right_factors(&self) -> HashSet<GroupElement> {
        self.elements.iter().map(|e| e.right).collect()
    }

    /// Left factors of the elements whose right factor is 1.
    pub fn left_kernel_factors(&self) -> HashSet<GroupElement> {
        self.elements
            .iter()
            .filter(|e| e.right.is_identity())
            .map(|e| e.left)
            .collect()
    }

    /// Right factors of the elements whose left factor is 1.
    pub fn right_kernel_factors(&self) -> HashSet<GroupElement> {
        self.elements
            .iter()
            .filter(|e| e.left.is_identity())
            .map(|e| e.right)
            .collect()
    }
}

struct Goursat {
    left: StandardGroupId,
    left_kernel: StandardGroupId,
    right: StandardGroupId,
    right_kernel: StandardGroupId,
    generators: Vec<PairElement>,
}

fn c(n: i64) -> GroupElement {
    rotation(n as u64).into()
}

fn one() -> GroupElement {
    CircleJ::identity().into()
}

fn jay() -> GroupElement {
    CircleJ::j().into()
}

fn alg(q: AlgebraicQuaternion) -> GroupElement {
    q.into()
}

fn alg_one() -> GroupElement {
    alg(AlgebraicQuaternion::identity())
}

fn pair(l: GroupElement, r: GroupElement) -> PairElement {
    PairElement::new(l, r)
}

/// `{1} × P` for a polyhedral group `P`.
fn right_polyhedral(id: StandardGroupId) -> Vec<PairElement> {
    polyhedral_generators(id)
        .into_iter()
        .map(|q| pair(one(), alg(q)))
        .collect()
}

fn left_polyhedral(id: StandardGroupId) -> Vec<PairElement> {
    polyhedral_generators(id)
        .into_iter()
        .map(|q| pair(alg(q), alg_one()))
        .collect()
}

fn right_alg_polyhedral(id: StandardGroupId) -> Vec<PairElement> {
    polyhedral_generators(id)
        .into_iter()
        .map(|q| pair(alg_one(), alg(q)))
        .collect()
}

fn diagonal(id: StandardGroupId) -> Vec<PairElement> {
    polyhedral_generators(id)
        .into_iter()
        .map(|q| pair(alg(q), alg(q)))
        .collect()
}

fn galois_diagonal() -> Vec<PairElement> {
    polyhedral_generators(BinaryIcosahedral)
        .into_iter()
        .map(|q| pair(alg(q), alg(q.map_coords(|x| x.conj_sqrt5()))))
        .collect()
}

fn alg_minus_left() -> PairElement {
    pair(alg(AlgebraicQuaternion::identity().neg()), alg_one())
}

fn goursat_data(spec: &FamilySpec) -> Goursat {
    let (m, n, r, s) = (spec.m(), spec.n(), spec.r(), spec.s());
    let um = |k: i64| k as u64;
    let rot_pow = |den: i64, k: i64| -> GroupElement { CircleJ::rotation(k, den).into() };
    let o = || alg(octahedral_generator());
    let w = || alg(tetrahedral_generator());
    let d8 = || {
        vec![
            pair(one(), alg(AlgebraicQuaternion::i())),
            pair(one(), alg(AlgebraicQuaternion::j())),
        ]
    };
    let g = |left, left_kernel, right, right_kernel, generators| Goursat {
        left,
        left_kernel,
        right,
        right_kernel,
        generators,
    };
    match spec.family {
        F1 => g(
            Cyclic(um(2 * m * r)),
            Cyclic(um(2 * m)),
            Cyclic(um(2 * n * r)),
            Cyclic(um(2 * n)),
            vec![
                pair(c(2 * m), one()),
                pair(one(), c(2 * n)),
                pair(c(2 * m * r), rot_pow(2 * n * r, s)),
            ],
        ),
        F1p => g(
            Cyclic(um(m * r)),
            Cyclic(um(m)),
            Cyclic(um(n * r)),
            Cyclic(um(n)),
            vec![
                pair(c(m), one()),
                pair(one(), c(n)),
                pair(c(m * r), rot_pow(n * r, s)),
            ],
        ),
        F11 => g(
            BinaryDihedral(um(4 * m * r)),
            Cyclic(um(2 * m)),
            BinaryDihedral(um(4 * n * r)),
            Cyclic(um(2 * n)),
            vec![
                pair(c(2 * m), one()),
                pair(one(), c(2 * n)),
                pair(c(2 * m * r), rot_pow(2 * n * r, s)),
                pair(jay(), jay()),
            ],
        ),
        F11p => g(
            BinaryDihedral(um(2 * m * r)),
            Cyclic(um(m)),
            BinaryDihedral(um(2 * n * r)),
            Cyclic(um(n)),
            vec![
                pair(c(m), one()),
                pair(one(), c(n)),
                pair(c(m * r), rot_pow(n * r, s)),
                pair(jay(), jay()),
            ],
        ),
        F2 => g(
            Cyclic(um(2 * m)),
            Cyclic(um(2 * m)),
            BinaryDihedral(um(4 * n)),
            BinaryDihedral(um(4 * n)),
            vec![
                pair(c(2 * m), one()),
                pair(one(), c(2 * n)),
                pair(one(), jay()),
            ],
        ),
        F3 => g(
            Cyclic(um(4 * m)),
            Cyclic(um(2 * m)),
            BinaryDihedral(um(4 * n)),
            Cyclic(um(2 * n)),
            vec![
                pair(c(2 * m), one()),
                pair(one(), c(2 * n)),
                pair(c(4 * m), jay()),
            ],
        ),
        F4 => g(
            Cyclic(um(4 * m)),
            Cyclic(um(2 * m)),
            BinaryDihedral(um(8 * n)),
            BinaryDihedral(um(4 * n)),
            vec![
                pair(c(2 * m), one()),
                pair(one(), c(2 * n)),
                pair(one(), jay()),
                pair(c(4 * m), c(4 * n)),
            ],
        ),
        F34 => g(
            Cyclic(um(4 * m)),
            Cyclic(um(m)),
            BinaryDihedral(um(4 * n)),
            Cyclic(um(n)),
            vec![pair(c(m), one()), pair(one(), c(n)), pair(c(4 * m), jay())],
        ),
        F5 | F7 | F9 => {
            let p = match spec.family {
                F5 => BinaryTetrahedral,
                F7 => BinaryOctahedral,
                _ => BinaryIcosahedral,
            };
            let mut gens = vec![pair(c(2 * m), alg_one())];
            gens.extend(right_polyhedral(p));
            g(Cyclic(um(2 * m)), Cyclic(um(2 * m)), p, p, gens)
        }
        F6 => {
            let mut gens = vec![pair(c(2 * m), alg_one()), pair(c(6 * m), w())];
            gens.extend(d8());
            g(
                Cyclic(um(6 * m)),
                Cyclic(um(2 * m)),
                BinaryTetrahedral,
                BinaryDihedral(8),
                gens,
            )
        }
        F8 => {
            let mut gens = vec![pair(c(2 * m), alg_one()), pair(c(4 * m), o())];
            gens.extend(right_polyhedral(BinaryTetrahedral));
            g(
                Cyclic(um(4 * m)),
                Cyclic(um(2 * m)),
                BinaryOctahedral,
                BinaryTetrahedral,
                gens,
            )
        }
        F10 => g(
            BinaryDihedral(um(4 * m)),
            BinaryDihedral(um(4 * m)),
            BinaryDihedral(um(4 * n)),
            BinaryDihedral(um(4 * n)),
            vec![
                pair(c(2 * m), one()),
                pair(jay(), one()),
                pair(one(), c(2 * n)),
                pair(one(), jay()),
            ],
        ),
        F12 => g(
            BinaryDihedral(um(8 * m)),
            BinaryDihedral(um(4 * m)),
            BinaryDihedral(um(8 * n)),
            BinaryDihedral(um(4 * n)),
            vec![
                pair(c(2 * m), one()),
                pair(jay(), one()),
                pair(one(), c(2 * n)),
                pair(one(), jay()),
                pair(c(4 * m), c(4 * n)),
            ],
        ),
        F13 => g(
            BinaryDihedral(um(8 * m)),
            BinaryDihedral(um(4 * m)),
            BinaryDihedral(um(4 * n)),
            Cyclic(um(2 * n)),
            vec![
                pair(c(2 * m), one()),
                pair(jay(), one()),
                pair(one(), c(2 * n)),
                pair(c(4 * m), jay()),
            ],
        ),
        F33 => g(
            BinaryDihedral(um(8 * m)),
            Cyclic(um(2 * m)),
            BinaryDihedral(um(8 * n)),
            Cyclic(um(2 * n)),
            vec![
                pair(c(2 * m), one()),
                pair(one(), c(2 * n)),
                pair(c(4 * m), jay()),
                pair(jay(), c(4 * n)),
            ],
        ),
        F33p => g(
            BinaryDihedral(um(8 * m)),
            Cyclic(um(m)),
            BinaryDihedral(um(8 * n)),
            Cyclic(um(n)),
            vec![
                pair(c(m), one()),
                pair(one(), c(n)),
                pair(c(4 * m), jay()),
                pair(jay(), c(4 * n)),
            ],
        ),
        F14 | F15 | F19 => {
            let p = match spec.family {
                F14 => BinaryTetrahedral,
                F15 => BinaryOctahedral,
                _ => BinaryIcosahedral,
            };
            let mut gens = vec![pair(c(2 * m), alg_one()), pair(jay(), alg_one())];
            gens.extend(right_polyhedral(p));
            g(
                BinaryDihedral(um(4 * m)),
                BinaryDihedral(um(4 * m)),
                p,
                p,
                gens,
            )
        }
        F16 => {
            let mut gens = vec![pair(c(2 * m), alg_one()), pair(jay(), o())];
            gens.extend(right_polyhedral(BinaryTetrahedral));
            g(
                BinaryDihedral(um(4 * m)),
                Cyclic(um(2 * m)),
                BinaryOctahedral,
                BinaryTetrahedral,
                gens,
            )
        }
        F17 => {
            let mut gens = vec![
                pair(c(2 * m), alg_one()),
                pair(jay(), alg_one()),
                pair(c(4 * m), o()),
            ];
            gens.extend(right_polyhedral(BinaryTetrahedral));
            g(
                BinaryDihedral(um(8 * m)),
                BinaryDihedral(um(4 * m)),
                BinaryOctahedral,
                BinaryTetrahedral,
                gens,
            )
        }
        F18 => {
            let mut gens = vec![
                pair(c(2 * m), alg_one()),
                pair(c(6 * m), w()),
                pair(jay(), o()),
            ];
            gens.extend(d8());
            g(
                BinaryDihedral(um(12 * m)),
                Cyclic(um(2 * m)),
                BinaryOctahedral,
                BinaryDihedral(8),
                gens,
            )
        }
        F2bis => g(
            BinaryDihedral(um(4 * m)),
            BinaryDihedral(um(4 * m)),
            Cyclic(um(2 * n)),
            Cyclic(um(2 * n)),
            vec![
                pair(c(2 * m), one()),
                pair(jay(), one()),
                pair(one(), c(2 * n)),
            ],
        ),
        F3bis => g(
            BinaryDihedral(um(4 * m)),
            Cyclic(um(2 * m)),
            Cyclic(um(4 * n)),
            Cyclic(um(2 * n)),
            vec![
                pair(c(2 * m), one()),
                pair(one(), c(2 * n)),
                pair(jay(), c(4 * n)),
            ],
        ),
        F4bis => g(
            BinaryDihedral(um(8 * m)),
            BinaryDihedral(um(4 * m)),
            Cyclic(um(4 * n)),
            Cyclic(um(2 * n)),
            vec![
                pair(c(2 * m), one()),
                pair(jay(), one()),
                pair(one(), c(2 * n)),
                pair(c(4 * m), c(4 * n)),
            ],
        ),
        F13bis => g(
            BinaryDihedral(um(4 * m)),
            Cyclic(um(2 * m)),
            BinaryDihedral(um(8 * n)),
            BinaryDihedral(um(4 * n)),
            vec![
                pair(c(2 * m), one()),
                pair(one(), c(2 * n)),
                pair(one(), jay()),
                pair(jay(), c(4 * n)),
            ],
        ),
        F34bis => g(
            BinaryDihedral(um(4 * m)),
            Cyclic(um(m)),
            Cyclic(um(4 * n)),
            Cyclic(um(n)),
            vec![pair(c(m), one()), pair(one(), c(n)), pair(jay(), c(4 * n))],
        ),
        F20 | F23 | F24 | F25 | F29 | F30 => {
            let (l, rr) = match spec.family {
                F20 => (BinaryTetrahedral, BinaryTetrahedral),
                F23 => (BinaryTetrahedral, BinaryOctahedral),
                F24 => (BinaryTetrahedral, BinaryIcosahedral),
                F25 => (BinaryOctahedral, BinaryOctahedral),
                F29 => (BinaryOctahedral, BinaryIcosahedral),
                _ => (BinaryIcosahedral, BinaryIcosahedral),
            };
            let mut gens = left_polyhedral(l);
            gens.extend(right_alg_polyhedral(rr));
            g(l, l, rr, rr, gens)
        }
        F21 | F21p | F26 | F26p | F31 | F31p => {
            let p = match spec.family {
                F21 | F21p => BinaryTetrahedral,
                F26 | F26p => BinaryOctahedral,
                _ => BinaryIcosahedral,
            };
            let mut gens = diagonal(p);
            let kernel = if matches!(spec.family, F21 | F26 | F31) {
                gens.push(alg_minus_left());
                Cyclic(2)
            } else {
                Cyclic(1)
            };
            g(p, kernel, p, kernel, gens)
        }
        F26pp => {
            let mut gens = diagonal(BinaryTetrahedral);
            let oct = octahedral_generator();
            gens.push(pair(alg(oct), alg(oct.neg())));
            g(
                BinaryOctahedral,
                Cyclic(1),
                BinaryOctahedral,
                Cyclic(1),
                gens,
            )
        }
        F22 | F27 | F28 => {
            let (p, k) = match spec.family {
                F22 => (BinaryTetrahedral, BinaryDihedral(8)),
                F27 => (BinaryOctahedral, BinaryDihedral(8)),
                _ => (BinaryOctahedral, BinaryTetrahedral),
            };
            let mut gens = diagonal(p);
            let kernel_gens = match k {
                BinaryDihedral(_) => vec![AlgebraicQuaternion::i(), AlgebraicQuaternion::j()],
                _ => polyhedral_generators(k),
            };
            for q in kernel_gens {
                gens.push(pair(alg(q), alg_one()));
                gens.push(pair(alg_one(), alg(q)));
            }
            g(p, k, p, k, gens)
        }
        F32 | F32p => {
            let mut gens = galois_diagonal();
            let kernel = if spec.family == F32 {
                gens.push(alg_minus_left());
                Cyclic(2)
            } else {
                Cyclic(1)
            };
            g(BinaryIcosahedral, kernel, BinaryIcosahedral, kernel, gens)
        }
    }
}

/// Builds the explicit pair group of a family.
///
/// The spec is validated first; an even `s` in families 1 and 11 is replaced by `r - s`.
pub fn goursat_group(spec: &FamilySpec) -> Result<PairGroup> {
    build(spec.validate().map_err(Error::InvalidSpec)?)
}

/// Like [`goursat_group`] but keeps `s` as given (reduced mod `r`), so that the groups for
/// `s` and `r - s` can be compared directly.
pub fn goursat_group_literal(spec: &FamilySpec) -> Result<PairGroup> {
    let mut valid = spec.validate().map_err(Error::InvalidSpec)?;
    if valid.s.is_some() {
        valid.s = Some(spec.s().rem_euclid(spec.r()) as u64);
    }
    build(valid)
}

fn build(spec: FamilySpec) -> Result<PairGroup> {
    let data = goursat_data(&spec);
    let minus = pair(
        data.generators[0].left.identity_like().negate(),
        data.generators[0].right.identity_like().negate(),
    );
    let mut gens = data.generators;
    gens.push(minus);
    let identity = PairElement {
        left: gens[0].left.identity_like(),
        right: gens[0].right.identity_like(),
    };
    for x in &gens {
        x.multiply(&identity)?;
    }
    let elements = closure(identity, &gens, |a, b| {
        a.multiply(b).expect("generators share representation tags")
    });
    Ok(PairGroup {
        spec,
        elements,
        left: data.left,
        left_kernel: data.left_kernel,
        right: data.right,
        right_kernel: data.right_kernel,
    })
}
