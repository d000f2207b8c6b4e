//! Finite subgroups of S³ up to conjugacy.

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::quaternion::{AlgebraicQuaternion, CircleJ, GroupElement, QuadField};
use crate::Rational;

/// `C_n`, `D*_{order}`, `T*`, `O*`, `I*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StandardGroupId {
    Cyclic(u64),
    /// Binary dihedral group of the given order (`D*_{2n} = C_n ∪ C_n j`).
    BinaryDihedral(u64),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

impl StandardGroupId {
    pub fn order(&self) -> u64 {
        match self {
            Self::Cyclic(n) | Self::BinaryDihedral(n) => *n,
            Self::BinaryTetrahedral => 24,
            Self::BinaryOctahedral => 48,
            Self::BinaryIcosahedral => 120,
        }
    }
}

impl fmt::Display for StandardGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cyclic(n) => write!(f, "C{n}"),
            Self::BinaryDihedral(n) => write!(f, "D*{n}"),
            Self::BinaryTetrahedral => f.write_str("T*"),
            Self::BinaryOctahedral => f.write_str("O*"),
            Self::BinaryIcosahedral => f.write_str("I*"),
        }
    }
}

/// Generator of `C_n`: `e^{2πi/n}`.
pub fn rotation(n: u64) -> CircleJ {
    CircleJ::rotation(1, n as i64)
}

/// `(1 + i + j + k)/2`
pub fn tetrahedral_generator() -> AlgebraicQuaternion {
    AlgebraicQuaternion::from_ints(1, 1, 1, 1).scale(Rational::new(1, 2))
}

/// `(1 + j)/√2`
pub fn octahedral_generator() -> AlgebraicQuaternion {
    let h = QuadField::sqrt2().scale(Rational::new(1, 2));
    AlgebraicQuaternion::new(h, QuadField::zero(), h, QuadField::zero())
}

/// `(τ⁻¹ + τj + k)/2` with `τ = (1 + √5)/2`.
pub fn icosahedral_generator() -> AlgebraicQuaternion {
    let q = Rational::new(1, 4);
    let zero = Rational::from(0);
    let half_tau_inv = QuadField::new(-q, zero, q, zero);
    let half_tau = QuadField::new(q, zero, q, zero);
    AlgebraicQuaternion::new(
        half_tau_inv,
        QuadField::zero(),
        half_tau,
        QuadField::rational(Rational::new(1, 2)),
    )
}

/// Generators of a polyhedral group.
pub fn polyhedral_generators(id: StandardGroupId) -> Vec<AlgebraicQuaternion> {
    let mut gens = vec![
        AlgebraicQuaternion::i(),
        AlgebraicQuaternion::j(),
        tetrahedral_generator(),
    ];
    match id {
        StandardGroupId::BinaryTetrahedral => {}
        StandardGroupId::BinaryOctahedral => gens.push(octahedral_generator()),
        StandardGroupId::BinaryIcosahedral => gens.push(icosahedral_generator()),
        _ => panic!("{id} is not polyhedral"),
    }
    gens
}

/// Smallest set containing `start` and closed under right multiplication by `gens`.
///
/// For a finite group this is the subgroup generated by `gens`. Insertion order is
/// breadth-first, so the result is deterministic.
pub fn closure<T, F>(start: T, gens: &[T], mul: F) -> Vec<T>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut seen: HashSet<T> = HashSet::new();
    let mut out = vec![start.clone()];
    seen.insert(start);
    let mut i = 0;
    while i < out.len() {
        let x = out[i].clone();
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

/// Exact element list of a standard group.
pub fn standard_group(id: StandardGroupId) -> Vec<GroupElement> {
    match id {
        StandardGroupId::Cyclic(n) => (0..n as i64)
            .map(|k| CircleJ::rotation(k, n as i64).into())
            .collect(),
        StandardGroupId::BinaryDihedral(order) => {
            let n = (order / 2) as i64;
            (0..n)
                .flat_map(|k| {
                    let c = CircleJ::rotation(k, n);
                    [c.into(), c.mul(&CircleJ::j()).into()]
                })
                .collect()
        }
        _ => closure(
            AlgebraicQuaternion::identity(),
            &polyhedral_generators(id),
            |a, b| a.mul(b),
        )
        .into_iter()
        .map(GroupElement::from)
        .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_four() {
        let g = standard_group(StandardGroupId::Cyclic(4));
        let expected: Vec<GroupElement> = vec![
            CircleJ::identity().into(),
            CircleJ::rotation(1, 4).into(),
            CircleJ::minus_one().into(),
            CircleJ::rotation(3, 4).into(),
        ];
        assert_eq!(g, expected);
        assert_eq!(g[1].to_f64().map(|x| x.round()), [0.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn polyhedral_orders() {
        for (id, order) in [
            (StandardGroupId::BinaryTetrahedral, 24),
            (StandardGroupId::BinaryOctahedral, 48),
            (StandardGroupId::BinaryIcosahedral, 120),
        ] {
            let g = standard_group(id);
            assert_eq!(g.len(), order);
            assert_eq!(id.order() as usize, order);
            let minus = GroupElement::from(AlgebraicQuaternion::identity().neg());
            assert!(g.contains(&minus));
            for x in &g {
                if let GroupElement::Algebraic(q) = x {
                    assert!(q.is_unit());
                }
            }
        }
    }

    #[test]
    fn binary_dihedral_contains_j() {
        let g = standard_group(StandardGroupId::BinaryDihedral(12));
        assert_eq!(g.len(), 12);
        assert!(g.contains(&CircleJ::j().into()));
        assert!(g.contains(&CircleJ::minus_one().into()));
    }

    #[test]
    fn tetrahedral_inside_octahedral_inside_nothing_else() {
        let t: HashSet<_> = standard_group(StandardGroupId::BinaryTetrahedral)
            .into_iter()
            .collect();
        let o: HashSet<_> = standard_group(StandardGroupId::BinaryOctahedral)
            .into_iter()
            .collect();
        assert!(t.is_subset(&o));
        assert!(!t.contains(&GroupElement::from(octahedral_generator())));
    }
}
