//! Seifert data recomputed from an explicit group, with no closed forms involved.

use std::collections::BTreeSet;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::base::{base_group, euler_oracle, BaseActionGroup, SingularPoint};
use super::lattice::{slope_invariant, torus_quotient_map, TorusLattice};
use crate::engine::{
    singular_set, underlying_space, LocalInvariant, SeifertData, TopologyReport, Underlying,
};
use crate::error::{Error, Result};
use crate::groups::{FamilyId, PairGroup};
use crate::quaternion::{snap_angle, ComplexQuaternion, SpherePoint};
use crate::Rational;

fn frac(x: Rational) -> Rational {
    x - x.floor()
}

/// Unit quaternion `w` with `h ↦ h w⁻¹` carrying the fiber over `p` to the fiber over `∞`.
fn conjugator(p: &SpherePoint) -> ComplexQuaternion {
    match p {
        SpherePoint::Infinity => {
            ComplexQuaternion::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
        }
        SpherePoint::Finite(z) => {
            let w2 = 1.0 / (1.0 + z.norm_sqr()).sqrt();
            ComplexQuaternion::new(z * w2, Complex64::new(w2, 0.0))
        }
    }
}

/// Rotation angles `(disc, core)` of the orientation-preserving stabilizer of the fiber over
/// `point`, after moving that fiber to the one over `∞`.
pub fn stabilizer_angles(
    g: &PairGroup,
    base: &BaseActionGroup,
    point: &SingularPoint,
) -> Result<Vec<(Rational, Rational)>> {
    let w = conjugator(&point.sphere_point());
    let w_inv = w.conjugate();
    let bound = 2 * g.phi_order();
    let mut out = BTreeSet::new();
    for (e, &iso) in g.elements.iter().zip(&base.element_isometry) {
        let left = e.left.as_circle().ok_or(Error::NotHopfPreserving)?;
        let induced = &base.isometries[iso];
        if left.has_j() || !induced.fixes(&point.point) {
            continue;
        }
        let c = w.mul(&e.right.to_complex_pair()).mul(&w_inv);
        if c.z2.norm() > 1e-6 {
            return Err(Error::Internal(format!(
                "conjugated stabilizer element {e:?} is not diagonal"
            )));
        }
        let turn = c.z1.arg() / std::f64::consts::TAU;
        let beta = frac(snap_angle(turn.rem_euclid(1.0), bound)?);
        let alpha = left.angle();
        out.insert((frac(alpha + beta), frac(alpha - beta)));
    }
    Ok(out.into_iter().collect())
}

/// Invariant from the quotient-map recipe when the stabilizer is cyclic, `None` otherwise.
fn cyclic_invariant(points: &[(Rational, Rational)]) -> Result<Option<LocalInvariant>> {
    let size = points.len() as i64;
    let Some(&(disc, core)) = points
        .iter()
        .find(|(x, y)| x.denom().lcm(y.denom()) == size)
    else {
        return Ok(None);
    };
    let e = size;
    let g = (disc * e).to_integer();
    let d = (core * e).to_integer();
    let map = torus_quotient_map(d, e, g)?;
    Ok(Some(slope_invariant(&map, (1, 1))))
}

/// Local invariant of every exceptional fiber, one per orbit of singular base points.
pub fn exceptional_fibers_oracle(
    g: &PairGroup,
    base: &BaseActionGroup,
) -> Result<Vec<LocalInvariant>> {
    let mut out = Vec::new();
    for point in &base.singular_points {
        let angles = stabilizer_angles(g, base, point)?;
        let lattice = TorusLattice::generated_by(&angles);
        if lattice.group_order() != angles.len() as i64 {
            return Err(Error::Internal("stabilizer is not closed".into()));
        }
        let inv = lattice.local_invariant(point.location)?;
        if inv.den != point.order as i64 {
            return Err(Error::Internal(format!(
                "invariant {inv} does not match the base stabilizer of order {}",
                point.order
            )));
        }
        if let Some(recipe) = cyclic_invariant(&angles)? {
            if (recipe.normalized_num(), recipe.den) != (inv.normalized_num(), inv.den) {
                return Err(Error::Internal(format!(
                    "cyclic recipe gives {recipe}, lattice gives {inv}"
                )));
            }
        }
        out.push(inv);
    }
    Ok(out)
}

/// Lens space of an abelian quotient, from the torus action of the whole group.
pub fn lens_oracle(g: &PairGroup) -> Result<Underlying> {
    let mut points = BTreeSet::new();
    for e in &g.elements {
        let (Some(l), Some(r)) = (e.left.as_circle(), e.right.as_circle()) else {
            return Err(Error::Precondition("group is not abelian".into()));
        };
        if l.has_j() || r.has_j() {
            return Err(Error::Precondition("group is not abelian".into()));
        }
        points.insert((frac(l.angle() - r.angle()), frac(l.angle() + r.angle())));
    }
    let points: Vec<_> = points.into_iter().collect();
    let (p, q) = TorusLattice::generated_by(&points).lens();
    Ok(Underlying::lens(p, q))
}

/// Everything the oracle recomputes for one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub seifert: SeifertData,
    pub topology: TopologyReport,
    pub base_order: u64,
    pub phi_order: u64,
}

pub fn oracle_report(g: &PairGroup) -> Result<OracleReport> {
    let base = base_group(g)?;
    let euler = euler_oracle(g, &base);
    let invariants = exceptional_fibers_oracle(g, &base)?;
    let seifert = SeifertData::new(base.signature.clone(), invariants, euler);
    let underlying = if matches!(g.spec.family, FamilyId::F1 | FamilyId::F1p) {
        lens_oracle(g)?
    } else {
        underlying_space(&seifert, &g.spec, None)
    };
    let topology = TopologyReport {
        underlying,
        singular_components: singular_set(&seifert, None),
    };
    Ok(OracleReport {
        seifert,
        topology,
        base_order: base.order,
        phi_order: g.phi_order(),
    })
}
