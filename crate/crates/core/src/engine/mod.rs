//! Closed-form Seifert invariants for every family preserving the Hopf fibration.

mod abelian;
mod data;
mod table4;
mod topology;

pub use abelian::{
    abelian_singular_indices, derived_quantities, derived_quantities_with, mod_inverse,
    seifert_abelian, seifert_abelian_with, seifert_dihedral, seifert_dihedral_with,
    seifert_from_quantities, DerivedQuantities, Reading,
};
pub use data::{
    somma_is_integral, somma_residue, BaseKind, BaseSignature, CanonicalKey, LocalInvariant,
    Location, SeifertData,
};
pub use table4::{seifert_polyhedral, seifert_polyhedral_branch};
pub use topology::{
    lens_equivalent, singular_set, two_fiber_lens, underlying_space, TopologyReport, Underlying,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::FamilySpec;

/// Everything the closed forms say about one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineReport {
    pub spec: FamilySpec,
    pub seifert: SeifertData,
    pub topology: TopologyReport,
    pub derived: Option<DerivedQuantities>,
    pub provenance: String,
}

pub fn compute(spec: &FamilySpec) -> Result<EngineReport> {
    compute_with(spec, Reading::Adopted)
}

/// Like [`compute`], with an explicit reading of the abelian formulas.
pub fn compute_with(spec: &FamilySpec, reading: Reading) -> Result<EngineReport> {
    let spec = spec.validate().map_err(Error::InvalidSpec)?;
    let family = spec.family;
    if !family.is_fibered() {
        return Err(Error::UnsupportedFamily(format!(
            "family {family} leaves no fibration of S³ invariant"
        )));
    }
    let (seifert, derived, provenance) = if family.is_abelian() {
        let q = derived_quantities_with(&spec, reading)?;
        (
            seifert_abelian_with(&spec, reading)?,
            Some(q),
            format!("abelian closed form, family {family}, {reading:?} reading"),
        )
    } else if family.is_generalized_dihedral() {
        let q = derived_quantities_with(&spec, reading)?;
        (
            seifert_dihedral_with(&spec, reading)?,
            Some(q),
            format!("dihedral closed form, family {family}, {reading:?} reading"),
        )
    } else {
        let (d, label) = seifert_polyhedral_branch(&spec)?;
        (d, None, label)
    };
    let abelian = derived.filter(|_| family.is_abelian());
    let topology = TopologyReport {
        underlying: underlying_space(&seifert, &spec, derived.as_ref()),
        singular_components: singular_set(&seifert, abelian.as_ref()),
    };
    Ok(EngineReport {
        spec,
        seifert,
        topology,
        derived,
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FamilyId::*;
    use crate::Rational;

    #[test]
    fn underlying_examples() {
        let r = compute(&FamilySpec::with_mnrs(F1, 1, 1, 1, 1)).unwrap();
        assert_eq!(r.topology.underlying, Underlying::LensSpace { p: 2, q: 1 });
        let r = compute(&FamilySpec::with_mnrs(F1p, 3, 1, 2, 1)).unwrap();
        assert_eq!(r.topology.underlying, Underlying::LensSpace { p: 3, q: 1 });
        for (m, n, r_) in [(1, 1, 10), (3, 5, 2), (1, 3, 4)] {
            let r = compute(&FamilySpec::with_mnrs(F11p, m, n, r_, 1)).unwrap();
            assert_eq!(r.topology.underlying, Underlying::ThreeSphere);
        }
        let r = compute(&FamilySpec::with_mnrs(F1p, 1, 1, 10, 1)).unwrap();
        assert_eq!(r.topology.underlying, Underlying::ThreeSphere);
    }

    #[test]
    fn singular_set_examples() {
        let r = compute(&FamilySpec::with_mnrs(F1p, 1, 1, 10, 1)).unwrap();
        assert_eq!(r.topology.singular_components, vec![5]);
        let r = compute(&FamilySpec::with_mnrs(F1, 1, 1, 2, 1)).unwrap();
        assert_eq!(r.topology.singular_components, vec![2, 2]);
        let r = compute(&FamilySpec::with_mn(F2, 1, 2)).unwrap();
        assert!(r.topology.singular_components.is_empty());
    }

    #[test]
    fn non_fibered_families_are_unsupported() {
        assert!(matches!(
            compute(&FamilySpec::new(F20)),
            Err(Error::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn somma_holds_for_spot_values() {
        let r = compute(&FamilySpec::with_m(F9, 1)).unwrap();
        assert_eq!(r.seifert.somma_residue(), Rational::from(1));
        let r = compute(&FamilySpec::with_mnrs(F1, 1, 1, 2, 1)).unwrap();
        assert_eq!(r.seifert.somma_residue(), Rational::from(2));
    }
}
