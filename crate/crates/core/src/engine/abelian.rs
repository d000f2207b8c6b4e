//! Closed forms for the abelian families 1, 1p and their dihedral extensions 11, 11p.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::data::{BaseSignature, LocalInvariant, SeifertData};
use crate::error::{Error, Result};
use crate::groups::{FamilyId, FamilySpec};
use crate::Rational;

/// How the two printed versions of the abelian formulas are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reading {
    /// `a` from `gcd(n'+sm', n'-sm', ·)`, `b₁` from `n'-sm'`. Agrees with the oracle.
    Adopted,
    /// `a` and the `b₁`/`b₂` roles exactly as in the derivation text.
    Body,
    /// `a` from `gcd(n'-sm', m'+sn', ·)` as in the summary tables.
    Table,
}

impl Reading {
    pub const ALL: [Reading; 3] = [Reading::Adopted, Reading::Body, Reading::Table];
}

/// Intermediate integers of the abelian closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedQuantities {
    pub h: i64,
    pub m_prime: i64,
    pub n_prime: i64,
    pub a: i64,
    pub b1: i64,
    pub b2: i64,
    pub nu: i64,
    pub d: i64,
    pub g: i64,
    pub e: i64,
    pub g_bar: i64,
    pub f_bar: i64,
    pub e1: i64,
    pub e2: i64,
    /// The number whose inverse mod `n'r` is `f_bar`.
    pub f: i64,
}

/// Least positive inverse of `x` mod `modulus`; 0 when `modulus` is 1.
pub fn mod_inverse(x: i64, modulus: i64) -> Option<i64> {
    if modulus == 1 {
        return Some(0);
    }
    let g = x.extended_gcd(&modulus);
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(modulus))
}

fn exact_div(num: i64, den: i64, what: &str) -> Result<i64> {
    if den == 0 || num % den != 0 {
        return Err(Error::Internal(format!(
            "{what} = {num}/{den} is not an integer"
        )));
    }
    Ok(num / den)
}

fn is_primed(family: FamilyId) -> bool {
    matches!(family, FamilyId::F1p | FamilyId::F11p)
}

/// Quantities `a, b₁, b₂, ν, d, g, e, ḡ, f̄` for families 1, 1p, 11 and 11p.
pub fn derived_quantities(spec: &FamilySpec) -> Result<DerivedQuantities> {
    derived_quantities_with(spec, Reading::Adopted)
}

pub fn derived_quantities_with(spec: &FamilySpec, reading: Reading) -> Result<DerivedQuantities> {
    use FamilyId::*;
    if !matches!(spec.family, F1 | F1p | F11 | F11p) {
        return Err(Error::UnsupportedFamily(format!(
            "{} has no abelian closed form",
            spec.family
        )));
    }
    let spec = spec.validate().map_err(Error::InvalidSpec)?;
    let (m, n, r, s) = (spec.m(), spec.n(), spec.r(), spec.s());
    let primed = is_primed(spec.family);
    let h = m.gcd(&n);
    let (mp, np) = (m / h, n / h);
    let plus = np + s * mp;
    let minus = np - s * mp;
    let total = if primed { mp * np * r } else { 2 * mp * np * r };
    let a = match reading {
        Reading::Table => minus.gcd(&(mp + s * np)).gcd(&total),
        _ => plus.gcd(&minus).gcd(&total),
    };
    if a == 0 {
        return Err(Error::Internal("a vanishes".into()));
    }
    let swap_roles = reading == Reading::Body && !primed;
    let (b1, b2) = {
        let from_minus = (minus / a).gcd(&(total / a));
        let from_plus = (plus / a).gcd(&(total / a));
        if swap_roles {
            (from_plus, from_minus)
        } else {
            (from_minus, from_plus)
        }
    };
    let even_product = !primed && (mp * np) % 2 == 0;
    let nu = (1..=2 * np)
        .find(|&nu| {
            let an = a * nu;
            if even_product {
                np % an == 0 && (np / an).gcd(&a) == 1
            } else {
                (2 * np) % an == 0 && ((2 * np) / an).gcd(&(a / 2)) == 1
            }
        })
        .ok_or_else(|| Error::Internal(format!("no admissible nu for a = {a}")))?;
    let parity_factor = |b: i64| {
        if !primed && !even_product && r % b == 0 && (r / b) % 2 == 0 {
            2
        } else {
            1
        }
    };
    let (e1, e2) = (parity_factor(b1), parity_factor(b2));
    let (d, g, e) = if primed {
        (
            exact_div(nu * nu * a * plus + 2 * np * mp * r, 2 * a * nu * b2, "d")?,
            exact_div(nu * nu * a * minus - 2 * np * mp * r, 2 * a * nu * b1, "g")?,
            exact_div(mp * np * r, 2 * b1 * b2, "e")?,
        )
    } else {
        (
            exact_div(nu * nu * a * plus + 2 * np * mp * r, e2 * a * nu * b2, "d")?,
            exact_div(nu * nu * a * minus - 2 * np * mp * r, e1 * a * nu * b1, "g")?,
            exact_div(2 * mp * np * r, e1 * e2 * b1 * b2, "e")?,
        )
    };
    let f = nu * s + r * exact_div(2 * np, a * nu, "2n'/(a nu)")?;
    let f_bar = mod_inverse(f, np * r)
        .ok_or_else(|| Error::Internal(format!("{f} is not invertible mod {}", np * r)))?;
    let g_bar = mod_inverse(g, e)
        .ok_or_else(|| Error::Internal(format!("{g} is not invertible mod {e}")))?;
    Ok(DerivedQuantities {
        h,
        m_prime: mp,
        n_prime: np,
        a,
        b1,
        b2,
        nu,
        d,
        g,
        e,
        g_bar,
        f_bar,
        e1,
        e2,
        f,
    })
}

/// Denominator of both invariants: `nr/2` for the primed families, `nr` otherwise.
fn cone_order(spec: &FamilySpec) -> i64 {
    if is_primed(spec.family) {
        spec.n() * spec.r() / 2
    } else {
        spec.n() * spec.r()
    }
}

fn invariant_numerators(q: &DerivedQuantities) -> (i64, i64) {
    (
        q.d * q.f_bar * q.e2 * q.b2 * q.h,
        -q.g * q.f_bar * q.e1 * q.b1 * q.h,
    )
}

/// Families 1 and 1p: two cone points of equal order over the sphere.
pub fn seifert_abelian(spec: &FamilySpec) -> Result<SeifertData> {
    seifert_abelian_with(spec, Reading::Adopted)
}

pub fn seifert_abelian_with(spec: &FamilySpec, reading: Reading) -> Result<SeifertData> {
    if !matches!(spec.family, FamilyId::F1 | FamilyId::F1p) {
        return Err(Error::UnsupportedFamily(format!(
            "{} is not abelian",
            spec.family
        )));
    }
    let spec = spec.validate().map_err(Error::InvalidSpec)?;
    let q = derived_quantities_with(&spec, reading)?;
    seifert_from_quantities(&spec, &q)
}

/// Seifert data of a validated family 1, 1p, 11 or 11p spec from any choice of `q`,
/// including non-canonical representatives of `ḡ` and `f̄`.
pub fn seifert_from_quantities(spec: &FamilySpec, q: &DerivedQuantities) -> Result<SeifertData> {
    let order = cone_order(spec);
    let (p1, p2) = invariant_numerators(q);
    if spec.family.is_generalized_dihedral() {
        return Ok(SeifertData::new(
            BaseSignature::disc(&[], &[order as u64, order as u64]),
            vec![
                LocalInvariant::corner(p1, order),
                LocalInvariant::corner(p2, order),
            ],
            Rational::new(-spec.m(), spec.n() * spec.r()),
        ));
    }
    if !spec.family.is_abelian() {
        return Err(Error::UnsupportedFamily(format!(
            "{} has no abelian closed form",
            spec.family
        )));
    }
    Ok(SeifertData::new(
        BaseSignature::sphere(&[order as u64, order as u64]),
        vec![
            LocalInvariant::cone(p1, order),
            LocalInvariant::cone(p2, order),
        ],
        Rational::new(-2 * spec.m(), spec.n() * spec.r()),
    ))
}

/// Families 11 and 11p: the abelian quotient folded by a reflection through both cone points.
pub fn seifert_dihedral(spec: &FamilySpec) -> Result<SeifertData> {
    seifert_dihedral_with(spec, Reading::Adopted)
}

pub fn seifert_dihedral_with(spec: &FamilySpec, reading: Reading) -> Result<SeifertData> {
    if !matches!(spec.family, FamilyId::F11 | FamilyId::F11p) {
        return Err(Error::UnsupportedFamily(format!(
            "{} is not generalized dihedral",
            spec.family
        )));
    }
    let spec = spec.validate().map_err(Error::InvalidSpec)?;
    let q = derived_quantities_with(&spec, reading)?;
    seifert_from_quantities(&spec, &q)
}

/// Singular indices `e₂b₂h` and `e₁b₁h`, without the index-1 ones.
pub fn abelian_singular_indices(q: &DerivedQuantities) -> Vec<u64> {
    let mut v: Vec<u64> = [q.e2 * q.b2 * q.h, q.e1 * q.b1 * q.h]
        .into_iter()
        .filter(|&x| x > 1)
        .map(|x| x as u64)
        .collect();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use FamilyId::*;

    fn dq(f: FamilyId, m: u64, n: u64, r: u64, s: u64) -> DerivedQuantities {
        derived_quantities(&FamilySpec::with_mnrs(f, m, n, r, s)).unwrap()
    }

    #[test]
    fn primed_examples() {
        let q = dq(F1p, 1, 1, 10, 1);
        assert_eq!(
            (q.a, q.b1, q.b2, q.nu, q.d, q.g, q.e),
            (2, 5, 1, 1, 6, -1, 1)
        );
        let q = dq(F1p, 3, 1, 2, 1);
        assert_eq!(
            (q.a, q.b1, q.b2, q.nu, q.d, q.g, q.e, q.g_bar, q.f_bar),
            (2, 1, 1, 1, 5, -4, 3, 2, 1)
        );
    }

    #[test]
    fn unprimed_example() {
        let q = dq(F1, 1, 1, 2, 1);
        assert_eq!(
            (q.a, q.b1, q.b2, q.nu, q.e1, q.e2, q.d, q.g, q.e),
            (2, 2, 1, 1, 1, 2, 2, -1, 1)
        );
    }

    #[test]
    fn seifert_examples() {
        let d = seifert_abelian(&FamilySpec::with_mnrs(F1p, 1, 1, 10, 1)).unwrap();
        assert_eq!(d.base, BaseSignature::sphere(&[5, 5]));
        assert_eq!(d.euler, Rational::new(-1, 5));
        let nums: Vec<_> = d
            .invariants
            .iter()
            .map(|x| (x.num, x.den, x.index()))
            .collect();
        assert_eq!(nums, vec![(6, 5, 1), (5, 5, 5)]);

        let d = seifert_abelian(&FamilySpec::with_mnrs(F1p, 3, 1, 2, 1)).unwrap();
        assert_eq!(d.euler, Rational::from(-3));
        assert!(d
            .invariants
            .iter()
            .all(|x| x.normalized_num() == 0 && x.den == 1));

        let d = seifert_abelian(&FamilySpec::with_mnrs(F1, 1, 1, 2, 1)).unwrap();
        let nums: Vec<_> = d.invariants.iter().map(|x| (x.num, x.den)).collect();
        assert_eq!(nums, vec![(4, 2), (2, 2)]);
        assert_eq!(d.euler, Rational::from(-1));
    }

    #[test]
    fn dihedral_examples() {
        let d = seifert_dihedral(&FamilySpec::with_mnrs(F11p, 1, 1, 10, 1)).unwrap();
        assert_eq!(d.base, BaseSignature::disc(&[], &[5, 5]));
        assert_eq!(d.euler, Rational::new(-1, 10));
        let d = seifert_dihedral(&FamilySpec::with_mnrs(F11, 1, 1, 2, 1)).unwrap();
        assert_eq!(d.euler, Rational::new(-1, 2));
        let d = seifert_dihedral(&FamilySpec::with_mnrs(F11, 2, 1, 3, 1)).unwrap();
        assert_eq!(d.euler, Rational::new(-2, 3));
        assert_eq!(d.base, BaseSignature::disc(&[], &[3, 3]));
    }

    #[test]
    fn table_reading_can_break() {
        let spec = FamilySpec::with_mnrs(F1p, 1, 3, 4, 3);
        assert!(derived_quantities_with(&spec, Reading::Table).is_err());
        assert!(derived_quantities_with(&spec, Reading::Adopted).is_ok());
    }

    #[test]
    fn modular_inverse() {
        assert_eq!(mod_inverse(-4, 3), Some(2));
        assert_eq!(mod_inverse(5, 1), Some(0));
        assert_eq!(mod_inverse(2, 4), None);
    }
}
