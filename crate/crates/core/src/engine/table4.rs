//! Closed forms for the fibered families with a binary dihedral or polyhedral factor.

use super::data::{BaseSignature, LocalInvariant, SeifertData};
use crate::error::{Error, Result};
use crate::groups::{FamilyId, FamilySpec};
use crate::Rational;

/// Seifert data and a short description of the branch used.
pub fn seifert_polyhedral(spec: &FamilySpec) -> Result<SeifertData> {
    seifert_polyhedral_branch(spec).map(|(d, _)| d)
}

pub fn seifert_polyhedral_branch(spec: &FamilySpec) -> Result<(SeifertData, String)> {
    use FamilyId::*;
    let spec = spec.validate().map_err(Error::InvalidSpec)?;
    let (m, n) = (spec.m(), spec.n());
    let un = |x: i64| x as u64;
    let cone = LocalInvariant::cone;
    let corner = LocalInvariant::corner;
    let e = |num: i64, den: i64| Rational::new(-num, den);
    let n_even = n % 2 == 0;
    let half_sum = (m + n) / 2;

    let (base, invariants, euler, branch): (BaseSignature, Vec<LocalInvariant>, Rational, &str) =
        match spec.family {
            F2 => (
                BaseSignature::sphere(&[un(n), 2, 2]),
                vec![cone(m, n), cone(m, 2), cone(m, 2)],
                e(m, n),
                "",
            ),
            F3 => (
                BaseSignature::sphere(&[un(n), 2, 2]),
                vec![cone(m, n), cone(m + 1, 2), cone(m + 1, 2)],
                e(m, n),
                "",
            ),
            F4 => (
                BaseSignature::sphere(&[un(2 * n), 2, 2]),
                vec![cone(m + n, 2 * n), cone(m, 2), cone(m + 1, 2)],
                e(m, 2 * n),
                "",
            ),
            F34 => (
                BaseSignature::sphere(&[un(n), 2, 2]),
                vec![cone(half_sum, n), cone(m, 2), cone(m + 1, 2)],
                e(m, 2 * n),
                "",
            ),
            F10 if n_even => (
                BaseSignature::disc(&[], &[un(n), 2, 2]),
                vec![corner(m, n), corner(m, 2), corner(m, 2)],
                e(m, 2 * n),
                "n even",
            ),
            F10 => (
                BaseSignature::disc(&[2], &[un(n)]),
                vec![corner(m, n), cone(m, 2)],
                e(m, 2 * n),
                "n odd",
            ),
            F13bis if !n_even => (
                BaseSignature::disc(&[], &[un(n), 2, 2]),
                vec![corner(m, n), corner(m, 2), corner(m, 2)],
                e(m, 2 * n),
                "n odd",
            ),
            F13bis => (
                BaseSignature::disc(&[2], &[un(n)]),
                vec![corner(m, n), cone(m, 2)],
                e(m, 2 * n),
                "n even",
            ),
            F13 if n_even => (
                BaseSignature::disc(&[], &[un(n), 2, 2]),
                vec![corner(m, n), corner(m + 1, 2), corner(m + 1, 2)],
                e(m, 2 * n),
                "n even",
            ),
            F13 => (
                BaseSignature::disc(&[2], &[un(n)]),
                vec![corner(m, n), cone(m + 1, 2)],
                e(m, 2 * n),
                "n odd",
            ),
            F33 if !n_even => (
                BaseSignature::disc(&[], &[un(n), 2, 2]),
                vec![corner(m, n), corner(m + 1, 2), corner(m + 1, 2)],
                e(m, 2 * n),
                "n odd",
            ),
            F33 => (
                BaseSignature::disc(&[2], &[un(n)]),
                vec![corner(m, n), cone(m + 1, 2)],
                e(m, 2 * n),
                "n even",
            ),
            F12 => (
                BaseSignature::disc(&[], &[un(2 * n), 2, 2]),
                vec![corner(m + n, 2 * n), corner(m, 2), corner(m + 1, 2)],
                e(m, 4 * n),
                "",
            ),
            F33p => (
                BaseSignature::disc(&[], &[un(n), 2, 2]),
                vec![corner(half_sum, n), corner(m, 2), corner(m + 1, 2)],
                e(m, 4 * n),
                "",
            ),
            F2bis if n_even => (
                BaseSignature::disc(&[un(n)], &[]),
                vec![cone(m, n)],
                e(m, n),
                "n even",
            ),
            F2bis => (
                BaseSignature::projective_plane(&[un(n)]),
                vec![cone(m, n)],
                e(m, n),
                "n odd",
            ),
            F3bis if !n_even => (
                BaseSignature::disc(&[un(n)], &[]),
                vec![cone(m, n)],
                e(m, n),
                "n odd",
            ),
            F3bis => (
                BaseSignature::projective_plane(&[un(n)]),
                vec![cone(m, n)],
                e(m, n),
                "n even",
            ),
            F4bis => (
                BaseSignature::disc(&[un(2 * n)], &[]),
                vec![cone(m + n, 2 * n)],
                e(m, 2 * n),
                "",
            ),
            F34bis => (
                BaseSignature::disc(&[un(n)], &[]),
                vec![cone(half_sum, n)],
                e(m, 2 * n),
                "",
            ),
            F5 => (
                BaseSignature::sphere(&[2, 3, 3]),
                vec![cone(m, 2), cone(m, 3), cone(m, 3)],
                e(m, 6),
                "",
            ),
            F6 => (
                BaseSignature::sphere(&[2, 3, 3]),
                vec![cone(m, 2), cone(m + 1, 3), cone(m + 2, 3)],
                e(m, 6),
                "",
            ),
            F16 => (
                BaseSignature::disc(&[], &[2, 3, 3]),
                vec![corner(m, 2), corner(m, 3), corner(m, 3)],
                e(m, 12),
                "",
            ),
            F18 => (
                BaseSignature::disc(&[], &[2, 3, 3]),
                vec![corner(m, 2), corner(m + 1, 3), corner(m + 2, 3)],
                e(m, 12),
                "",
            ),
            F14 => (
                BaseSignature::disc(&[3], &[2]),
                vec![corner(m, 2), cone(m, 3)],
                e(m, 12),
                "",
            ),
            F7 => (
                BaseSignature::sphere(&[2, 3, 4]),
                vec![cone(m, 2), cone(m, 3), cone(m, 4)],
                e(m, 12),
                "",
            ),
            F8 => (
                BaseSignature::sphere(&[2, 3, 4]),
                vec![cone(m + 1, 2), cone(m, 3), cone(m + 2, 4)],
                e(m, 12),
                "",
            ),
            F15 => (
                BaseSignature::disc(&[], &[2, 3, 4]),
                vec![corner(m, 2), corner(m, 3), corner(m, 4)],
                e(m, 24),
                "",
            ),
            F17 => (
                BaseSignature::disc(&[], &[2, 3, 4]),
                vec![corner(m + 1, 2), corner(m, 3), corner(m + 2, 4)],
                e(m, 24),
                "",
            ),
            F9 => (
                BaseSignature::sphere(&[2, 3, 5]),
                vec![cone(m, 2), cone(m, 3), cone(m, 5)],
                e(m, 30),
                "",
            ),
            F19 => (
                BaseSignature::disc(&[], &[2, 3, 5]),
                vec![corner(m, 2), corner(m, 3), corner(m, 5)],
                e(m, 60),
                "",
            ),
            other => {
                return Err(Error::UnsupportedFamily(format!(
                    "{other} has no closed form in the polyhedral table"
                )))
            }
        };
    let mut label = format!("polyhedral table, family {}", spec.family);
    if !branch.is_empty() {
        label.push_str(&format!(" ({branch})"));
    }
    Ok((SeifertData::new(base, invariants, euler), label))
}
