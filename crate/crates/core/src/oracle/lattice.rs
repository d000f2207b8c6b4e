//! Exact arithmetic on finite subgroups of the torus `ℝ²/ℤ²`.

use num_integer::Integer;

use crate::engine::{mod_inverse, LocalInvariant, Location};
use crate::error::{Error, Result};
use crate::Rational;

/// Hermite basis `(A, 0), (B, C)` of `ℤ² + ⟨points⟩`, scaled by the common denominator `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusLattice {
    pub scale: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl TorusLattice {
    /// Lattice generated by `ℤ²` and the given points (first coordinate horizontal).
    pub fn generated_by(points: &[(Rational, Rational)]) -> Self {
        let scale = points
            .iter()
            .fold(1i64, |acc, (x, y)| acc.lcm(x.denom()).lcm(y.denom()));
        let mut rows: Vec<(i64, i64)> = points
            .iter()
            .map(|(x, y)| ((*x * scale).to_integer(), (*y * scale).to_integer()))
            .collect();
        rows.push((scale, 0));
        rows.push((0, scale));

        let mut top = (0i64, 0i64);
        for &(x, y) in &rows {
            if y == 0 {
                continue;
            }
            if top.1 == 0 {
                top = (x, y);
                continue;
            }
            let eg = top.1.extended_gcd(&y);
            top = (eg.x * top.0 + eg.y * x, eg.gcd);
        }
        if top.1 < 0 {
            top = (-top.0, -top.1);
        }
        let c = top.1;
        let a = rows
            .iter()
            .fold(0i64, |acc, &(x, y)| acc.gcd(&(x - (y / c) * top.0)))
            .abs();
        Self {
            scale,
            a,
            b: top.0.rem_euclid(a),
            c,
        }
    }

    /// Number of points of the group.
    pub fn group_order(&self) -> i64 {
        self.scale * self.scale / (self.a * self.c)
    }

    /// Local invariant of the quotient fibration, with the fiber along the vertical axis.
    ///
    /// The horizontal coordinate is the rotation of the normal disc, the vertical one the
    /// rotation along the core circle.
    pub fn local_invariant(&self, location: Location) -> Result<LocalInvariant> {
        let k = self.scale / self.a;
        let big_q = self.scale / self.c;
        let big_p_num = self.scale - big_q * self.b;
        if big_p_num % self.a != 0 {
            return Err(Error::Internal(format!("non-integral slope for {self:?}")));
        }
        let big_p = big_p_num / self.a;
        let j = big_p.gcd(&big_q);
        let (p, q) = (big_p / j, big_q / j);
        let p_bar = mod_inverse(p, q)
            .ok_or_else(|| Error::Internal(format!("{p} is not invertible mod {q}")))?;
        Ok(LocalInvariant {
            num: (p_bar * k).rem_euclid(q * k),
            den: q * k,
            location,
        })
    }

    /// `(p, q)` with the quotient of `S³` by this group of the standard torus action `L(p, q)`.
    pub fn lens(&self) -> (i64, i64) {
        let t = if self.b == 0 {
            1
        } else {
            self.a / self.a.gcd(&self.b)
        };
        let q = -t * self.b / self.a;
        (t, if t == 0 { 0 } else { q.rem_euclid(t) })
    }
}

/// Image of the meridian and longitude of a solid torus in its quotient by a cyclic group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusQuotientMap {
    /// Columns are the images of `μ` and `λ` in `(μ', λ')` coordinates.
    pub matrix: [[i64; 2]; 2],
    /// Order of the subgroup fixing the core pointwise, `gcd(d, e)`.
    pub core_fix_order: i64,
}

impl TorusQuotientMap {
    pub fn determinant(&self) -> i64 {
        self.matrix[0][0] * self.matrix[1][1] - self.matrix[0][1] * self.matrix[1][0]
    }
}

/// Quotient by `ρ(z₁ + z₂j) = e^{2πig/e} z₁ + e^{2πid/e} z₂j` acting on the solid torus
/// whose core is `z₂ = 0`.
pub fn torus_quotient_map(d: i64, e: i64, g: i64) -> Result<TorusQuotientMap> {
    if e < 1 {
        return Err(Error::Precondition(format!("e = {e} must be positive")));
    }
    if d.gcd(&e).gcd(&g) != 1 {
        return Err(Error::Precondition(format!("gcd({d}, {e}, {g}) must be 1")));
    }
    let k = d.gcd(&e);
    let d1 = d / k;
    let e1 = e / k;
    let d1_bar = if e1 == 1 {
        0
    } else {
        mod_inverse(d1, e1).expect("d' and e' are coprime")
    };
    Ok(TorusQuotientMap {
        matrix: [[k, -g * d1_bar], [0, e1]],
        core_fix_order: k,
    })
}

/// Local invariant read off from the image of the fiber class `pμ + qλ`.
pub fn slope_invariant(map: &TorusQuotientMap, fiber: (i64, i64)) -> LocalInvariant {
    slope_invariant_with(map, fiber, 0)
}

/// Like [`slope_invariant`], using `ā + shift·b` as the inverse of `a` mod `b`.
pub fn slope_invariant_with(
    map: &TorusQuotientMap,
    fiber: (i64, i64),
    shift: i64,
) -> LocalInvariant {
    let (p, q) = fiber;
    let x = map.matrix[0][0] * p + map.matrix[0][1] * q;
    let y = map.matrix[1][0] * p + map.matrix[1][1] * q;
    let g = x.gcd(&y).max(1);
    let (mut a, mut b) = (x / g, y / g);
    if b < 0 {
        a = -a;
        b = -b;
    }
    let a_bar = mod_inverse(a, b).unwrap_or(0) + shift * b;
    let k = map.core_fix_order;
    LocalInvariant::cone(a_bar * k, b * k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn quotient_map_examples() {
        assert_eq!(
            torus_quotient_map(1, 5, 0).unwrap().matrix,
            [[1, 0], [0, 5]]
        );
        assert_eq!(
            torus_quotient_map(2, 4, 1).unwrap().matrix,
            [[2, -1], [0, 2]]
        );
        assert_eq!(
            torus_quotient_map(3, 3, 1).unwrap().matrix,
            [[3, 0], [0, 1]]
        );
        assert!(matches!(
            torus_quotient_map(2, 4, 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn slope_examples() {
        let inv = |m| {
            let x = slope_invariant(&m, (1, 1));
            (x.num, x.den)
        };
        let map = |a, b, c| TorusQuotientMap {
            matrix: [[a, b], [0, c]],
            core_fix_order: a,
        };
        assert_eq!(inv(map(1, 0, 5)), (1, 5));
        assert_eq!(inv(map(2, -1, 2)), (2, 4));
        assert_eq!(inv(map(1, 0, 1)), (0, 1));
    }

    #[test]
    fn lattice_of_a_cyclic_group() {
        // generated by (2/5, 1/5): invariant via the cyclic recipe
        let pts: Vec<_> = (0..5).map(|k| (r(2 * k, 5), r(k, 5))).collect();
        let l = TorusLattice::generated_by(&pts);
        assert_eq!(l.group_order(), 5);
        assert_eq!((l.a, l.b, l.c), (5, 2, 1));
        let inv = l.local_invariant(Location::ConePoint).unwrap();
        let recipe = slope_invariant(&torus_quotient_map(1, 5, 2).unwrap(), (1, 1));
        assert_eq!((inv.num, inv.den), (4, 5));
        assert_eq!(recipe.key(), inv.key());
    }

    #[test]
    fn lattice_of_product_group() {
        let mut pts = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                pts.push((r(x, 3), r(y, 3)));
            }
        }
        let l = TorusLattice::generated_by(&pts);
        assert_eq!(l.group_order(), 9);
        let inv = l.local_invariant(Location::ConePoint).unwrap();
        assert_eq!((inv.num, inv.den), (0, 3));
    }
}
