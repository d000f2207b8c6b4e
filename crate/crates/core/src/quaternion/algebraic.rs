use std::fmt;

use super::field::QuadField;
use crate::Rational;

/// Quaternion `w + xi + yj + zk` with coordinates in ℚ(√2, √5).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraicQuaternion {
    pub w: QuadField,
    pub x: QuadField,
    pub y: QuadField,
    pub z: QuadField,
}

impl AlgebraicQuaternion {
    pub fn new(w: QuadField, x: QuadField, y: QuadField, z: QuadField) -> Self {
        Self { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Self::new(
            QuadField::from_int(w),
            QuadField::from_int(x),
            QuadField::from_int(y),
            QuadField::from_int(z),
        )
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }

    pub fn scale(&self, k: Rational) -> Self {
        Self::new(
            self.w.scale(k),
            self.x.scale(k),
            self.y.scale(k),
            self.z.scale(k),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b, c, d) = (self.w, self.x, self.y, self.z);
        let (e, f, g, h) = (rhs.w, rhs.x, rhs.y, rhs.z);
        Self::new(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_squared(&self) -> QuadField {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn is_unit(&self) -> bool {
        self.norm_squared() == QuadField::one()
    }

    /// Applies a field automorphism to every coordinate.
    pub fn map_coords(&self, f: impl Fn(&QuadField) -> QuadField) -> Self {
        Self::new(f(&self.w), f(&self.x), f(&self.y), f(&self.z))
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [
            self.w.to_f64(),
            self.x.to_f64(),
            self.y.to_f64(),
            self.z.to_f64(),
        ]
    }
}

impl fmt::Debug for AlgebraicQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) + ({})i + ({})j + ({})k",
            self.w, self.x, self.y, self.z
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (
            AlgebraicQuaternion::i(),
            AlgebraicQuaternion::j(),
            AlgebraicQuaternion::k(),
        );
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(i.mul(&i), AlgebraicQuaternion::identity().neg());
    }

    #[test]
    fn unit_conjugate_is_inverse() {
        let half = Rational::new(1, 2);
        let w = AlgebraicQuaternion::from_ints(1, 1, 1, 1).scale(half);
        assert!(w.is_unit());
        assert_eq!(w.mul(&w.conjugate()), AlgebraicQuaternion::identity());
    }
}
