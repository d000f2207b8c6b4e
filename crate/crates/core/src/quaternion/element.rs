use std::fmt;

use num_complex::Complex64;

use super::algebraic::AlgebraicQuaternion;
use super::circle::CircleJ;
use crate::error::{Error, Result};

/// A unit quaternion in one of the two exact representations.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Circle(CircleJ),
    Algebraic(AlgebraicQuaternion),
}

impl GroupElement {
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        match (self, rhs) {
            (Self::Circle(a), Self::Circle(b)) => Ok(Self::Circle(a.mul(b))),
            (Self::Algebraic(a), Self::Algebraic(b)) => Ok(Self::Algebraic(a.mul(b))),
            _ => Err(Error::RepresentationMismatch),
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            Self::Circle(a) => Self::Circle(a.inverse()),
            Self::Algebraic(a) => Self::Algebraic(a.conjugate()),
        }
    }

    pub fn identity_like(&self) -> Self {
        match self {
            Self::Circle(_) => Self::Circle(CircleJ::identity()),
            Self::Algebraic(_) => Self::Algebraic(AlgebraicQuaternion::identity()),
        }
    }

    pub fn negate(&self) -> Self {
        match self {
            Self::Circle(a) => Self::Circle(a.mul(&CircleJ::minus_one())),
            Self::Algebraic(a) => Self::Algebraic(a.neg()),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    pub fn as_circle(&self) -> Option<&CircleJ> {
        match self {
            Self::Circle(c) => Some(c),
            Self::Algebraic(_) => None,
        }
    }

    pub fn to_f64(&self) -> [f64; 4] {
        match self {
            Self::Circle(c) => c.to_f64(),
            Self::Algebraic(q) => q.to_f64(),
        }
    }

    /// `(z₁, z₂)` with the element written as `z₁ + z₂ j`.
    pub fn to_complex_pair(&self) -> ComplexQuaternion {
        ComplexQuaternion::from_coords(self.to_f64())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Circle(c) => write!(f, "{c:?}"),
            Self::Algebraic(q) => write!(f, "{q:?}"),
        }
    }
}

impl From<CircleJ> for GroupElement {
    fn from(c: CircleJ) -> Self {
        Self::Circle(c)
    }
}

impl From<AlgebraicQuaternion> for GroupElement {
    fn from(q: AlgebraicQuaternion) -> Self {
        Self::Algebraic(q)
    }
}

/// `(p, q) ∈ S³ × S³`, acting on quaternions by `h ↦ p h q⁻¹`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairElement {
    pub left: GroupElement,
    pub right: GroupElement,
}

impl PairElement {
    pub fn new(left: impl Into<GroupElement>, right: impl Into<GroupElement>) -> Self {
        Self {
            left: left.into(),
            right: right.into(),
        }
    }

    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        Ok(Self {
            left: self.left.multiply(&rhs.left)?,
            right: self.right.multiply(&rhs.right)?,
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            left: self.left.inverse(),
            right: self.right.inverse(),
        }
    }

    /// `Φ_{p,q}(h) = p h q⁻¹` evaluated in floating point.
    pub fn act(&self, h: &ComplexQuaternion) -> ComplexQuaternion {
        let p = self.left.to_complex_pair();
        let q = self.right.to_complex_pair();
        p.mul(h).mul(&q.conjugate())
    }
}

impl fmt::Debug for PairElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.left, self.right)
    }
}

/// Floating-point quaternion `z₁ + z₂ j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexQuaternion {
    pub z1: Complex64,
    pub z2: Complex64,
}

impl ComplexQuaternion {
    pub fn new(z1: Complex64, z2: Complex64) -> Self {
        Self { z1, z2 }
    }

    pub fn from_coords([w, x, y, z]: [f64; 4]) -> Self {
        Self::new(Complex64::new(w, x), Complex64::new(y, z))
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.z1.re, self.z1.im, self.z2.re, self.z2.im]
    }

    // (a₁ + a₂j)(b₁ + b₂j) = (a₁b₁ - a₂ b̄₂) + (a₁b₂ + a₂ b̄₁) j
    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            self.z1 * rhs.z1 - self.z2 * rhs.z2.conj(),
            self.z1 * rhs.z2 + self.z2 * rhs.z1.conj(),
        )
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.z1.conj(), -self.z2)
    }

    pub fn norm(&self) -> f64 {
        (self.z1.norm_sqr() + self.z2.norm_sqr()).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn close(a: [f64; 4], b: [f64; 4]) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12)
    }

    #[test]
    fn mixed_tags_are_rejected() {
        let a = GroupElement::from(CircleJ::j());
        let b = GroupElement::from(AlgebraicQuaternion::j());
        assert_eq!(a.multiply(&b), Err(Error::RepresentationMismatch));
    }

    #[test]
    fn i_times_j_is_k() {
        let i = GroupElement::from(AlgebraicQuaternion::i());
        let j = GroupElement::from(AlgebraicQuaternion::j());
        assert_eq!(
            i.multiply(&j).unwrap(),
            GroupElement::from(AlgebraicQuaternion::k())
        );
    }

    #[test]
    fn inverse_of_i() {
        let i = GroupElement::from(AlgebraicQuaternion::i());
        assert_eq!(
            i.inverse(),
            GroupElement::from(AlgebraicQuaternion::i().neg())
        );
    }

    #[test]
    fn circle_float_product_matches_exact() {
        let a = CircleJ::new(Rational::new(3, 7), true);
        let b = CircleJ::new(Rational::new(1, 5), false);
        let exact = a.mul(&b).to_f64();
        let fa = ComplexQuaternion::from_coords(a.to_f64());
        let fb = ComplexQuaternion::from_coords(b.to_f64());
        assert!(close(fa.mul(&fb).coords(), exact));
    }
}
