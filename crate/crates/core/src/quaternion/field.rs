//! Exact arithmetic in the biquadratic field generated by √2 and √5.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// `a + b√2 + c√5 + d√10` with rational coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct QuadField {
    pub coeffs: [Rational; 4],
}

impl QuadField {
    pub const fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self {
            coeffs: [a, b, c, d],
        }
    }

    pub fn rational(a: Rational) -> Self {
        Self::new(a, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn from_int(a: i64) -> Self {
        Self::rational(Rational::from_integer(a))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `√2`
    pub fn sqrt2() -> Self {
        Self::new(
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    /// `√5`
    pub fn sqrt5() -> Self {
        Self::new(
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: Rational) -> Self {
        let [a, b, c, d] = self.coeffs;
        Self::new(a * k, b * k, c * k, d * k)
    }

    /// Galois conjugate sending `√2 ↦ -√2`.
    pub fn conj_sqrt2(&self) -> Self {
        let [a, b, c, d] = self.coeffs;
        Self::new(a, -b, c, -d)
    }

    /// Galois conjugate sending `√5 ↦ -√5`.
    pub fn conj_sqrt5(&self) -> Self {
        let [a, b, c, d] = self.coeffs;
        Self::new(a, b, -c, -d)
    }

    /// Product over the four Galois conjugates; a rational number, zero iff `self` is zero.
    pub fn norm(&self) -> Rational {
        let n2 = *self * self.conj_sqrt2();
        let full = n2 * n2.conj_sqrt5();
        debug_assert!(full.coeffs[1..].iter().all(Zero::is_zero));
        full.coeffs[0]
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let s2 = self.conj_sqrt2();
        let s5 = self.conj_sqrt5();
        let s25 = s2.conj_sqrt5();
        Some((s2 * s5 * s25).scale(n.recip()))
    }

    pub fn to_f64(&self) -> f64 {
        let f = |r: Rational| *r.numer() as f64 / *r.denom() as f64;
        let [a, b, c, d] = self.coeffs;
        f(a) + f(b) * std::f64::consts::SQRT_2 + f(c) * 5f64.sqrt() + f(d) * 10f64.sqrt()
    }

    /// Sign of the real number this element denotes.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let v = self.to_f64();
        // Nonzero field elements of the small heights used here are far from zero.
        if v > 0.0 {
            1
        } else {
            -1
        }
    }
}

impl Add for QuadField {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for (o, r) in out.coeffs.iter_mut().zip(rhs.coeffs) {
            *o += r;
        }
        out
    }
}

impl Sub for QuadField {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for QuadField {
    type Output = Self;
    fn neg(self) -> Self {
        let [a, b, c, d] = self.coeffs;
        Self::new(-a, -b, -c, -d)
    }
}

impl Mul for QuadField {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let [a1, b1, c1, d1] = self.coeffs;
        let [a2, b2, c2, d2] = rhs.coeffs;
        let two = Rational::from_integer(2);
        let five = Rational::from_integer(5);
        let ten = Rational::from_integer(10);
        // √2√5 = √10, √2√10 = 2√5, √5√10 = 5√2
        let a = a1 * a2 + two * b1 * b2 + five * c1 * c2 + ten * d1 * d2;
        let b = a1 * b2 + b1 * a2 + five * (c1 * d2 + d1 * c2);
        let c = a1 * c2 + c1 * a2 + two * (b1 * d2 + d1 * b2);
        let d = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2;
        Self::new(a, b, c, d)
    }
}

impl fmt::Debug for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "√2", "√5", "√10"];
        let mut wrote = false;
        for (c, name) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            write!(f, "{}{}", c.abs(), name)?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
