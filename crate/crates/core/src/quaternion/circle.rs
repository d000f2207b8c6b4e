use std::fmt;

use num_traits::Zero;

use crate::Rational;

/// `e^{2πi·angle}`, optionally followed by `j`.
///
/// Exact representation for every element of `C_n` and `D*_{2n}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircleJ {
    angle: Rational,
    jflag: bool,
}

pub(crate) fn frac(x: Rational) -> Rational {
    x - x.floor()
}

impl CircleJ {
    pub fn new(angle: Rational, jflag: bool) -> Self {
        Self {
            angle: frac(angle),
            jflag,
        }
    }

    /// `e^{2πi·num/den}`
    pub fn rotation(num: i64, den: i64) -> Self {
        Self::new(Rational::new(num, den), false)
    }

    pub fn identity() -> Self {
        Self::new(Rational::zero(), false)
    }

    pub fn minus_one() -> Self {
        Self::new(Rational::new(1, 2), false)
    }

    pub fn j() -> Self {
        Self::new(Rational::zero(), true)
    }

    pub fn angle(&self) -> Rational {
        self.angle
    }

    pub fn has_j(&self) -> bool {
        self.jflag
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (t1, t2) = (self.angle, rhs.angle);
        match (self.jflag, rhs.jflag) {
            (false, false) => Self::new(t1 + t2, false),
            (true, false) => Self::new(t1 - t2, true),
            (false, true) => Self::new(t1 + t2, true),
            (true, true) => Self::new(t1 - t2 + Rational::new(1, 2), false),
        }
    }

    pub fn inverse(&self) -> Self {
        if self.jflag {
            Self::new(self.angle + Rational::new(1, 2), true)
        } else {
            Self::new(-self.angle, false)
        }
    }

    /// Coordinates `(w, x, y, z)` of `w + xi + yj + zk`.
    pub fn to_f64(&self) -> [f64; 4] {
        let theta = 2.0 * std::f64::consts::PI * (*self.angle.numer() as f64)
            / (*self.angle.denom() as f64);
        let (s, c) = theta.sin_cos();
        if self.jflag {
            // e^{iθ} j = cos θ j + sin θ k
            [0.0, 0.0, c, s]
        } else {
            [c, s, 0.0, 0.0]
        }
    }
}

impl fmt::Debug for CircleJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e(2πi·{})", self.angle)?;
        if self.jflag {
            write!(f, "·j")?;
        }
        Ok(())
    }
}
