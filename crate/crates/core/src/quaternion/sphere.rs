//! The base of the Hopf fibration and the isometries induced on it.

use num_complex::Complex64;

use super::element::{ComplexQuaternion, GroupElement, PairElement};
use crate::error::{Error, Result};
use crate::Rational;

/// Geometric comparisons on the base sphere.
pub const GEOMETRIC_TOLERANCE: f64 = 1e-9;
/// Maximum distance allowed when recovering an exact angle.
pub const SNAP_TOLERANCE: f64 = 1e-6;

const FINITE_BOUND: f64 = 1e15;

/// A point of `S² ≅ ℂ ∪ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SpherePoint {
    Finite(Complex64),
    Infinity,
}

impl SpherePoint {
    pub fn finite(re: f64, im: f64) -> Self {
        Self::from_complex(Complex64::new(re, im))
    }

    pub fn from_complex(z: Complex64) -> Self {
        if z.norm() >= FINITE_BOUND || !z.re.is_finite() || !z.im.is_finite() {
            Self::Infinity
        } else {
            Self::Finite(z)
        }
    }

    /// `num / den`, with `∞` when the denominator vanishes.
    pub fn ratio(num: Complex64, den: Complex64) -> Self {
        if den.norm() <= num.norm() / FINITE_BOUND || den.norm() == 0.0 {
            Self::Infinity
        } else {
            Self::from_complex(num / den)
        }
    }

    /// Unit vector in ℝ³; `∞` is the north pole.
    pub fn to_unit_vector(&self) -> [f64; 3] {
        match self {
            Self::Infinity => [0.0, 0.0, 1.0],
            Self::Finite(z) => {
                let r2 = z.norm_sqr();
                let d = r2 + 1.0;
                [2.0 * z.re / d, 2.0 * z.im / d, (r2 - 1.0) / d]
            }
        }
    }

    pub fn from_unit_vector([x, y, z]: [f64; 3]) -> Self {
        if (1.0 - z).abs() < 1e-14 {
            return Self::Infinity;
        }
        Self::from_complex(Complex64::new(x, y) / (1.0 - z))
    }

    /// Chordal distance between the corresponding unit vectors.
    pub fn distance(&self, other: &Self) -> f64 {
        let a = self.to_unit_vector();
        let b = other.to_unit_vector();
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.distance(other) < GEOMETRIC_TOLERANCE
    }

    /// `λ ↦ -1/λ̄`
    pub fn antipode(&self) -> Self {
        match self {
            Self::Infinity => Self::Finite(Complex64::new(0.0, 0.0)),
            Self::Finite(z) if z.norm() == 0.0 => Self::Infinity,
            Self::Finite(z) => Self::from_complex(-Complex64::new(1.0, 0.0) / z.conj()),
        }
    }
}

/// `π(z₁ + z₂ j) = z₁ / z₂`.
pub fn hopf_project(h: &GroupElement) -> SpherePoint {
    hopf_project_f64(&h.to_complex_pair())
}

pub fn hopf_project_f64(h: &ComplexQuaternion) -> SpherePoint {
    SpherePoint::ratio(h.z1, h.z2)
}

pub type Mobius = [[Complex64; 2]; 2];

fn mobius_mul(a: &Mobius, b: &Mobius) -> Mobius {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// Matrix `M*` with `A ∘ M = M* ∘ A` for the antipodal map `A`.
fn antipodal_twist(m: &Mobius) -> Mobius {
    let [[a, b], [c, d]] = *m;
    [[d.conj(), -c.conj()], [-b.conj(), a.conj()]]
}

/// Isometry of the base sphere: a Möbius map, optionally followed by the antipodal map.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BaseIsometry {
    pub matrix: Mobius,
    pub orientation_reversing: bool,
}

impl BaseIsometry {
    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self {
            matrix: [[one, zero], [zero, one]],
            orientation_reversing: false,
        }
    }

    pub fn antipodal() -> Self {
        Self {
            orientation_reversing: true,
            ..Self::identity()
        }
    }

    /// Map induced by `h ↦ h w⁻¹` for `w = w₁ + w₂ j`.
    pub fn from_right_factor(w: &ComplexQuaternion) -> Self {
        Self {
            matrix: [[w.z1.conj(), w.z2.conj()], [-w.z2, w.z1]],
            orientation_reversing: false,
        }
    }

    fn apply_mobius(&self, p: &SpherePoint) -> SpherePoint {
        let [[a, b], [c, d]] = self.matrix;
        match p {
            SpherePoint::Infinity => SpherePoint::ratio(a, c),
            SpherePoint::Finite(z) => SpherePoint::ratio(a * z + b, c * z + d),
        }
    }

    pub fn apply(&self, p: &SpherePoint) -> SpherePoint {
        let q = self.apply_mobius(p);
        if self.orientation_reversing {
            q.antipode()
        } else {
            q
        }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        let left = if other.orientation_reversing {
            antipodal_twist(&self.matrix)
        } else {
            self.matrix
        };
        Self {
            matrix: mobius_mul(&left, &other.matrix),
            orientation_reversing: self.orientation_reversing ^ other.orientation_reversing,
        }
    }

    /// Equality up to a nonzero complex scalar on the matrix.
    pub fn approx_eq(&self, other: &Self) -> bool {
        if self.orientation_reversing != other.orientation_reversing {
            return false;
        }
        let a = self.matrix.iter().flatten().copied().collect::<Vec<_>>();
        let b = other.matrix.iter().flatten().copied().collect::<Vec<_>>();
        let pivot = (0..4)
            .max_by(|&i, &j| a[i].norm().total_cmp(&a[j].norm()))
            .expect("four entries");
        if b[pivot].norm() < GEOMETRIC_TOLERANCE {
            return false;
        }
        let scale = a[pivot] / b[pivot];
        let size = a[pivot].norm();
        a.iter()
            .zip(&b)
            .all(|(x, y)| (x - scale * y).norm() < GEOMETRIC_TOLERANCE * size.max(1.0))
    }

    /// The corresponding element of O(3) acting on unit vectors (columns are images of e₁, e₂, e₃).
    pub fn to_orthogonal(&self) -> [[f64; 3]; 3] {
        let images = [
            self.apply(&SpherePoint::finite(1.0, 0.0)).to_unit_vector(),
            self.apply(&SpherePoint::finite(0.0, 1.0)).to_unit_vector(),
            self.apply(&SpherePoint::Infinity).to_unit_vector(),
        ];
        let mut m = [[0.0; 3]; 3];
        for (col, v) in images.iter().enumerate() {
            for row in 0..3 {
                m[row][col] = v[row];
            }
        }
        m
    }
}

/// Isometry of the base induced by a pair whose left factor is of circle type.
pub fn induced_base_isometry(e: &PairElement) -> Result<BaseIsometry> {
    let left = e.left.as_circle().ok_or(Error::NotHopfPreserving)?;
    let right = BaseIsometry::from_right_factor(&e.right.to_complex_pair());
    Ok(BaseIsometry {
        orientation_reversing: left.has_j(),
        ..right
    })
}

/// Nearest rational with denominator dividing `max_denominator`.
pub fn snap_angle(x: f64, max_denominator: u64) -> Result<Rational> {
    if max_denominator == 0 {
        return Err(Error::Precondition(
            "max denominator must be positive".into(),
        ));
    }
    let d = max_denominator as f64;
    let k = (x * d).round();
    if (x - k / d).abs() > SNAP_TOLERANCE {
        return Err(Error::SnapFailure {
            value: format!("{x}"),
            max_denominator,
        });
    }
    Ok(Rational::new(k as i64, max_denominator as i64))
}
