//! The isometry group induced on the base sphere and its quotient 2-orbifold.

use std::collections::HashMap;

use crate::engine::{BaseKind, BaseSignature, Location};
use crate::error::{Error, Result};
use crate::groups::PairGroup;
use crate::quaternion::{induced_base_isometry, BaseIsometry, GroupElement, SpherePoint};
use crate::Rational;

/// Tolerance for points of S² being equal.
const POINT_TOLERANCE: f64 = 1e-7;
/// Tolerance for a point lying on a mirror circle.
const INCIDENCE_TOLERANCE: f64 = 1e-6;

type Vec3 = [f64; 3];
type Mat3 = [[f64; 3]; 3];

fn mat_vec(m: &Mat3, v: &Vec3) -> Vec3 {
    [0, 1, 2].map(|i| m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2])
}

fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm(v: &Vec3) -> f64 {
    dot(v, v).sqrt()
}

fn unit(v: Vec3) -> Vec3 {
    let n = norm(&v);
    v.map(|x| x / n)
}

fn dist(a: &Vec3, b: &Vec3) -> f64 {
    norm(&[a[0] - b[0], a[1] - b[1], a[2] - b[2]])
}

fn det(m: &Mat3) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn trace(m: &Mat3) -> f64 {
    m[0][0] + m[1][1] + m[2][2]
}

fn largest_column(m: &Mat3) -> Vec3 {
    (0..3)
        .map(|c| [m[0][c], m[1][c], m[2][c]])
        .max_by(|a, b| norm(a).total_cmp(&norm(b)))
        .expect("three columns")
}

/// Rotation axis (one of the two fixed points) of a nontrivial rotation.
fn rotation_axis(m: &Mat3) -> Vec3 {
    let v = [m[2][1] - m[1][2], m[0][2] - m[2][0], m[1][0] - m[0][1]];
    if norm(&v) > 1e-6 {
        unit(v)
    } else {
        let mut plus = *m;
        for (i, row) in plus.iter_mut().enumerate() {
            row[i] += 1.0;
        }
        unit(largest_column(&plus))
    }
}

/// Canonical sort key of a point, used to pick deterministic orbit representatives.
fn point_key(v: &Vec3) -> [i64; 3] {
    v.map(|x| (x * 1e8).round() as i64)
}

/// Representative of `{x, -x}` for the right factor, so that `±x` induce the same map.
pub(crate) fn sign_class(x: &GroupElement) -> GroupElement {
    let neg = x.negate();
    let c = x.to_f64();
    let first = c.iter().find(|v| v.abs() > 1e-9).copied().unwrap_or(1.0);
    if first > 0.0 {
        *x
    } else {
        neg
    }
}

/// One isometry of the induced group, with its orthogonal matrix.
#[derive(Clone, Debug)]
pub struct InducedIsometry {
    pub isometry: BaseIsometry,
    pub matrix: Mat3,
}

impl InducedIsometry {
    pub fn is_rotation(&self) -> bool {
        !self.isometry.orientation_reversing
    }

    pub fn is_identity(&self) -> bool {
        let mut d = 0.0f64;
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let e = if i == j { 1.0 } else { 0.0 };
                d = d.max((v - e).abs());
            }
        }
        d < 1e-9
    }

    pub fn is_reflection(&self) -> bool {
        self.isometry.orientation_reversing && (trace(&self.matrix) - 1.0).abs() < 1e-6
    }

    pub fn fixes(&self, v: &Vec3) -> bool {
        dist(&mat_vec(&self.matrix, v), v) < POINT_TOLERANCE
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        mat_vec(&self.matrix, v)
    }
}

/// A point of S² with nontrivial rotation stabilizer, one per orbit.
#[derive(Clone, Debug)]
pub struct SingularPoint {
    pub point: Vec3,
    /// Order of the group of rotations fixing the point.
    pub order: u64,
    pub location: Location,
}

impl SingularPoint {
    pub fn sphere_point(&self) -> SpherePoint {
        SpherePoint::from_unit_vector(self.point)
    }
}

/// The finite group induced on the base and its quotient.
#[derive(Clone, Debug)]
pub struct BaseActionGroup {
    pub isometries: Vec<InducedIsometry>,
    /// For every element of the pair group, the index of its induced isometry.
    pub element_isometry: Vec<usize>,
    pub order: u64,
    pub signature: BaseSignature,
    pub singular_points: Vec<SingularPoint>,
}

/// Induced action of a fibration-preserving group on the base sphere.
pub fn base_group(g: &PairGroup) -> Result<BaseActionGroup> {
    let mut index: HashMap<(bool, GroupElement), usize> = HashMap::new();
    let mut isometries = Vec::new();
    let mut element_isometry = Vec::with_capacity(g.elements.len());
    for e in &g.elements {
        let left = e.left.as_circle().ok_or(Error::NotHopfPreserving)?;
        let key = (left.has_j(), sign_class(&e.right));
        let next = isometries.len();
        let idx = *index.entry(key).or_insert(next);
        if idx == next {
            let isometry = induced_base_isometry(e)?;
            let matrix = isometry.to_orthogonal();
            if (det(&matrix).abs() - 1.0).abs() > 1e-6 {
                return Err(Error::Internal("induced map is not an isometry".into()));
            }
            isometries.push(InducedIsometry { isometry, matrix });
        }
        element_isometry.push(idx);
    }

    let mut candidates: Vec<Vec3> = Vec::new();
    let push = |v: Vec3, c: &mut Vec<Vec3>| {
        if !c.iter().any(|w| dist(w, &v) < POINT_TOLERANCE) {
            c.push(v);
        }
    };
    for iso in isometries
        .iter()
        .filter(|i| i.is_rotation() && !i.is_identity())
    {
        let axis = rotation_axis(&iso.matrix);
        push(axis, &mut candidates);
        push(axis.map(|x| -x), &mut candidates);
    }
    let mirrors: Vec<Vec3> = isometries
        .iter()
        .filter(|i| i.is_reflection())
        .map(|i| {
            let mut d = i.matrix;
            for (k, row) in d.iter_mut().enumerate() {
                for v in row.iter_mut() {
                    *v = -*v;
                }
                row[k] += 1.0;
            }
            unit(largest_column(&d))
        })
        .collect();
    let reversing = isometries.iter().any(|i| i.isometry.orientation_reversing);
    let kind = match (reversing, mirrors.is_empty()) {
        (false, _) => BaseKind::Sphere,
        (true, false) => BaseKind::Disc,
        (true, true) => BaseKind::ProjectivePlane,
    };

    let mut assigned = vec![false; candidates.len()];
    let mut singular_points = Vec::new();
    for i in 0..candidates.len() {
        if assigned[i] {
            continue;
        }
        let orbit: Vec<Vec3> = isometries.iter().map(|m| m.apply(&candidates[i])).collect();
        for (j, c) in candidates.iter().enumerate() {
            if orbit.iter().any(|o| dist(o, c) < POINT_TOLERANCE) {
                assigned[j] = true;
            }
        }
        let rep = *orbit
            .iter()
            .min_by_key(|v| point_key(v))
            .expect("orbit is nonempty");
        let order = isometries
            .iter()
            .filter(|m| m.is_rotation() && m.fixes(&rep))
            .count() as u64;
        if order < 2 {
            continue;
        }
        let on_mirror = mirrors
            .iter()
            .any(|n| dot(n, &rep).abs() < INCIDENCE_TOLERANCE);
        let location = if kind == BaseKind::Disc && on_mirror {
            Location::CornerReflector
        } else {
            Location::ConePoint
        };
        singular_points.push(SingularPoint {
            point: rep,
            order,
            location,
        });
    }
    singular_points.sort_by(|a, b| {
        (a.location, std::cmp::Reverse(a.order), point_key(&a.point)).cmp(&(
            b.location,
            std::cmp::Reverse(b.order),
            point_key(&b.point),
        ))
    });
    let orders = |loc: Location| -> Vec<u64> {
        singular_points
            .iter()
            .filter(|p| p.location == loc)
            .map(|p| p.order)
            .collect()
    };
    let signature = BaseSignature {
        kind,
        cones: orders(Location::ConePoint),
        corners: orders(Location::CornerReflector),
    };
    Ok(BaseActionGroup {
        order: isometries.len() as u64,
        isometries,
        element_isometry,
        signature,
        singular_points,
    })
}

/// `-|Φ(G)| / l²` where `l` is the order of the induced group on the base.
pub fn euler_oracle(g: &PairGroup, base: &BaseActionGroup) -> Rational {
    let l = base.order as i64;
    Rational::new(-(g.phi_order() as i64), l * l)
}
