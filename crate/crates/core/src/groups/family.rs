//! Family identifiers, parameter validation and the order column of the classification.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A family of finite subgroups of SO(4), named as on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum FamilyId {
    F1,
    F1p,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F11p,
    F12,
    F13,
    F14,
    F15,
    F16,
    F17,
    F18,
    F19,
    F20,
    F21,
    F21p,
    F22,
    F23,
    F24,
    F25,
    F26,
    F26p,
    F26pp,
    F27,
    F28,
    F29,
    F30,
    F31,
    F31p,
    F32,
    F32p,
    F33,
    F33p,
    F34,
    F2bis,
    F3bis,
    F4bis,
    F13bis,
    F34bis,
}

/// Which of m, n, r, s a family takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Params {
    None,
    M,
    MN,
    MNRS,
}

use FamilyId::*;

impl FamilyId {
    pub const ALL: [FamilyId; 47] = [
        F1, F1p, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F11p, F12, F13, F14, F15, F16, F17, F18,
        F19, F20, F21, F21p, F22, F23, F24, F25, F26, F26p, F26pp, F27, F28, F29, F30, F31, F31p,
        F32, F32p, F33, F33p, F34, F2bis, F3bis, F4bis, F13bis, F34bis,
    ];

    /// Families handled by the closed-form polyhedral and dihedral table.
    pub const TABLE4: [FamilyId; 25] = [
        F2, F3, F4, F5, F6, F7, F8, F9, F10, F12, F13, F14, F15, F16, F17, F18, F19, F33, F33p,
        F34, F2bis, F3bis, F4bis, F13bis, F34bis,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            F1 => "1",
            F1p => "1p",
            F2 => "2",
            F3 => "3",
            F4 => "4",
            F5 => "5",
            F6 => "6",
            F7 => "7",
            F8 => "8",
            F9 => "9",
            F10 => "10",
            F11 => "11",
            F11p => "11p",
            F12 => "12",
            F13 => "13",
            F14 => "14",
            F15 => "15",
            F16 => "16",
            F17 => "17",
            F18 => "18",
            F19 => "19",
            F20 => "20",
            F21 => "21",
            F21p => "21p",
            F22 => "22",
            F23 => "23",
            F24 => "24",
            F25 => "25",
            F26 => "26",
            F26p => "26p",
            F26pp => "26pp",
            F27 => "27",
            F28 => "28",
            F29 => "29",
            F30 => "30",
            F31 => "31",
            F31p => "31p",
            F32 => "32",
            F32p => "32p",
            F33 => "33",
            F33p => "33p",
            F34 => "34",
            F2bis => "2bis",
            F3bis => "3bis",
            F4bis => "4bis",
            F13bis => "13bis",
            F34bis => "34bis",
        }
    }

    pub fn params(&self) -> Params {
        match self {
            F1 | F1p | F11 | F11p => Params::MNRS,
            F2 | F3 | F4 | F10 | F12 | F13 | F33 | F33p | F34 | F2bis | F3bis | F4bis | F13bis
            | F34bis => Params::MN,
            F5 | F6 | F7 | F8 | F9 | F14 | F15 | F16 | F17 | F18 | F19 => Params::M,
            _ => Params::None,
        }
    }

    /// Whether the group preserves the Hopf fibration (left factor cyclic or binary dihedral).
    pub fn is_fibered(&self) -> bool {
        self.params() != Params::None
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self, F1 | F1p)
    }

    pub fn is_generalized_dihedral(&self) -> bool {
        matches!(self, F11 | F11p)
    }

    pub fn is_table4(&self) -> bool {
        self.is_fibered() && !self.is_abelian() && !self.is_generalized_dihedral()
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().to_ascii_lowercase().replace(['\'', '′'], "p");
        let t = t.strip_prefix("family").unwrap_or(&t).trim();
        Self::ALL
            .iter()
            .find(|f| f.as_str() == t)
            .copied()
            .ok_or_else(|| Error::UnsupportedFamily(s.to_string()))
    }
}

impl From<FamilyId> for String {
    fn from(f: FamilyId) -> String {
        f.as_str().to_string()
    }
}

impl TryFrom<String> for FamilyId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

/// A family together with its integer parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: FamilyId,
    pub m: Option<u64>,
    pub n: Option<u64>,
    pub r: Option<u64>,
    pub s: Option<u64>,
}

impl FamilySpec {
    pub fn new(family: FamilyId) -> Self {
        Self {
            family,
            m: None,
            n: None,
            r: None,
            s: None,
        }
    }

    pub fn with_m(family: FamilyId, m: u64) -> Self {
        Self {
            m: Some(m),
            ..Self::new(family)
        }
    }

    pub fn with_mn(family: FamilyId, m: u64, n: u64) -> Self {
        Self {
            m: Some(m),
            n: Some(n),
            ..Self::new(family)
        }
    }

    pub fn with_mnrs(family: FamilyId, m: u64, n: u64, r: u64, s: u64) -> Self {
        Self {
            m: Some(m),
            n: Some(n),
            r: Some(r),
            s: Some(s),
            ..Self::new(family)
        }
    }

    pub fn m(&self) -> i64 {
        self.m.unwrap_or(1) as i64
    }

    pub fn n(&self) -> i64 {
        self.n.unwrap_or(1) as i64
    }

    pub fn r(&self) -> i64 {
        self.r.unwrap_or(1) as i64
    }

    pub fn s(&self) -> i64 {
        self.s.unwrap_or(1) as i64
    }

    /// Checks the side conditions and returns the spec with `s` in canonical form.
    ///
    /// For families 1 and 11 an even `s` is replaced by `r - s`, which gives a conjugate group.
    pub fn validate(&self) -> Result<FamilySpec, Vec<String>> {
        let mut violations = Vec::new();
        let wanted = self.family.params();
        let present = [
            ("m", self.m, wanted != Params::None),
            ("n", self.n, matches!(wanted, Params::MN | Params::MNRS)),
            ("r", self.r, wanted == Params::MNRS),
            ("s", self.s, wanted == Params::MNRS),
        ];
        for (name, value, needed) in present {
            match (value, needed) {
                (None, true) => violations.push(format!("parameter {name} is required")),
                (Some(_), false) => violations.push(format!(
                    "parameter {name} is not used by family {}",
                    self.family
                )),
                (Some(0), true) => violations.push(format!("{name} must be positive")),
                _ => {}
            }
        }
        if !violations.is_empty() {
            return Err(violations);
        }
        let (m, n, r, s) = (self.m(), self.n(), self.r(), self.s());
        let mut out = *self;
        match self.family {
            F1 | F11 | F1p | F11p => {
                if s.gcd(&r) != 1 {
                    violations.push("gcd(s,r)=1 fails".to_string());
                }
                if matches!(self.family, F1p | F11p) {
                    if m % 2 == 0 {
                        violations.push("m must be odd".to_string());
                    }
                    if n % 2 == 0 {
                        violations.push("n must be odd".to_string());
                    }
                    if r % 2 != 0 {
                        violations.push("r must be even".to_string());
                    }
                }
                if violations.is_empty() {
                    out.s = Some(canonical_s(self.family, r, s) as u64);
                }
            }
            F33 => {
                if m == 1 {
                    violations.push("m must differ from 1".to_string());
                }
                if n == 1 {
                    violations.push("n must differ from 1".to_string());
                }
            }
            F33p => {
                if m % 2 == 0 {
                    violations.push("m must be odd".to_string());
                }
                if n % 2 == 0 {
                    violations.push("n must be odd".to_string());
                }
                if m == 1 {
                    violations.push("m must differ from 1".to_string());
                }
                if n == 1 {
                    violations.push("n must differ from 1".to_string());
                }
            }
            F34 | F34bis => {
                if m % 2 == 0 {
                    violations.push("m must be odd".to_string());
                }
                if n % 2 == 0 {
                    violations.push("n must be odd".to_string());
                }
            }
            _ => {}
        }
        if violations.is_empty() {
            Ok(out)
        } else {
            Err(violations)
        }
    }

    /// Order of the image in SO(4).
    pub fn phi_order(&self) -> u64 {
        let (m, n, r) = (
            self.m.unwrap_or(1),
            self.n.unwrap_or(1),
            self.r.unwrap_or(1),
        );
        match self.family {
            F1 => 2 * m * n * r,
            F1p => m * n * r / 2,
            F2 | F3 | F2bis | F3bis => 4 * m * n,
            F4 | F10 | F13 | F33 | F4bis | F13bis => 8 * m * n,
            F5 | F6 => 24 * m,
            F7 | F8 | F14 | F16 | F18 => 48 * m,
            F9 => 120 * m,
            F11 => 4 * m * n * r,
            F11p => m * n * r,
            F12 => 16 * m * n,
            F15 | F17 => 96 * m,
            F19 => 240 * m,
            F20 => 288,
            F21 => 24,
            F21p => 12,
            F22 => 96,
            F23 => 576,
            F24 => 1440,
            F25 => 1152,
            F26 => 48,
            F26p | F26pp => 24,
            F27 => 192,
            F28 => 576,
            F29 => 2880,
            F30 => 7200,
            F31 | F32 => 120,
            F31p | F32p => 60,
            F33p => 4 * m * n,
            F34 | F34bis => 2 * m * n,
        }
    }

    pub fn label(&self) -> String {
        let mut out = format!("family {}", self.family);
        for (name, v) in [("m", self.m), ("n", self.n), ("r", self.r), ("s", self.s)] {
            if let Some(v) = v {
                out.push_str(&format!(" {name}={v}"));
            }
        }
        out
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn canonical_s(family: FamilyId, r: i64, s: i64) -> i64 {
    if r == 1 {
        return 1;
    }
    let s = s.rem_euclid(r);
    if matches!(family, F1 | F11) && s % 2 == 0 {
        r - s
    } else {
        s
    }
}

/// All valid specs of a family with image order at most `max_order`, in canonical form.
pub fn enumerate_specs(family: FamilyId, max_order: u64) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    match family.params() {
        Params::None => {
            let spec = FamilySpec::new(family);
            if spec.phi_order() <= max_order {
                out.push(spec);
            }
        }
        Params::M => {
            for m in 1..=max_order {
                let spec = FamilySpec::with_m(family, m);
                if spec.phi_order() > max_order {
                    break;
                }
                out.push(spec);
            }
        }
        Params::MN => {
            for m in 1..=max_order {
                if FamilySpec::with_mn(family, m, 1).phi_order() > max_order {
                    break;
                }
                for n in 1..=max_order {
                    let spec = FamilySpec::with_mn(family, m, n);
                    if spec.phi_order() > max_order {
                        break;
                    }
                    if spec.validate().is_ok() {
                        out.push(spec);
                    }
                }
            }
        }
        Params::MNRS => {
            let r0 = if matches!(family, F1p | F11p) { 2 } else { 1 };
            let order = |m, n, r| FamilySpec::with_mnrs(family, m, n, r, 1).phi_order();
            for m in (1..).take_while(|&m| order(m, 1, r0) <= max_order) {
                for n in (1..).take_while(|&n| order(m, n, r0) <= max_order) {
                    for r in (1..).take_while(|&r| order(m, n, r) <= max_order) {
                        for s in 1..r.max(2) {
                            let spec = FamilySpec::with_mnrs(family, m, n, r, s);
                            if spec.validate() == Ok(spec) {
                                out.push(spec);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
