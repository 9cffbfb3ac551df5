//! Degrees extended by a bottom element.
//!
//! The a-invariant of the zero module, the regularity of the zero module and the saturation
//! degree of a saturated ideal are all `-∞`. [`Degree::NegInfinity`] orders below every finite
//! value and absorbs addition.

use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::Finite(v) => Some(v),
            Degree::NegInfinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Degree::Finite(_))
    }

    /// Finite value, panicking on `-∞`.
    pub fn unwrap(self) -> i64 {
        self.finite().expect("degree is -inf")
    }
}

impl From<i64> for Degree {
    fn from(v: i64) -> Self {
        Degree::Finite(v)
    }
}

impl Add<i64> for Degree {
    type Output = Degree;
    fn add(self, rhs: i64) -> Degree {
        match self {
            Degree::Finite(v) => Degree::Finite(v + rhs),
            Degree::NegInfinity => Degree::NegInfinity,
        }
    }
}

impl Sub<i64> for Degree {
    type Output = Degree;
    fn sub(self, rhs: i64) -> Degree {
        self + (-rhs)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(v) => write!(f, "{v}"),
            Degree::NegInfinity => f.write_str("-inf"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Degree::Finite(v) => s.serialize_i64(*v),
            Degree::NegInfinity => s.serialize_str("-inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Degree::Finite(v)),
            Raw::Str(s) if s == "-inf" => Ok(Degree::NegInfinity),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("invalid degree {s:?}"))),
        }
    }
}
