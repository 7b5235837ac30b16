use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact element of `(1/2)Z`, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn is_strict_half(self) -> bool {
        !self.is_integer()
    }

    /// The integer value, if there is one.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }

    /// Twice the value, as a half-integer (`2x`).
    pub fn double(self) -> Self {
        HalfInt { twice: 2 * self.twice }
    }

    /// Half the value, when that is again a half-integer.
    pub fn halve(self) -> Option<Self> {
        self.is_integer().then_some(HalfInt { twice: self.twice / 2 })
    }

    pub fn is_positive(self) -> bool {
        self.twice > 0
    }

    /// Lossless `p/2` form used by the JSON output.
    pub fn to_p2(self) -> String {
        format!("{}/2", self.twice)
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a half-integer: {0:?}")]
pub struct ParseHalfIntError(pub String);

/// Largest magnitude accepted from text; keeps all arithmetic far from `i64` overflow.
pub const MAX_TWICE: i64 = 1 << 40;

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    /// Accepts `k`, `-k`, `p/2`, `-p/2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseHalfIntError(s.to_string());
        let (num, halved) = match s.strip_suffix("/2") {
            Some(p) => (p, true),
            None => (s, false),
        };
        let digits = num.strip_prefix('-').unwrap_or(num);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let n: i64 = num.parse().map_err(|_| bad())?;
        let twice = if halved { n } else { n.checked_mul(2).ok_or_else(bad)? };
        if twice.abs() > MAX_TWICE {
            return Err(bad());
        }
        Ok(HalfInt { twice })
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_p2())
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
