//! Exact rational degrees in the unit interval.
//!
//! Every comparison the semantics make is a boundary-sensitive test like
//! `min(a, rho) + b <= 1`, so degrees are rationals, never floats. Inputs
//! are short decimals, the only operations are min, complement and bounded
//! sums, so an `i64` ratio never overflows.

use std::fmt;
use std::str::FromStr;

use num::rational::Rational64;
use num::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A membership or attack degree: an exact rational in `[0, 1]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(Rational64);

/// Errors from constructing or parsing a degree.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DegreeError {
    #[error("degree {0} is outside [0, 1]")]
    OutOfRange(String),
    #[error("malformed degree `{0}`")]
    Malformed(String),
    #[error("degree `{0}` has too many digits")]
    TooPrecise(String),
}

impl Degree {
    pub const fn zero() -> Degree {
        Degree(Rational64::new_raw(0, 1))
    }

    pub const fn one() -> Degree {
        Degree(Rational64::new_raw(1, 1))
    }

    pub const fn half() -> Degree {
        Degree(Rational64::new_raw(1, 2))
    }

    /// Wraps a rational, rejecting anything outside `[0, 1]`.
    pub fn new(r: Rational64) -> Result<Degree, DegreeError> {
        if r < Rational64::zero() || r > Rational64::one() {
            return Err(DegreeError::OutOfRange(r.to_string()));
        }
        Ok(Degree(r))
    }

    /// `numer / denom`, checked against `[0, 1]`.
    pub fn ratio(numer: i64, denom: i64) -> Result<Degree, DegreeError> {
        if denom == 0 {
            return Err(DegreeError::Malformed(format!("{numer}/{denom}")));
        }
        Degree::new(Rational64::new(numer, denom))
    }

    pub fn as_ratio(self) -> Rational64 {
        self.0
    }

    /// `1 - self`, exact.
    pub fn complement(self) -> Degree {
        Degree(Rational64::one() - self.0)
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(self) -> bool {
        self.0.is_one()
    }

    pub fn min(self, other: Degree) -> Degree {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Degree) -> Degree {
        if self >= other {
            self
        } else {
            other
        }
    }
}

/// The Godel t-norm: `min(x, y)`.
pub fn tnorm(x: Degree, y: Degree) -> Degree {
    x.min(y)
}

/// The standard fuzzy complement `1 - x`.
pub fn complement(x: Degree) -> Degree {
    x.complement()
}

/// `x + y <= 1`, the tolerability comparison, without leaving rationals.
pub(crate) fn sum_at_most_one(x: Degree, y: Degree) -> bool {
    x.0 + y.0 <= Rational64::one()
}

/// `x + y >= 1`; used by the stable-extension boundary test.
pub(crate) fn sum_at_least_one(x: Degree, y: Degree) -> bool {
    x.0 + y.0 >= Rational64::one()
}

impl fmt::Display for Degree {
    /// Minimal decimal form when the denominator is a power of ten times
    /// a power of two and five (`0.2`, never `0.2000`), `p/q` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let numer = *self.0.numer();
        let denom = *self.0.denom();
        if denom == 1 {
            return write!(f, "{numer}");
        }
        let (mut twos, mut fives, mut rest) = (0u32, 0u32, denom);
        while rest % 2 == 0 {
            rest /= 2;
            twos += 1;
        }
        while rest % 5 == 0 {
            rest /= 5;
            fives += 1;
        }
        let places = twos.max(fives);
        if rest != 1 || places > 18 {
            return write!(f, "{numer}/{denom}");
        }
        let scaled = numer * (10i64.pow(places) / denom);
        let digits = format!("{scaled:0width$}", width = places as usize);
        let digits = digits.trim_end_matches('0');
        write!(f, "0.{digits}")
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Degree {
    type Err = DegreeError;

    /// Accepts `0`, `1`, decimals like `0.85`, and fractions like `5/7`.
    fn from_str(s: &str) -> Result<Degree, DegreeError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(DegreeError::Malformed(s.to_string()));
        }
        if let Some((p, q)) = s.split_once('/') {
            let numer: i64 = p.trim().parse().map_err(|_| DegreeError::Malformed(s.to_string()))?;
            let denom: i64 = q.trim().parse().map_err(|_| DegreeError::Malformed(s.to_string()))?;
            if denom <= 0 || numer < 0 {
                return Err(DegreeError::Malformed(s.to_string()));
            }
            return Degree::ratio(numer, denom);
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int_part.is_empty()
            || !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(DegreeError::Malformed(s.to_string()));
        }
        if frac_part.len() > 9 {
            return Err(DegreeError::TooPrecise(s.to_string()));
        }
        let whole: i64 = int_part.parse().map_err(|_| DegreeError::Malformed(s.to_string()))?;
        let scale = 10i64.pow(frac_part.len() as u32);
        let frac: i64 = if frac_part.is_empty() {
            0
        } else {
            frac_part.parse().map_err(|_| DegreeError::Malformed(s.to_string()))?
        };
        let numer = whole
            .checked_mul(scale)
            .and_then(|w| w.checked_add(frac))
            .ok_or_else(|| DegreeError::Malformed(s.to_string()))?;
        Degree::ratio(numer, scale)
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Degree, D::Error> {
        let raw = String::deserialize(deserializer)?;
        raw.parse().map_err(D::Error::custom)
    }
}
