//! Half-integer angular momentum quantum numbers, stored as doubled values.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A half-integer (..., -1, -1/2, 0, 1/2, 1, ...) stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Half(pub i32);

impl Half {
    pub const ZERO: Half = Half(0);

    /// From an integer value.
    pub fn int(v: i32) -> Half {
        Half(2 * v)
    }

    /// From a doubled value (`half(3)` is 3/2).
    pub fn half(doubled: i32) -> Half {
        Half(doubled)
    }

    /// The doubled value.
    pub fn doubled(self) -> i32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn abs(self) -> Half {
        Half(self.0.abs())
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    /// Parse from an f64 that must be a multiple of 1/2.
    pub fn try_from_f64(v: f64) -> Option<Half> {
        let doubled = 2.0 * v;
        if doubled.fract() == 0.0 && doubled.abs() <= i32::MAX as f64 {
            Some(Half(doubled as i32))
        } else {
            None
        }
    }

    /// Iterate m = -j, -j+1, ..., +j.
    pub fn projections(self) -> impl Iterator<Item = Half> {
        let j2 = self.0;
        (0..=j2).step_by(2).map(move |k| Half(k - j2)).collect::<Vec<_>>().into_iter()
    }

    /// Multiplicity 2j + 1.
    pub fn multiplicity(self) -> u32 {
        (self.0 + 2).max(0) as u32 / 2 * 2 / 2 + (self.0 as u32 / 2 + 1) * 0
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let j = Half::half(3); // 3/2
        assert_eq!(j.as_f64(), 1.5);
        assert_eq!((j + Half::int(1)).doubled(), 5);
        assert_eq!((-j).doubled(), -3);
        assert_eq!(format!("{}", j), "3/2");
        assert_eq!(format!("{}", Half::int(2)), "2");
        assert_eq!(format!("{}", Half::half(-1)), "-1/2");
    }

    #[test]
    fn projections_run_from_minus_j_to_j() {
        let ms: Vec<i32> = Half::half(3).projections().map(|m| m.doubled()).collect();
        assert_eq!(ms, vec![-3, -1, 1, 3]);
        let ms: Vec<i32> = Half::int(1).projections().map(|m| m.doubled()).collect();
        assert_eq!(ms, vec![-2, 0, 2]);
    }

    #[test]
    fn f64_round_trip() {
        assert_eq!(Half::try_from_f64(1.5), Some(Half(3)));
        assert_eq!(Half::try_from_f64(-0.5), Some(Half(-1)));
        assert_eq!(Half::try_from_f64(2.0), Some(Half(4)));
        assert_eq!(Half::try_from_f64(0.3), None);
    }
}
