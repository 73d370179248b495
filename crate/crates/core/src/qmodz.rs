//! Reduced rationals modulo 1, the value group of all pairings and character
//! evaluations. A value `n/d` stands for `exp(2*pi*i*n/d)`; the exponential is
//! never taken, so equality stays exact field-by-field comparison.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

/// A rational number modulo Z in canonical form: `0 <= num < den`,
/// `gcd(num, den) = 1`, `den >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QmodZ {
    num: BigInt,
    den: BigInt,
}

impl QmodZ {
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let (num, den) = if den.is_negative() { (-num, -den) } else { (num, den) };
        let num = num.mod_floor(&den);
        let g = num.gcd(&den);
        QmodZ { num: &num / &g, den: &den / &g }
    }

    pub fn from_i64(num: i64, den: i64) -> Self {
        QmodZ::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        QmodZ::new(r.numer().clone(), r.denom().clone())
    }

    pub fn zero() -> Self {
        QmodZ { num: BigInt::zero(), den: BigInt::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    /// Order as an element of Q/Z.
    pub fn order(&self) -> BigInt {
        self.den.clone()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        QmodZ::new(k * &self.num, self.den.clone())
    }
}

impl Add for &QmodZ {
    type Output = QmodZ;
    fn add(self, other: &QmodZ) -> QmodZ {
        QmodZ::new(&self.num * &other.den + &other.num * &self.den, &self.den * &other.den)
    }
}

impl Sub for &QmodZ {
    type Output = QmodZ;
    fn sub(self, other: &QmodZ) -> QmodZ {
        QmodZ::new(&self.num * &other.den - &other.num * &self.den, &self.den * &other.den)
    }
}

impl Neg for &QmodZ {
    type Output = QmodZ;
    fn neg(self) -> QmodZ {
        QmodZ::new(-self.num.clone(), self.den.clone())
    }
}

impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(QmodZ::from_i64(3, 2), QmodZ::from_i64(1, 2));
        assert_eq!(QmodZ::from_i64(-1, 2), QmodZ::from_i64(1, 2));
        assert_eq!(QmodZ::from_i64(-1, 3), QmodZ::from_i64(2, 3));
        assert_eq!(QmodZ::from_i64(2, 4), QmodZ::from_i64(1, 2));
        assert_eq!(QmodZ::from_i64(4, 2), QmodZ::zero());
        assert_eq!(QmodZ::from_i64(1, -2), QmodZ::from_i64(1, 2));
    }

    #[test]
    fn arithmetic() {
        let half = QmodZ::from_i64(1, 2);
        let third = QmodZ::from_i64(1, 3);
        assert_eq!(&half + &half, QmodZ::zero());
        assert_eq!(&half + &third, QmodZ::from_i64(5, 6));
        assert_eq!(-&third, QmodZ::from_i64(2, 3));
        assert_eq!(&half - &third, QmodZ::from_i64(1, 6));
        assert_eq!(third.scale(&BigInt::from(3)), QmodZ::zero());
    }

    #[test]
    fn order() {
        assert_eq!(QmodZ::from_i64(2, 6).order(), BigInt::from(3));
        assert_eq!(QmodZ::zero().order(), BigInt::one());
    }
}
