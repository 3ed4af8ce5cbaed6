use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::Rational;
use crate::error::{Error, Result};

/// An exact integer or half-integer, stored as twice its value.
///
/// Weight arithmetic only ever needs values from {−1, −½, 0, ½, 1} scaled
/// by integers, which stays inside the half-integers under addition. Making
/// that a type (rather than a runtime restriction on a general rational)
/// means the weight-alphabet invariant is checkable at construction and
/// the final divide-by-two carries an integrality proof with it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfRational {
    twice: BigInt,
}

impl HalfRational {
    /// Build from twice the intended value: `new_from_twice(3)` is 3/2.
    pub fn new_from_twice(twice: impl Into<BigInt>) -> Self {
        Self { twice: twice.into() }
    }

    /// Build a whole value.
    pub fn from_int(value: impl Into<BigInt>) -> Self {
        Self { twice: value.into() * 2 }
    }

    /// Half of the given integer (exact; the result may be a half-integer).
    pub fn half_of(value: impl Into<BigInt>) -> Self {
        Self { twice: value.into() }
    }

    pub fn zero() -> Self {
        Self { twice: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.twice.is_zero()
    }

    /// Twice the value, the canonical internal representation.
    pub fn twice_value(&self) -> &BigInt {
        &self.twice
    }

    pub fn is_integer(&self) -> bool {
        self.twice.is_even()
    }

    /// The exact integer value, or an inconsistency error when the value
    /// is a proper half-integer.
    pub fn to_int(&self) -> Result<BigInt> {
        if self.is_integer() {
            Ok(&self.twice / 2)
        } else {
            Err(Error::Inconsistency(format!(
                "half-integer {} where an integer was required",
                self
            )))
        }
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.twice.clone(), BigInt::from(2))
    }
}

impl Add for HalfRational {
    type Output = HalfRational;
    fn add(self, rhs: HalfRational) -> HalfRational {
        HalfRational { twice: self.twice + rhs.twice }
    }
}

impl AddAssign for HalfRational {
    fn add_assign(&mut self, rhs: HalfRational) {
        self.twice += rhs.twice;
    }
}

impl Sub for HalfRational {
    type Output = HalfRational;
    fn sub(self, rhs: HalfRational) -> HalfRational {
        HalfRational { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfRational {
    type Output = HalfRational;
    fn neg(self) -> HalfRational {
        HalfRational { twice: -self.twice }
    }
}

/// Scaling by an integer keeps the value a half-integer; general
/// half × half products would leave the type and are deliberately absent.
impl Mul<&BigInt> for &HalfRational {
    type Output = HalfRational;
    fn mul(self, rhs: &BigInt) -> HalfRational {
        HalfRational { twice: &self.twice * rhs }
    }
}

impl fmt::Display for HalfRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice.is_even() {
            write!(f, "{}", &self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}
