use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// An exact element a + b·√5 of the quadratic field ℚ(√5).
///
/// Components are reduced rationals, so equality is component-wise.
/// Multiplication follows (a+b√5)(c+d√5) = (ac+5bd) + (ad+bc)√5. The type
/// is closed under ring operations and under division by nonzero elements
/// (the norm a²−5b² of a nonzero element is never zero since √5 is
/// irrational).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadRational {
    a: Rational,
    b: Rational,
}

impl QuadRational {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    /// Convenience constructor from integer fractions: a = an/ad, b = bn/bd.
    pub fn from_parts(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        Self {
            a: Rational::new(BigInt::from(an), BigInt::from(ad)),
            b: Rational::new(BigInt::from(bn), BigInt::from(bd)),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(a: Rational) -> Self {
        Self { a, b: Rational::zero() }
    }

    pub fn zero() -> Self {
        Self { a: Rational::zero(), b: Rational::zero() }
    }

    pub fn one() -> Self {
        Self { a: Rational::one(), b: Rational::zero() }
    }

    /// The rational component a.
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    /// The coefficient b of √5.
    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the √5 component vanishes.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Field conjugate a − b√5.
    pub fn conjugate(&self) -> Self {
        Self { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Exact power by repeated squaring; `pow(_, 0)` is 1.
    pub fn pow(&self, n: u64) -> Self {
        let mut base = self.clone();
        let mut exp = n;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse. Errors on zero; total otherwise.
    pub fn inv(&self) -> Result<Self> {
        // 1/(a+b√5) = (a − b√5)/(a² − 5b²)
        let norm = &self.a * &self.a - Rational::from_integer(BigInt::from(5)) * &self.b * &self.b;
        if norm.is_zero() {
            return Err(Error::Domain("division by zero quadratic rational".into()));
        }
        Ok(Self {
            a: &self.a / &norm,
            b: -(&self.b / &norm),
        })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self { a: &self.a * factor, b: &self.b * factor }
    }

    /// Lower to floating point (tests and display only; never feeds back
    /// into exact computation).
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * 5f64.sqrt()
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    // Good enough for the magnitudes the float cross-checks use.
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

impl Add for &QuadRational {
    type Output = QuadRational;
    fn add(self, rhs: &QuadRational) -> QuadRational {
        QuadRational { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &QuadRational {
    type Output = QuadRational;
    fn sub(self, rhs: &QuadRational) -> QuadRational {
        QuadRational { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &QuadRational {
    type Output = QuadRational;
    fn mul(self, rhs: &QuadRational) -> QuadRational {
        let five = Rational::from_integer(BigInt::from(5));
        QuadRational {
            a: &self.a * &rhs.a + &five * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for &QuadRational {
    type Output = QuadRational;
    fn neg(self) -> QuadRational {
        QuadRational { a: -self.a.clone(), b: -self.b.clone() }
    }
}

impl fmt::Display for QuadRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt(5)", self.a, -self.b.clone())
        } else {
            write!(f, "{} + {}*sqrt(5)", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(an: i64, bn: i64) -> QuadRational {
        QuadRational::from_parts(an, 1, bn, 1)
    }

    #[test]
    fn sqrt5_squares_to_five() {
        assert_eq!(&q(0, 1) * &q(0, 1), q(5, 0));
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&q(1, 1) * &q(1, -1), q(-4, 0));
    }

    // Expected value frozen from expanding (1 + √5)² by component
    // arithmetic: (1·1 + 5·1·1) + (1·1 + 1·1)√5.
    #[test]
    fn square_of_one_plus_sqrt5() {
        assert_eq!(&q(1, 1) * &q(1, 1), q(6, 2));
    }

    #[test]
    fn pow_zero_is_one() {
        assert_eq!(q(1, 1).pow(0), QuadRational::one());
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        // Oracle: repeated quad multiplication.
        let x = q(1, 1);
        let mut acc = QuadRational::one();
        for n in 0..=8u64 {
            assert_eq!(x.pow(n), acc, "power {n}");
            acc = &acc * &x;
        }
        assert_eq!(x.pow(3), q(16, 8));
        assert_eq!(q(1, -1).pow(2), q(6, -2));
    }

    #[test]
    fn inverse_roundtrip() {
        let x = QuadRational::from_parts(1, 4, 1, 4); // cos(pi/5)
        let inv = x.inv().unwrap();
        assert_eq!(&x * &inv, QuadRational::one());
        assert!(QuadRational::zero().inv().is_err());
    }

    #[test]
    fn conjugate_is_multiplicative() {
        let x = QuadRational::from_parts(2, 3, -1, 7);
        let y = QuadRational::from_parts(-5, 2, 4, 9);
        let lhs = (&x * &y).conjugate();
        let rhs = &x.conjugate() * &y.conjugate();
        assert_eq!(lhs, rhs);
    }
}
