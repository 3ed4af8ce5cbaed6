//! Exact arithmetic foundations.
//!
//! Everything downstream computes over these types and nothing here ever
//! rounds: arbitrary-precision integers, reduced rationals, half-integers,
//! quadratic rationals a + b√5, and fixed 4-dimensional integer
//! vectors/matrices.

mod half;
mod mat4;
mod quad;

pub use half::HalfRational;
pub use mat4::{Mat4, Vec4};
pub use quad::QuadRational;

/// Arbitrary-precision signed integer. Canonical form (no spurious leading
/// limbs, zero is unsigned) is maintained by the backing implementation.
pub use num_bigint::BigInt;

/// Exact rational, always stored reduced with a positive denominator, so
/// equality is component-wise.
pub type Rational = num_rational::BigRational;
