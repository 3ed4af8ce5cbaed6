//! Exact-arithmetic Fibonacci identities over Pascal's triangle.
//!
//! Seven independent engines compute the same Fibonacci numbers from
//! different identities — the defining recurrence, fast doubling, a 4×4
//! matrix power, the closed form over ℚ(√5), a spectral cosine expansion,
//! the shallow-diagonal sum, and a weighted two-row binomial sum — and the
//! library cross-verifies them against each other. The two-row identity is
//! also materialized as an explicit weight pattern over Pascal's triangle
//! (weights from {−1, −½, ½, 1} on cells with 5 | (2c − r)), reducible to a
//! single row through the Pascal rule, and re-derivable from scratch by
//! exact cosine-power linearization.
//!
//! Everything user-visible is exact: arbitrary-precision integers, reduced
//! rationals, half-integers, and quadratic rationals a + b√5. Floating
//! point exists only inside test assertions.

pub mod arith;
pub mod engines;
mod error;
pub mod pascal;
pub mod pattern;
pub mod trig;

pub use arith::{BigInt, HalfRational, Mat4, QuadRational, Rational, Vec4};
pub use engines::{
    check_reversal_symmetry, fib, fib_binet_exact, fib_cosine_exact, fib_doubling,
    fib_matrix, fib_novel, fib_recurrence, fib_result, fib_shallow_diagonal, novel_terms,
    FibMethod, FibResult, NovelTerm,
};
pub use error::{Error, Result};
pub use pascal::{binomial, pascal_row, pascal_row_with_cap, rows, PascalRow, DEFAULT_ROW_CAP};
pub use pattern::{
    classify_weight, evaluate_pattern, reduce_to_row, synthesize_pattern, RowCoefficients,
    WeightPattern,
};
pub use trig::{
    check_binet_from_cosine, derivation_pattern_coherence, derive_identity, expand_cos_power,
    series_mul, substitute_exact, BinetCosineReport, CoherenceReport, CosineSeries,
    ExactCosTable,
};
