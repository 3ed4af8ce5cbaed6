//! The two-row weight pattern form of the binomial-sum identity.
//!
//! A pattern for target F_{k+1} assigns weights from {−1, −½, ½, 1} to the
//! cells of Pascal rows k and k+1 whose coordinates satisfy 5 | (2c − r):
//! weight (−1)^r on row k, (−1)^r·½ on row k+1. The weighted sum of the
//! binomial values equals F_{k+1}; that equality (and the equality with the
//! one-sided formula) is verified, not assumed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{HalfRational, Rational};
use crate::error::{Error, Result};
use crate::pascal::{BinomialWalker, PascalRow};

/// Sparse weight assignment over two adjacent Pascal rows. Cells iterate
/// in row-major order (the map is ordered), so serialized output is stable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPattern {
    k: u64,
    cells: BTreeMap<(u64, u64), HalfRational>,
}

impl WeightPattern {
    /// Target row index; the pattern evaluates to F_{k+1}.
    pub fn k(&self) -> u64 {
        self.k
    }

    /// Index of the Fibonacci value the pattern evaluates to.
    pub fn target_index(&self) -> u64 {
        self.k + 1
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (u64, u64, &HalfRational)> {
        self.cells.iter().map(|(&(r, c), w)| (r, c, w))
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Weight at (row, col), zero when the cell is not in the pattern.
    pub fn weight(&self, row: u64, col: u64) -> HalfRational {
        self.cells.get(&(row, col)).cloned().unwrap_or_else(HalfRational::zero)
    }
}

/// The canonical symmetric weight pattern for F_{k+1}.
pub fn synthesize_pattern(k: u64) -> WeightPattern {
    let mut cells = BTreeMap::new();
    for row in [k, k + 1] {
        // 2c ≡ r (mod 5) ⇔ c ≡ 3r (mod 5), since 3 inverts 2 mod 5.
        let first = (3 * (row % 5)) % 5;
        let mut col = first;
        while col <= row {
            cells.insert((row, col), cell_weight(k, row));
            col += 5;
        }
    }
    WeightPattern { k, cells }
}

fn cell_weight(k: u64, row: u64) -> HalfRational {
    let sign: i64 = if row.is_multiple_of(2) { 1 } else { -1 };
    if row == k {
        HalfRational::from_int(sign)
    } else {
        HalfRational::half_of(sign)
    }
}

/// Closed-form per-cell weight: the O(1) classification the renderer uses.
/// Pointwise equal to the cells of [`synthesize_pattern`].
pub fn classify_weight(k: u64, row: u64, col: u64) -> Result<HalfRational> {
    if row != k && row != k + 1 {
        return Err(Error::Domain(format!(
            "row {row} is not one of the pattern rows {k} and {}",
            k + 1
        )));
    }
    if col > row {
        return Err(Error::Domain(format!("column {col} out of range for row {row}")));
    }
    if (2 * col) % 5 == row % 5 {
        Ok(cell_weight(k, row))
    } else {
        Ok(HalfRational::zero())
    }
}

/// Exact weighted sum Σ weight(r, c)·C(r, c) over the pattern's cells.
/// The half-weights must pair up to an integer; a non-integral sum is an
/// arithmetic bug and is reported as one.
pub fn evaluate_pattern(p: &WeightPattern) -> Result<BigInt> {
    let mut total = HalfRational::zero();
    let mut walker: Option<BinomialWalker> = None;
    let mut walker_row = u64::MAX;
    for (row, col, weight) in p.cells() {
        if walker_row != row {
            walker = Some(BinomialWalker::new(row, col));
            walker_row = row;
        }
        let w = walker.as_mut().expect("walker initialized above");
        w.move_to(col);
        total += weight * w.value();
    }
    total.to_int()
}

/// Dense per-column rational coefficients over a single Pascal row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCoefficients {
    row: u64,
    coeffs: Vec<Rational>,
}

impl RowCoefficients {
    pub fn new(row: u64, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len() as u64, row + 1, "coefficient vector length");
        RowCoefficients { row, coeffs }
    }

    pub fn row(&self) -> u64 {
        self.row
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Exact dot product against the matching Pascal row. Accumulated over
    /// the common denominator of the coefficients, with a single reduction
    /// at the end, so the big row entries never enter a gcd.
    pub fn dot(&self, row: &PascalRow) -> Result<Rational> {
        if row.n() != self.row {
            return Err(Error::Domain(format!(
                "coefficients over row {} dotted against row {}",
                self.row,
                row.n()
            )));
        }
        let mut denom = BigInt::from(1);
        for coeff in &self.coeffs {
            if !coeff.is_zero() {
                denom = num_integer::Integer::lcm(&denom, coeff.denom());
            }
        }
        let mut acc = BigInt::from(0);
        for (coeff, entry) in self.coeffs.iter().zip(row.entries()) {
            if !coeff.is_zero() {
                acc += coeff.numer() * (&denom / coeff.denom()) * entry;
            }
        }
        Ok(Rational::new(acc, denom))
    }

    /// Dot product that must land on an integer.
    pub fn dot_value(&self, row: &PascalRow) -> Result<BigInt> {
        let value = self.dot(row)?;
        if !value.is_integer() {
            return Err(Error::Inconsistency(format!(
                "weighted row sum {value} is not an integer"
            )));
        }
        Ok(value.to_integer())
    }

    /// Mirror-average the vector: sym[i] = (v[i] + v[row−i]) / 2. Idempotent
    /// on already-symmetric vectors.
    pub fn symmetrized(&self) -> RowCoefficients {
        let n = self.coeffs.len();
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        let coeffs = (0..n)
            .map(|i| (&self.coeffs[i] + &self.coeffs[n - 1 - i]) * &half)
            .collect();
        RowCoefficients { row: self.row, coeffs }
    }
}

/// Rewrite every row-(k+1) cell through the Pascal rule
/// C(k+1, j) = C(k, j−1) + C(k, j) and accumulate everything into a dense
/// coefficient vector over row k alone. Boundary terms whose j−1 falls
/// outside the row vanish with the zero convention.
pub fn reduce_to_row(p: &WeightPattern) -> RowCoefficients {
    let k = p.k();
    let mut coeffs = vec![Rational::zero(); (k + 1) as usize];
    for (row, col, weight) in p.cells() {
        let w = weight.to_rational();
        if row == k {
            coeffs[col as usize] += w;
        } else {
            if col >= 1 && col - 1 <= k {
                coeffs[(col - 1) as usize] += w.clone();
            }
            if col <= k {
                coeffs[col as usize] += w;
            }
        }
    }
    RowCoefficients::new(k, coeffs)
}
