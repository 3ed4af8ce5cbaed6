//! Exact binomial coefficients and Pascal-triangle rows.
//!
//! Two independent routes exist on purpose: `binomial` and `pascal_row` use
//! the multiplicative formula, while [`PascalRow::next_row`] (and the
//! [`rows`] iterator built on it) steps additively by the Pascal rule. The
//! test suite holds the two routes against each other.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default refusal bound for row construction. Raisable by callers that
/// know what they are asking for; the point is predictable memory, not a
/// correctness limit.
pub const DEFAULT_ROW_CAP: u64 = 100_000;

/// Exact binomial coefficient C(n, k), with the total convention:
/// out-of-range k (negative or above n) yields 0.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || (k as u64) > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        // Multiply before dividing; each division is exact because the
        // running value is itself a binomial coefficient.
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// One full row of Pascal's triangle: entries C(n, 0) ..= C(n, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PascalRow {
    n: u64,
    entries: Vec<BigInt>,
}

impl PascalRow {
    /// Row index.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Entry C(n, c) with the same total convention as [`binomial`].
    pub fn get(&self, c: i64) -> BigInt {
        if c < 0 || (c as usize) >= self.entries.len() {
            BigInt::zero()
        } else {
            self.entries[c as usize].clone()
        }
    }

    /// The apex row [1].
    pub fn apex() -> Self {
        PascalRow { n: 0, entries: vec![BigInt::one()] }
    }

    /// The successor row by the additive Pascal rule.
    pub fn next_row(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len() + 1);
        entries.push(BigInt::one());
        for w in self.entries.windows(2) {
            entries.push(&w[0] + &w[1]);
        }
        entries.push(BigInt::one());
        PascalRow { n: self.n + 1, entries }
    }
}

/// Build row n directly (multiplicative, O(n) big-integer operations),
/// refusing rows above [`DEFAULT_ROW_CAP`].
pub fn pascal_row(n: u64) -> Result<PascalRow> {
    pascal_row_with_cap(n, DEFAULT_ROW_CAP)
}

/// Build row n directly with an explicit resource cap.
pub fn pascal_row_with_cap(n: u64, cap: u64) -> Result<PascalRow> {
    if n > cap {
        return Err(Error::RowCapExceeded { row: n, cap });
    }
    let len = (n + 1) as usize;
    let mut entries = Vec::with_capacity(len);
    entries.push(BigInt::one());
    // Fill the left half multiplicatively, mirror the rest.
    for c in 0..(n / 2) {
        let next = &entries[c as usize] * BigInt::from(n - c) / BigInt::from(c + 1);
        entries.push(next);
    }
    for c in (n / 2 + 1)..=n {
        let mirrored = entries[(n - c) as usize].clone();
        entries.push(mirrored);
    }
    debug_assert_eq!(entries.len(), len);
    Ok(PascalRow { n, entries })
}

/// Iterator over successive rows starting at the apex, stepping by the
/// additive Pascal rule. The cheap way to sweep many consecutive rows.
pub fn rows() -> impl Iterator<Item = PascalRow> {
    let mut next = Some(PascalRow::apex());
    std::iter::from_fn(move || {
        let current = next.take()?;
        next = Some(current.next_row());
        Some(current)
    })
}

/// Cursor over one row of the triangle that moves between columns with
/// exact multiplicative updates, so a scan across a row costs O(distance)
/// small multiply/divide steps instead of one fresh binomial per cell.
#[derive(Debug, Clone)]
pub struct BinomialWalker {
    n: u64,
    col: u64,
    value: BigInt,
}

impl BinomialWalker {
    pub fn new(n: u64, col: u64) -> Self {
        assert!(col <= n, "walker column out of range");
        BinomialWalker { n, col, value: binomial(n, col as i64) }
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn col(&self) -> u64 {
        self.col
    }

    /// Move to `target` (must stay within 0..=n), updating the value one
    /// column at a time. Each step multiplies before its exact division.
    pub fn move_to(&mut self, target: u64) {
        assert!(target <= self.n, "walker column out of range");
        while self.col < target {
            // C(n, c+1) = C(n, c) * (n - c) / (c + 1)
            self.value = &self.value * BigInt::from(self.n - self.col);
            self.value = &self.value / BigInt::from(self.col + 1);
            self.col += 1;
        }
        while self.col > target {
            // C(n, c-1) = C(n, c) * c / (n - c + 1)
            self.value = &self.value * BigInt::from(self.col);
            self.value = &self.value / BigInt::from(self.n - self.col + 1);
            self.col -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent additive oracle: the whole triangle from the apex.
    fn additive_triangle(max_n: u64) -> Vec<Vec<BigInt>> {
        let mut tri: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=max_n as usize {
            let prev = &tri[n - 1];
            let mut row = vec![BigInt::one()];
            for j in 1..n {
                row.push(&prev[j - 1] + &prev[j]);
            }
            row.push(BigInt::one());
            tri.push(row);
        }
        tri
    }

    #[test]
    fn boundary_values() {
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(5, 5), BigInt::one());
    }

    // Expected value computed with the additive oracle before freezing.
    #[test]
    fn central_value_row_ten() {
        assert_eq!(binomial(10, 5), BigInt::from(252));
        let tri = additive_triangle(10);
        assert_eq!(tri[10][5], BigInt::from(252));
    }

    #[test]
    fn out_of_range_is_zero() {
        assert_eq!(binomial(4, 7), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
    }

    #[test]
    fn rows_match_examples() {
        assert_eq!(pascal_row(0).unwrap().entries(), &[BigInt::one()]);
        let row4: Vec<BigInt> = [1, 4, 6, 4, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(pascal_row(4).unwrap().entries(), &row4[..]);
        let row2: Vec<BigInt> = [1, 2, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(pascal_row(2).unwrap().entries(), &row2[..]);
    }

    #[test]
    fn row_cap_is_a_refusal() {
        let err = pascal_row_with_cap(11, 10).unwrap_err();
        assert_eq!(err, Error::RowCapExceeded { row: 11, cap: 10 });
        assert!(pascal_row_with_cap(10, 10).is_ok());
    }

    #[test]
    fn multiplicative_agrees_with_additive_oracle_up_to_200() {
        let tri = additive_triangle(200);
        for n in 0..=200u64 {
            let row = pascal_row(n).unwrap();
            assert_eq!(row.entries(), &tri[n as usize][..], "row {n}");
            for k in 0..=n {
                assert_eq!(binomial(n, k as i64), tri[n as usize][k as usize], "C({n},{k})");
            }
        }
    }

    #[test]
    fn row_sum_symmetry_and_pascal_rule_up_to_200() {
        let mut prev: Option<PascalRow> = None;
        for row in rows().take(201) {
            let n = row.n();
            let sum: BigInt = row.entries().iter().sum();
            assert_eq!(sum, BigInt::one() << n, "row sum 2^{n}");
            for k in 0..=n {
                assert_eq!(row.get(k as i64), row.get((n - k) as i64), "symmetry at ({n},{k})");
            }
            if let Some(p) = prev {
                for k in 0..=n as i64 {
                    assert_eq!(row.get(k), p.get(k - 1) + p.get(k), "pascal rule at ({n},{k})");
                }
            }
            prev = Some(row);
        }
    }

    #[test]
    fn walker_tracks_binomial() {
        let mut w = BinomialWalker::new(16, 8);
        assert_eq!(w.value(), &BigInt::from(12870));
        w.move_to(3);
        assert_eq!(w.value(), &BigInt::from(560));
        w.move_to(16);
        assert_eq!(w.value(), &BigInt::one());
        w.move_to(0);
        assert_eq!(w.value(), &BigInt::one());
    }
}
