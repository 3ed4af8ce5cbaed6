use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Column vector with four arbitrary-precision integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vec4(pub [BigInt; 4]);

/// 4×4 matrix with arbitrary-precision integer entries, row-major.
///
/// Fixed-size on purpose: the recurrences only ever need the 4×4 case, and
/// keeping the dimension in the type keeps the exactness invariants tight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat4(pub [[BigInt; 4]; 4]);

impl Vec4 {
    pub fn zero() -> Self {
        Vec4(std::array::from_fn(|_| BigInt::zero()))
    }

    /// Canonical basis vector with a 1 in coordinate `i` (0-based).
    pub fn basis(i: usize) -> Self {
        assert!(i < 4, "basis index out of range");
        let mut v = Self::zero();
        v.0[i] = BigInt::one();
        v
    }

    /// The all-ones vector.
    pub fn ones() -> Self {
        Vec4(std::array::from_fn(|_| BigInt::one()))
    }

    /// Sum of the entries, i.e. the dot product with the all-ones vector.
    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }
}

impl Mat4 {
    pub fn from_rows(rows: [[i64; 4]; 4]) -> Self {
        Mat4(rows.map(|r| r.map(BigInt::from)))
    }

    pub fn identity() -> Self {
        let mut m = Mat4(std::array::from_fn(|_| std::array::from_fn(|_| BigInt::zero())));
        for i in 0..4 {
            m.0[i][i] = BigInt::one();
        }
        m
    }

    /// Adjacency matrix of the 4-vertex path graph: ones on the sub- and
    /// super-diagonal. Its powers drive the Fibonacci recurrence.
    pub fn path_adjacency() -> Self {
        Self::from_rows([
            [0, 1, 0, 0],
            [1, 0, 1, 0],
            [0, 1, 0, 1],
            [0, 0, 1, 0],
        ])
    }

    /// Coordinate-reversal permutation (anti-diagonal ones). It is its own
    /// inverse and commutes with the path adjacency matrix.
    pub fn reversal() -> Self {
        Self::from_rows([
            [0, 0, 0, 1],
            [0, 0, 1, 0],
            [0, 1, 0, 0],
            [1, 0, 0, 0],
        ])
    }

    pub fn mul(&self, rhs: &Mat4) -> Mat4 {
        let mut out = Mat4(std::array::from_fn(|_| std::array::from_fn(|_| BigInt::zero())));
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = BigInt::zero();
                for k in 0..4 {
                    acc += &self.0[i][k] * &rhs.0[k][j];
                }
                out.0[i][j] = acc;
            }
        }
        out
    }

    pub fn apply(&self, v: &Vec4) -> Vec4 {
        let mut out = Vec4::zero();
        for i in 0..4 {
            let mut acc = BigInt::zero();
            for k in 0..4 {
                acc += &self.0[i][k] * &v.0[k];
            }
            out.0[i] = acc;
        }
        out
    }

    /// Exact matrix power by repeated squaring; `pow(0)` is the identity.
    pub fn pow(&self, n: u64) -> Mat4 {
        let mut base = self.clone();
        let mut exp = n;
        let mut acc = Mat4::identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}
