//! Dense matrices over exact rationals.
//!
//! All arithmetic is closed over `BigRational`; nothing here rounds.
//! Rank is computed by fraction-free (Bareiss) elimination on a
//! denominator-cleared integer copy, which keeps intermediate entries
//! bounded at the small sizes this crate works with.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used everywhere in this crate.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `n/d`. Panics on `d = 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows. All rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Convenience constructor for integer test fixtures.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let converted = rows
            .iter()
            .map(|r| r.iter().copied().map(rat).collect())
            .collect();
        Self::from_rows(converted).expect("uniform row lengths")
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..=r).all(|c| {
                    let neg = -self.get(c, r).clone();
                    *self.get(r, c) == neg
                })
            })
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn mul_vector(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    /// Exact rank via fraction-free Gaussian elimination.
    ///
    /// Each row is first scaled by the lcm of its denominators; the
    /// resulting integer matrix is reduced Bareiss-style, so every
    /// intermediate division is exact.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows).map(|r| clear_denominators(self.row(r))).collect();
        bareiss_rank(&mut m, self.cols)
    }

    /// Basis of the right kernel `{x : Ax = 0}` over the rationals.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (rref, pivots) = self.reduced_row_echelon();
        let pivot_set: Vec<Option<usize>> = {
            let mut set = vec![None; self.cols];
            for (row_idx, &col) in pivots.iter().enumerate() {
                set[col] = Some(row_idx);
            }
            set
        };
        let mut basis = Vec::new();
        for free_col in 0..self.cols {
            if pivot_set[free_col].is_some() {
                continue;
            }
            let mut x = vec![Rational::zero(); self.cols];
            x[free_col] = Rational::one();
            for (row_idx, &pivot_col) in pivots.iter().enumerate() {
                x[pivot_col] = -rref.get(row_idx, free_col).clone();
            }
            basis.push(x);
        }
        basis
    }

    /// Reduced row echelon form together with the pivot columns.
    fn reduced_row_echelon(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            for c in 0..m.cols {
                m.data.swap(pivot_row * m.cols + c, src * m.cols + c);
            }
            let inv = {
                let p = m.get(pivot_row, col).clone();
                p.recip()
            };
            for c in col..m.cols {
                let v = m.get(pivot_row, c) * &inv;
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &factor * m.get(pivot_row, c);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    /// Characteristic polynomial coefficients in descending powers,
    /// `[1, c_1, ..., c_n]`, computed by the Faddeev-LeVerrier recursion.
    pub fn char_poly(&self) -> Vec<Rational> {
        assert!(self.is_square(), "char_poly needs a square matrix");
        let n = self.rows;
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(Rational::one());
        let mut m = RationalMatrix::identity(n);
        for k in 1..=n {
            m = self * &m;
            let c = -(m.trace() / rat(k as i64));
            for i in 0..n {
                let v = m.get(i, i) + &c;
                m.set(i, i, v);
            }
            coeffs.push(c);
        }
        coeffs
    }
}

/// Scales a rational row by the lcm of its denominators.
fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect()
}

/// Fraction-free rank of an integer matrix (one-step Bareiss).
fn bareiss_rank(m: &mut [Vec<BigInt>], cols: usize) -> usize {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, src);
        for r in pivot_row + 1..rows {
            for c in col + 1..cols {
                let v = (&m[pivot_row][col] * &m[r][c] - &m[r][col] * &m[pivot_row][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[pivot_row][col].clone();
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    pivot_row
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        self.get(r, c)
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = out.get(r, c) + a * rhs.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;

    fn neg(self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v.clone()).collect(),
        }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// An ordered list of equal-length rational vectors, used as a spanning
/// set (not assumed independent).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorList {
    dim: usize,
    vectors: Vec<Vec<Rational>>,
}

impl VectorList {
    pub fn new(vectors: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = vectors.first().map_or(0, Vec::len);
        for v in &vectors {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
        }
        Ok(VectorList { dim, vectors })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn as_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.vectors.clone()).expect("uniform lengths by construction")
    }

    /// Exact dimension of the span.
    pub fn rank(&self) -> usize {
        self.as_matrix().rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_multiplication() {
        let a = RationalMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let id = RationalMatrix::identity(2);
        assert_eq!(&a * &id, a);
        assert_eq!(&id * &a, a);
        let b = RationalMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let ab = &a * &b;
        assert_eq!(ab, RationalMatrix::from_i64_rows(&[&[2, 1], &[4, 3]]));
    }

    #[test]
    fn rank_of_singular_matrix() {
        let m = RationalMatrix::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(RationalMatrix::zeros(3, 3).rank(), 0);
        assert_eq!(RationalMatrix::identity(4).rank(), 4);
    }

    #[test]
    fn rank_with_rational_entries() {
        let m = RationalMatrix::from_rows(vec![
            vec![frac(1, 2), frac(1, 3)],
            vec![frac(3, 2), frac(1, 1)],
        ])
        .unwrap();
        // (1/2)(1) - (1/3)(3/2) = 0, so the rows are proportional.
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_basis_spans_the_kernel() {
        let m = RationalMatrix::from_i64_rows(&[&[1, 2, 3], &[0, 1, 1]]);
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 1);
        for v in &kernel {
            let image = m.mul_vector(v).unwrap();
            assert!(image.iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn char_poly_of_diagonal_matrix() {
        // (x - 2)(x - 3) = x^2 - 5x + 6
        let m = RationalMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        assert_eq!(m.char_poly(), vec![rat(1), rat(-5), rat(6)]);
    }

    #[test]
    fn vector_list_rejects_ragged_input() {
        let err = VectorList::new(vec![vec![rat(1), rat(2)], vec![rat(3)]]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }
}
