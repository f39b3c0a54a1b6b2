//! Small exact integer-lattice routines: Hermite normal form bases,
//! determinants, and primitive hyperplane normals.
//!
//! Coordinates stay in `i64`; the matrices handled here are at most a
//! dozen rows in dimension <= 6 with entries bounded by the weight sizes,
//! far below any overflow threshold.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn gcd_slice(values: &[i64]) -> i64 {
    values.iter().fold(0i64, |acc, v| acc.gcd(v))
}

/// Divides out the gcd of the entries. The zero vector stays zero.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = gcd_slice(v);
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

/// Exact determinant via fraction-free (Bareiss) elimination.
pub fn det(rows: &[Vec<i64>]) -> i64 {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "determinant needs a square matrix");
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let mut prev: i128 = 1;
    let mut sign: i128 = 1;
    for col in 0..n {
        let Some(src) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if src != col {
            m.swap(col, src);
            sign = -sign;
        }
        for r in col + 1..n {
            for c in col + 1..n {
                m[r][c] = (m[col][col] * m[r][c] - m[r][col] * m[col][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[col][col];
    }
    i64::try_from(sign * m[n - 1][n - 1]).expect("determinant fits i64 at this scale")
}

/// Row-style Hermite normal form basis of the lattice generated by `rows`.
///
/// The result has one row per pivot, pivot columns strictly increasing,
/// positive pivots, and entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_basis(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<i64>> = rows.iter().filter(|r| r.iter().any(|&v| v != 0)).cloned().collect();
    let mut pivot_row = 0;
    for col in 0..cols {
        loop {
            let nonzero: Vec<usize> = (pivot_row..m.len()).filter(|&r| m[r][col] != 0).collect();
            match nonzero.len() {
                0 => break,
                1 => {
                    m.swap(pivot_row, nonzero[0]);
                    break;
                }
                _ => {
                    let best = *nonzero
                        .iter()
                        .min_by_key(|&&r| m[r][col].unsigned_abs())
                        .expect("nonzero is non-empty");
                    m.swap(pivot_row, best);
                    for r in pivot_row + 1..m.len() {
                        if m[r][col] == 0 {
                            continue;
                        }
                        let q = m[r][col] / m[pivot_row][col];
                        for c in 0..cols {
                            m[r][c] -= q * m[pivot_row][c];
                        }
                    }
                }
            }
        }
        if pivot_row < m.len() && m[pivot_row][col] != 0 {
            if m[pivot_row][col] < 0 {
                for c in 0..cols {
                    m[pivot_row][c] = -m[pivot_row][c];
                }
            }
            let pivot = m[pivot_row][col];
            for r in 0..pivot_row {
                let q = m[r][col].div_euclid(pivot);
                if q != 0 {
                    for c in 0..cols {
                        m[r][c] -= q * m[pivot_row][c];
                    }
                }
            }
            pivot_row += 1;
        }
    }
    m.truncate(pivot_row);
    m
}

/// Lattice determinant (covolume) of a full-rank lattice in `Z^dim`,
/// or `None` when the generators do not span.
pub fn lattice_det(generators: &[Vec<i64>], dim: usize) -> Option<i64> {
    let basis = hermite_basis(generators);
    if basis.len() != dim {
        return None;
    }
    let mut product = 1i64;
    for (row_idx, row) in basis.iter().enumerate() {
        // In HNF with full rank the pivot of row i sits in column i.
        product *= row[row_idx];
    }
    Some(product)
}

/// Primitive normal of the hyperplane in `Z^dim` spanned by `dim - 1`
/// difference vectors, computed as the generalized cross product (signed
/// maximal minors). Returns `None` when the differences are linearly
/// dependent.
pub fn hyperplane_normal(dim: usize, diffs: &[Vec<i64>]) -> Option<Vec<i64>> {
    if diffs.len() + 1 != dim || diffs.iter().any(|d| d.len() != dim) {
        return None;
    }
    let mut normal = vec![0i64; dim];
    for (j, slot) in normal.iter_mut().enumerate() {
        let minor: Vec<Vec<i64>> = diffs
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(c, &v)| (c != j).then_some(v))
                    .collect()
            })
            .collect();
        let d = if minor.is_empty() { 1 } else { det(&minor) };
        *slot = if j % 2 == 0 { d } else { -d };
    }
    if normal.iter().all(|&v| v == 0) {
        return None;
    }
    Some(primitive(&normal))
}
