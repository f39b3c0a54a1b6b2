//! Exact symplectic linear algebra over the rationals.
//!
//! The standard form on `Q^{2n}` has matrix `J = [[0, Id], [-Id, 0]]`,
//! so `J^2 = -Id`. A matrix `g` is symplectic-algebra (`sp`) when
//! `g^T J + J g = 0` and weks-symplectic (`asp`) when `g^T J - J g = 0`;
//! equivalently `Jg` is symmetric respectively skew-symmetric. The two
//! conditions split `gl_{2n}` as `g = g_+ + g_-` with
//! `g_+ = (g + J g^T J)/2` and `g_- = (g - J g^T J)/2`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::{frac, Rational, RationalMatrix, VectorList};

/// The `2n x 2n` block matrix `[[0, Id_n], [-Id_n, 0]]`. Rejects `n = 0`.
pub fn standard_symplectic_matrix(n: usize) -> Result<RationalMatrix> {
    if n == 0 {
        return Err(Error::ZeroHalfDimension);
    }
    let mut j = RationalMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j.set(i, n + i, Rational::one());
        j.set(n + i, i, -Rational::one());
    }
    Ok(j)
}

/// `Q^{2n}` with the standard symplectic form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticSpace {
    n: usize,
    j: RationalMatrix,
}

impl SymplecticSpace {
    pub fn new(n: usize) -> Result<Self> {
        Ok(SymplecticSpace {
            n,
            j: standard_symplectic_matrix(n)?,
        })
    }

    /// Half-dimension `n`.
    pub fn half_dim(&self) -> usize {
        self.n
    }

    /// Ambient dimension `2n`.
    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// The matrix of the form.
    pub fn form_matrix(&self) -> &RationalMatrix {
        &self.j
    }

    fn check_vector(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_matrix(&self, g: &RationalMatrix) -> Result<()> {
        if g.rows() != self.dim() || g.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: g.rows().max(g.cols()),
            });
        }
        Ok(())
    }

    /// The pairing `omega(u, v) = u^T J v`.
    pub fn omega(&self, u: &[Rational], v: &[Rational]) -> Result<Rational> {
        self.check_vector(u)?;
        self.check_vector(v)?;
        let n = self.n;
        let mut acc = Rational::zero();
        for k in 0..n {
            acc = acc + &u[k] * &v[n + k] - &u[n + k] * &v[k];
        }
        Ok(acc)
    }

    /// Whether `g^T J + J g = 0`.
    pub fn in_sp(&self, g: &RationalMatrix) -> Result<bool> {
        self.check_matrix(g)?;
        let residual = &(&g.transpose() * &self.j) + &(&self.j * g);
        Ok(residual.is_zero())
    }

    /// Whether `g^T J - J g = 0`; equivalently `Jg` is skew-symmetric.
    pub fn in_asp(&self, g: &RationalMatrix) -> Result<bool> {
        self.check_matrix(g)?;
        let residual = &(&g.transpose() * &self.j) - &(&self.j * g);
        Ok(residual.is_zero())
    }

    /// Splits `g` into its `sp` and `asp` components,
    /// `g_+ = (g + J g^T J)/2` and `g_- = (g - J g^T J)/2`.
    pub fn decompose(&self, g: &RationalMatrix) -> Result<(RationalMatrix, RationalMatrix)> {
        self.check_matrix(g)?;
        let conjugate = &(&self.j * &g.transpose()) * &self.j;
        let half = frac(1, 2);
        let plus = (g + &conjugate).scale(&half);
        let minus = (g - &conjugate).scale(&half);
        Ok((plus, minus))
    }

    /// The unique `g` with `J g = K` for skew-symmetric `K`,
    /// namely `g = -J K`.
    pub fn asp_from_skew(&self, k: &RationalMatrix) -> Result<RationalMatrix> {
        self.check_matrix(k)?;
        if !k.is_skew_symmetric() {
            return Err(Error::NotSkewSymmetric);
        }
        Ok(&(-&self.j) * k)
    }

    /// Whether the span of the given vectors is Lagrangian: dimension
    /// exactly `n` and `omega` vanishing on it.
    pub fn is_lagrangian(&self, basis: &VectorList) -> Result<bool> {
        if basis.is_empty() || basis.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: basis.dim(),
            });
        }
        if basis.rank() != self.n {
            return Ok(false);
        }
        let vectors = basis.vectors();
        for (i, u) in vectors.iter().enumerate() {
            for v in &vectors[i + 1..] {
                if !self.omega(u, v)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Exact eigenspace decomposition of a weks-symplectic matrix with
    /// rational spectrum, checking that distinct eigenspaces are
    /// `omega`-orthogonal and that `omega` restricts non-degenerately to
    /// each of them.
    ///
    /// Fails with [`Error::UnsupportedSpectrum`] when rational eigenvalues
    /// do not account for the full dimension (irrational or defective
    /// spectrum); such inputs are reported, never approximated.
    pub fn eigenspace_pairing(&self, g: &RationalMatrix) -> Result<EigenspacePairing> {
        if !self.in_asp(g)? {
            return Err(Error::NotWeksSymplectic);
        }
        let roots = rational_roots(&g.char_poly())?;
        let mut eigenspaces: Vec<(Rational, Vec<Vec<Rational>>)> = Vec::new();
        let mut total_dim = 0;
        for lambda in roots {
            let shifted = g - &RationalMatrix::identity(self.dim()).scale(&lambda);
            let kernel = shifted.kernel_basis();
            if kernel.is_empty() {
                continue;
            }
            total_dim += kernel.len();
            eigenspaces.push((lambda, kernel));
        }
        if total_dim != self.dim() {
            return Err(Error::UnsupportedSpectrum);
        }

        let mut cross_orthogonal = true;
        for (i, (_, space_a)) in eigenspaces.iter().enumerate() {
            for (_, space_b) in &eigenspaces[i + 1..] {
                for u in space_a {
                    for v in space_b {
                        if !self.omega(u, v)?.is_zero() {
                            cross_orthogonal = false;
                        }
                    }
                }
            }
        }

        let mut eigenspaces_symplectic = true;
        for (_, space) in &eigenspaces {
            let k = space.len();
            let mut gram = RationalMatrix::zeros(k, k);
            for (i, u) in space.iter().enumerate() {
                for (jj, v) in space.iter().enumerate() {
                    gram.set(i, jj, self.omega(u, v)?);
                }
            }
            if gram.rank() != k {
                eigenspaces_symplectic = false;
            }
        }

        Ok(EigenspacePairing {
            eigenvalues: eigenspaces
                .into_iter()
                .map(|(lambda, space)| (lambda, space.len()))
                .collect(),
            cross_orthogonal,
            eigenspaces_symplectic,
        })
    }
}

/// Outcome of [`SymplecticSpace::eigenspace_pairing`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenspacePairing {
    /// Rational eigenvalues with their eigenspace dimensions, in
    /// increasing eigenvalue order.
    pub eigenvalues: Vec<(Rational, usize)>,
    /// Distinct eigenspaces pair to zero under `omega`.
    pub cross_orthogonal: bool,
    /// `omega` has full rank on every eigenspace.
    pub eigenspaces_symplectic: bool,
}

impl EigenspacePairing {
    pub fn holds(&self) -> bool {
        self.cross_orthogonal && self.eigenspaces_symplectic
    }
}

/// All rational roots of the polynomial with the given descending
/// coefficients, via the rational root bound on a denominator-cleared
/// primitive integer polynomial.
fn rational_roots(coeffs: &[Rational]) -> Result<Vec<Rational>> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();

    let mut roots: Vec<Rational> = Vec::new();
    while ints.len() > 1 && ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
        if roots.is_empty() {
            roots.push(Rational::zero());
        }
    }
    if ints.len() <= 1 {
        return Ok(roots);
    }

    let lead = ints.first().expect("non-empty").abs();
    let constant = ints.last().expect("non-empty").abs();
    let (Some(lead), Some(constant)) = (lead.to_u64(), constant.to_u64()) else {
        return Err(Error::UnsupportedSpectrum);
    };
    for p in divisors(constant) {
        for q in divisors(lead) {
            for sign in [1i64, -1] {
                let candidate = Rational::new(BigInt::from(sign) * BigInt::from(p), BigInt::from(q));
                if roots.contains(&candidate) {
                    continue;
                }
                let value = ints
                    .iter()
                    .fold(Rational::zero(), |acc, c| acc * &candidate + Rational::from_integer(c.clone()));
                if value.is_zero() {
                    roots.push(candidate);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

fn divisors(v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= v {
        if v.is_multiple_of(d) {
            out.push(d);
            if d != v / d {
                out.push(v / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}
