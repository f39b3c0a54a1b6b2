//! The toric Legendrian family built from a weight tuple.
//!
//! A tuple of coprime non-increasing positive integers
//! `(a_0, ..., a_{n-1})` determines torus weights in `Z^{n-1}`:
//! `w_0 = (a_1, ..., a_{n-1})`, `w_i = a_0 e_i` for `i >= 1`, together
//! with their negatives. The variety is the closure of the torus orbit of
//! `(-a_0, a_1, ..., a_{n-1}, 1, ..., 1)` on the affine cone; this module
//! evaluates the orbit map, its tangent frames, and checks the frames are
//! Lagrangian, all in exact rational arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lattice;
use crate::matrix::{rat, Rational, RationalMatrix, VectorList};
use crate::symplectic::SymplecticSpace;

/// Coprime non-increasing positive integers `(a_0, ..., a_{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightTuple {
    a: Vec<i64>,
}

impl WeightTuple {
    /// Validates the tuple invariants; each rejection names the violated
    /// one: sortedness, positivity, coprimality.
    pub fn new(values: &[i64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyWeights);
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::WeightsNotSorted);
        }
        if values.iter().any(|&v| v <= 0) {
            return Err(Error::NonPositiveWeight);
        }
        if lattice::gcd_slice(values) != 1 {
            return Err(Error::WeightsNotCoprime);
        }
        Ok(WeightTuple { a: values.to_vec() })
    }

    /// Tuple length `n`.
    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.a
    }

    /// `a_0 > a_1 + ... + a_{n-1}`, i.e. `w_0` lies strictly inside the
    /// octahedron spanned by the other weights.
    pub fn has_interior_weight(&self) -> bool {
        self.a[0] > self.a[1..].iter().sum::<i64>()
    }

    pub fn configuration(&self) -> WeightConfiguration {
        weight_configuration(self)
    }
}

/// The `2n` lattice points `w_0, ..., w_{n-1}, -w_0, ..., -w_{n-1}`
/// in `Z^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightConfiguration {
    dim: usize,
    points: Vec<Vec<i64>>,
}

/// Builds the configuration of a tuple: `w_0 = (a_1, ..., a_{n-1})`,
/// `w_i = a_0 e_i`, and the negations, in that order.
pub fn weight_configuration(tuple: &WeightTuple) -> WeightConfiguration {
    let n = tuple.n();
    let dim = n - 1;
    let a = tuple.entries();
    let mut points = Vec::with_capacity(2 * n);
    points.push(a[1..].to_vec());
    for i in 0..dim {
        let mut e = vec![0i64; dim];
        e[i] = a[0];
        points.push(e);
    }
    for i in 0..n {
        points.push(points[i].iter().map(|&v| -v).collect());
    }
    WeightConfiguration { dim, points }
}

impl WeightConfiguration {
    /// Ambient lattice dimension `n - 1`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of weight pairs `n`.
    pub fn n(&self) -> usize {
        self.points.len() / 2
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    /// The first half `w_0, ..., w_{n-1}`.
    pub fn positive_half(&self) -> &[Vec<i64>] {
        &self.points[..self.n()]
    }

    /// Test-support constructor for synthetic (possibly invalid)
    /// configurations; the second half must negate the first.
    pub fn from_points(dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        if !points.len().is_multiple_of(2) || points.iter().any(|p| p.len() != dim) {
            return Err(Error::DegenerateConfiguration);
        }
        let n = points.len() / 2;
        for i in 0..n {
            if points[n + i].iter().zip(&points[i]).any(|(&b, &a)| b != -a) {
                return Err(Error::DegenerateConfiguration);
            }
        }
        Ok(WeightConfiguration { dim, points })
    }

    /// All weights pairwise distinct and affinely spanning.
    pub fn is_nondegenerate(&self) -> bool {
        for (i, p) in self.points.iter().enumerate() {
            if self.points[i + 1..].contains(p) {
                return false;
            }
        }
        let base = &self.points[0];
        let diffs: Vec<Vec<i64>> = self.points[1..]
            .iter()
            .map(|p| p.iter().zip(base).map(|(&x, &b)| x - b).collect())
            .collect();
        lattice::hermite_basis(&diffs).len() == self.dim
    }

    /// One diagonal matrix per torus coordinate `k`:
    /// `diag(w_0^(k), ..., w_{n-1}^(k), -w_0^(k), ..., -w_{n-1}^(k))`.
    /// Each lies in `sp`, which certifies that the torus acts through
    /// symplectic transformations.
    pub fn torus_generators(&self) -> Vec<RationalMatrix> {
        let n = self.n();
        (0..self.dim)
            .map(|k| {
                let mut entries = Vec::with_capacity(2 * n);
                for j in 0..n {
                    entries.push(rat(self.points[j][k]));
                }
                for j in 0..n {
                    entries.push(rat(-self.points[j][k]));
                }
                RationalMatrix::diagonal(&entries)
            })
            .collect()
    }
}

/// A point of the affine cone, never the zero vector; scalar equivalence
/// is the caller's business.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPoint {
    coords: Vec<Rational>,
}

impl OrbitPoint {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }
}

/// The distinguished point `(-a_0, a_1, ..., a_{n-1}, 1, ..., 1)`.
pub fn base_point(tuple: &WeightTuple) -> OrbitPoint {
    let n = tuple.n();
    let a = tuple.entries();
    let mut coords = Vec::with_capacity(2 * n);
    coords.push(rat(-a[0]));
    for &ai in &a[1..] {
        coords.push(rat(ai));
    }
    coords.extend(core::iter::repeat_with(Rational::one).take(n));
    OrbitPoint { coords }
}

/// `t^w` for a lattice exponent vector `w`, with exact inverse powers.
fn monomial(params: &[Rational], exponents: &[i64]) -> Rational {
    params
        .iter()
        .zip(exponents)
        .fold(Rational::one(), |acc, (t, &e)| {
            acc * t.pow(i32::try_from(e).expect("weight exponents fit i32"))
        })
}

/// Evaluates the orbit map at the given nonzero parameters: coordinate
/// `j < n` is `x_j t^{w_j}` (with `x_0 = -a_0`, `x_i = a_i`) and
/// coordinate `n + j` is `t^{-w_j}`.
pub fn orbit_point(tuple: &WeightTuple, params: &[Rational]) -> Result<OrbitPoint> {
    let n = tuple.n();
    if params.len() != n - 1 {
        return Err(Error::DimensionMismatch {
            expected: n - 1,
            found: params.len(),
        });
    }
    if params.iter().any(Rational::is_zero) {
        return Err(Error::ZeroParameter);
    }
    let config = tuple.configuration();
    let weights = config.positive_half();
    let base = base_point(tuple);
    let mut coords = Vec::with_capacity(2 * n);
    for j in 0..n {
        coords.push(&base.coords()[j] * monomial(params, &weights[j]));
    }
    for j in 0..n {
        let negated: Vec<i64> = weights[j].iter().map(|&v| -v).collect();
        coords.push(monomial(params, &negated));
    }
    Ok(OrbitPoint { coords })
}

/// The affine tangent frame at `orbit_point(tuple, params)`: the Euler
/// vector `v` (the point itself) followed by `u_k = t_k d/dt_k` of the
/// orbit map, which multiplies coordinate `j` by the `k`-th component of
/// its weight.
pub fn tangent_frame(tuple: &WeightTuple, params: &[Rational]) -> Result<VectorList> {
    let point = orbit_point(tuple, params)?;
    Ok(frame_at(tuple, &point))
}

/// Applies the logarithmic-derivative rule to an arbitrary cone point.
fn frame_at(tuple: &WeightTuple, point: &OrbitPoint) -> VectorList {
    let n = tuple.n();
    let config = tuple.configuration();
    let weights = config.positive_half();
    let coords = point.coords();
    let mut vectors = Vec::with_capacity(n);
    vectors.push(coords.to_vec());
    for k in 0..n - 1 {
        let mut u = Vec::with_capacity(2 * n);
        for j in 0..n {
            u.push(&coords[j] * rat(weights[j][k]));
        }
        for j in 0..n {
            u.push(&coords[n + j] * rat(-weights[j][k]));
        }
        vectors.push(u);
    }
    VectorList::new(vectors).expect("frame vectors share length 2n")
}

fn nonzero_digit<R: Rng>(rng: &mut R) -> i64 {
    loop {
        let v = rng.gen_range(-9i64..=9);
        if v != 0 {
            return v;
        }
    }
}

/// Checks that the tangent frame is Lagrangian at the base point and at
/// `trials` seeded pseudo-random parameter vectors with numerators and
/// denominators in `[-9, 9] \ {0}`. Exactness makes each nonzero
/// parameter choice conclusive on the dense orbit.
pub fn verify_legendrian(tuple: &WeightTuple, trials: usize, seed: u64) -> bool {
    let n = tuple.n();
    let space = SymplecticSpace::new(n).expect("tuple length is at least 1");
    let ones = vec![Rational::one(); n - 1];
    let base_frame = tangent_frame(tuple, &ones).expect("ones are nonzero");
    if !space
        .is_lagrangian(&base_frame)
        .expect("frame lives in dimension 2n")
    {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let params: Vec<Rational> = (0..n - 1)
            .map(|_| {
                Rational::new(nonzero_digit(&mut rng).into(), nonzero_digit(&mut rng).into())
            })
            .collect();
        let frame = tangent_frame(tuple, &params).expect("parameters are nonzero");
        if !space
            .is_lagrangian(&frame)
            .expect("frame lives in dimension 2n")
        {
            return false;
        }
    }
    true
}
