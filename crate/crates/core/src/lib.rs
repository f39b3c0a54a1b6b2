//! Exact-arithmetic toolkit for toric Legendrian subvarieties of projective space.
//!
//! Everything in this crate is computed over exact rationals or integers;
//! there are no floating-point numbers and no tolerances. The crate provides:
//!
//! - [`symplectic`]: the standard symplectic form on `Q^{2n}`, the split of
//!   `gl_{2n}` into its symplectic and weks-symplectic parts, Lagrangian
//!   subspace tests, and eigenspace pairing checks.
//! - [`orbit`]: the toric family parametrized by coprime non-increasing
//!   weight tuples `(a_0, ..., a_{n-1})`: weight configurations, orbit
//!   points, tangent frames, and the symbolic Legendrian verification.
//! - [`polytope`]: exact convex hulls of weight configurations, edge
//!   enumeration, the simple-polytope test, and a sufficient-condition
//!   edge oracle cross-checked against the hull.
//! - [`smoothness`]: vertex-chart affine semigroups and the free-semigroup
//!   smoothness criterion.
//! - [`classify`]: tuple enumeration and the exhaustive classification
//!   reports combining all verdicts.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization, and the CLI
//! live in the companion `legendric` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod error;
pub mod lattice;
pub mod matrix;
pub mod orbit;
pub mod polytope;
pub mod smoothness;
pub mod symplectic;

pub use classify::{
    classify, classify_all, enumerate_tuples, simple_survivors, ClassificationReport,
    TupleEnumeration,
};
pub use error::Error;
pub use matrix::{Rational, RationalMatrix, VectorList};
pub use orbit::{WeightConfiguration, WeightTuple};
pub use polytope::{EdgeSet, LatticePolytope};
pub use symplectic::SymplecticSpace;

/// Seed used for trial parameter vectors when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x4c45_4745;

/// Number of random parameter vectors tried by default in Legendrian checks.
pub const DEFAULT_TRIALS: usize = 5;
