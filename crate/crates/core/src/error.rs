//! Error type shared across the crate.

use core::fmt;

/// Every failure mode names the violated precondition or invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A symplectic space needs half-dimension `n >= 1`.
    ZeroHalfDimension,
    /// Vector or matrix sizes do not match the ambient space.
    DimensionMismatch { expected: usize, found: usize },
    /// A weight tuple must contain at least one entry.
    EmptyWeights,
    /// Weight tuples must be non-increasing: `a_0 >= a_1 >= ... >= a_{n-1}`.
    WeightsNotSorted,
    /// Weight tuples must consist of strictly positive integers.
    NonPositiveWeight,
    /// The entries of a weight tuple must have gcd 1.
    WeightsNotCoprime,
    /// Orbit parameters must be nonzero rationals.
    ZeroParameter,
    /// The given matrix is not skew-symmetric.
    NotSkewSymmetric,
    /// The given matrix does not satisfy `g^T J - J g = 0`.
    NotWeksSymplectic,
    /// Rational eigenvalues do not account for the full dimension.
    UnsupportedSpectrum,
    /// The configuration does not affinely span its ambient lattice,
    /// or has duplicate points.
    DegenerateConfiguration,
    /// The given point is not a vertex of the polytope.
    NotAVertex,
    /// The chart generators do not span a pointed cone. Vertices always
    /// give pointed cones, so this signals internal misuse.
    NonPointedCone,
    /// Enumeration bounds out of range.
    BadBounds(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroHalfDimension => write!(f, "half-dimension must be at least 1"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::EmptyWeights => write!(f, "weight tuple is empty"),
            Error::WeightsNotSorted => write!(f, "weight tuple is not sorted (non-increasing required)"),
            Error::NonPositiveWeight => write!(f, "weight tuple has a non-positive entry"),
            Error::WeightsNotCoprime => write!(f, "weight tuple entries are not coprime"),
            Error::ZeroParameter => write!(f, "orbit parameters must be nonzero"),
            Error::NotSkewSymmetric => write!(f, "matrix is not skew-symmetric"),
            Error::NotWeksSymplectic => write!(f, "matrix is not weks-symplectic"),
            Error::UnsupportedSpectrum => write!(f, "unsupported spectrum: rational eigenspaces do not fill the space"),
            Error::DegenerateConfiguration => write!(f, "configuration is degenerate"),
            Error::NotAVertex => write!(f, "point is not a vertex of the polytope"),
            Error::NonPointedCone => write!(f, "chart generators do not span a pointed cone"),
            Error::BadBounds(what) => write!(f, "bad enumeration bounds: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
