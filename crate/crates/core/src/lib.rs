//! Exact branching coefficients for regular reductive subalgebras of simple
//! Lie algebras, together with the generalized Weyl-Verma character
//! decomposition and generalized BGG resolution induced by the same
//! decomposition of singular elements.
//!
//! The layers, bottom up:
//!
//! - [`rootspace`] and [`weyl`]: root data, Weyl groups, chambers.
//! - [`embedding`]: a regular subalgebra `a`, its orthogonal partner `a_perp`,
//!   the splitting of the Cartan subalgebra, projections and defects.
//! - [`singular`]: singular elements and their decomposition over the
//!   coset representatives `U` of `W / W_perp`.
//! - [`branching`]: the injection fan and the recurrence for branching
//!   coefficients.
//! - [`verma`] and [`resolution`]: generalized Verma characters, the
//!   Weyl-Verma alternating sum, and its grading by Weyl length.
//! - [`oracle`]: independent brute-force checks (Freudenthal, Weyl dimension,
//!   projection-and-peel branching, character by formal division).

pub mod branching;
#[cfg(feature = "cli")]
pub mod cli;
pub mod embedding;
pub mod formal;
pub mod oracle;
pub mod resolution;
pub mod rootspace;
pub mod singular;
pub mod svg;
pub mod verma;
pub mod weight;
pub mod weyl;
mod window;

pub use rootspace::{build_root_datum, AlgebraId, RootDatum, RootSystem, Series};
pub use weight::{Rational, Weight};
pub use weyl::WeylElement;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid algebra `{0}`")]
    InvalidAlgebra(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("simple reflection index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight {0} is not dominant integral")]
    NotDominantIntegral(Weight),
    #[error("{0:?} is not a positive root of the ambient algebra")]
    NotPositiveRoot(Vec<i64>),
    #[error("invalid simple system: {0}")]
    InvalidSimpleSystem(String),
    #[error("Weyl group has more than {0} elements; refusing to enumerate")]
    GroupTooLarge(usize),
    #[error("orthogonal partner is not conjugate to a standard parabolic subsystem")]
    NoParabolicIdentification,
    #[error("depth {0} is too small for this computation")]
    DepthInsufficient(u32),
    #[error("orthogonal partner has rank {0}; rank 1 is required")]
    PerpNotRankOne(usize),
    #[error("branching data does not determine the resolution: {0}")]
    AmbiguousCarrier(String),
    #[error("Weyl dimension formula gave a non-integral or oversized value")]
    NonIntegralDimension,
    #[error("formal division left a non-vanishing remainder")]
    DivisionInconsistency,
    #[error("negative intermediate multiplicity at {0}")]
    NegativeMultiplicity(Weight),
    #[error("drawing needs an ambient algebra of rank 2, got rank {0}")]
    RankNotTwo(usize),
    #[error("{0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
