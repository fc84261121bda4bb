use alloc::string::String;

use crate::motzkin::Scheme;
use crate::permstats::{Family, SignScheme};
use crate::snakes::Variant;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("non-invertible substitution")]
    NonInvertibleSubstitution,
    #[error("operator domain is t,q polynomials")]
    OperatorDomain,
    #[error("cannot parse polynomial: {0}")]
    ParsePolynomial(String),

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),
    #[error("type-A crossings need a permutation without negative entries")]
    NegativeEntry,
    #[error("scheme {scheme:?} is not defined over family {family:?}")]
    IncompatibleScheme { scheme: SignScheme, family: Family },

    #[error("down step below axis")]
    DownStepBelowAxis,
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("path is not in scheme {scheme:?}: {reason}")]
    NotInScheme { scheme: Scheme, reason: String },

    #[error("invalid snake for variant {variant:?}: {reason}")]
    InvalidSnake { variant: Variant, reason: String },
    #[error("no snake realizes cs-vector")]
    UnrealizableCsVector,
    #[error("malformed path: {0}")]
    MalformedPath(String),

    /// A structural law that every valid input satisfies was violated.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
