use std::fmt;

/// Errors produced by the library. Input validation failures are kept
/// distinct from internal verification failures so callers (in particular
/// the CLI) can map them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// gcd(0, 0) requested.
    GcdUndefined,
    /// An operation that needs a nonzero polynomial got the zero polynomial.
    ZeroPolynomial,
    /// A rational or polynomial string failed to parse.
    Parse(String),
    /// Gram matrix is not square.
    GramNotSquare,
    /// Gram matrix is not symmetric.
    GramNotSymmetric,
    /// Gram matrix has an odd diagonal entry (lattice would not be even).
    GramOddDiagonal,
    /// Gram matrix is not positive definite.
    GramNotPositiveDefinite,
    /// A vector claimed to be in the dual lattice is not.
    NotInDualLattice,
    /// A coset representative is not of minimal norm in its coset.
    NotInS,
    /// No finite-dimensional simple module with the given highest weight
    /// exists within the search bound.
    NoFiniteSimple { max_dim: usize },
    /// classify_simples called for g = 0.
    NoSimplesToClassify,
    /// A structure algebra handed to is_semisimple is not closed under
    /// multiplication.
    NotClosed,
    /// Parameters outside the stated range of an identity.
    OutsideRange(String),
    /// An internally verified identity failed; carries a description.
    /// This signals a bug, not a user error.
    InternalCheck(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GcdUndefined => write!(f, "gcd undefined for two zero polynomials"),
            Error::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::GramNotSquare => write!(f, "gram matrix is not square"),
            Error::GramNotSymmetric => write!(f, "gram matrix is not symmetric"),
            Error::GramOddDiagonal => write!(f, "odd diagonal: lattice is not even"),
            Error::GramNotPositiveDefinite => write!(f, "gram matrix is not positive definite"),
            Error::NotInDualLattice => write!(f, "vector is not in the dual lattice"),
            Error::NotInS => write!(f, "not in S: representative is not of minimal norm in its coset"),
            Error::NoFiniteSimple { max_dim } => write!(
                f,
                "no finite-dimensional simple with this highest weight within bound {max_dim}"
            ),
            Error::NoSimplesToClassify => write!(f, "no finite-dimensional simples to classify for g = 0"),
            Error::NotClosed => write!(f, "structure constants are not closed under multiplication"),
            Error::OutsideRange(s) => write!(f, "outside stated range: {s}"),
            Error::InternalCheck(s) => write!(f, "internal verification failure: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
