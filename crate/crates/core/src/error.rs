use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("not a subspace")]
    NotASubspace,
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("unknown basis name `{0}`")]
    UnknownName(String),
    #[error("vector mixes even and odd components")]
    MixedParity,
    #[error("{structure} fails {axiom} ({failures} failing instances)")]
    AxiomFailure {
        structure: String,
        axiom: String,
        failures: usize,
    },
    #[error("not a derivation")]
    NotADerivation,
    #[error("d² ≠ 0")]
    NotSquareZero,
    #[error("not associative")]
    NotAssociative,
    #[error("not commutative")]
    NotCommutative,
    #[error("no bar-unit")]
    NoBarUnit,
    #[error("form not invariant")]
    FormNotInvariant,
    #[error("form is not even and supersymmetric")]
    FormNotSupersymmetric,
    #[error("not a Lie superalgebra")]
    NotLieSuper,
    #[error("not perfect")]
    NotPerfect,
    #[error("not a cocycle")]
    NotACocycle,
    #[error("no factorization through the extension")]
    NoFactorization,
    #[error("does not stabilize the relation space")]
    DoesNotStabilize,
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("type A(n,n) excluded")]
    ExcludedType,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
