use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("not a prime modulus: {0}")]
    NotPrime(u64),
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("{0} is not reducible into the target field")]
    NotReducible(String),
    #[error("bracket does not satisfy the Leibniz identity")]
    NotLeibniz,
    #[error("actions do not form a representation")]
    NotRepresentation,
    #[error("operator is not a Kupershmidt operator")]
    NotKupershmidt,
    #[error("operator is not a Nijenhuis operator")]
    NotNijenhuis,
    #[error("operator is not a Rota-Baxter operator")]
    NotRotaBaxter,
    #[error("Kupershmidt operators are not compatible")]
    NotCompatible,
    #[error("(N, S) is not a Nijenhuis pair")]
    NotNijenhuisPair,
    #[error("pair check failed: {0}")]
    PairCheckFailed(String),
    #[error("(N, S) is neither a Nijenhuis pair nor a dual-Nijenhuis pair")]
    NeitherPairKind,
    #[error("map is not a solution of the strong Maurer-Cartan equation")]
    NotStrongMc,
    #[error("triple is not a dual KN-structure")]
    NotDualKn,
    #[error("tensor is not a Leibniz r-matrix")]
    NotRMatrix,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("bilinear form is degenerate")]
    Degenerate,
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("cochains live on different spaces")]
    SpaceMismatch,
    #[error("search space of {needed} candidates exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("no instance found after {0} attempts")]
    NotFound(usize),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("missing binding {0:?}")]
    MissingBinding(&'static str),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
