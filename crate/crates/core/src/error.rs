use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ZeroVector: the zero vector has no primitive representative")]
    ZeroVector,

    #[error("NoSolution: the linear system is inconsistent")]
    NoSolution,

    #[error("NonUnique: the linear system has rank {rank} < {dim}")]
    NonUnique { rank: usize, dim: usize },

    #[error("DimensionMismatch: expected dimension {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("DegenerateCone: {0}")]
    DegenerateCone(String),

    #[error("NotInSemigroup: exponent {0:?} is not in the dual cone lattice")]
    NotInSemigroup(Vec<i64>),

    #[error("NotInDualCone: point {0} is not in the dual cone")]
    NotInDualCone(String),

    #[error("EmptyIdeal: a monomial ideal needs at least one generator")]
    EmptyIdeal,

    #[error("UnitIdeal: operation requires a proper ideal")]
    UnitIdeal,

    #[error("ContextMismatch: ideals live on different cones")]
    ContextMismatch,

    #[error("InvalidFrobeniusPower: q = {0} (must be at least 2)")]
    InvalidFrobeniusPower(u64),

    #[error("NotPrime: {0} is not prime")]
    NotPrime(u64),

    #[error("UnsupportedJ: {0}")]
    UnsupportedJ(String),

    #[error("SimplicialRequired: the cone has {rays} rays in dimension {dim}")]
    SimplicialRequired { rays: usize, dim: usize },

    #[error("NotMPrimary: {0}")]
    NotMPrimary(String),

    #[error("NotGorenstein: {0}")]
    NotGorenstein(String),

    #[error("InvalidExponent: {0}")]
    InvalidExponent(String),

    #[error(
        "EnumerationBoundExceeded: shell certificate still failing after {doublings} box doublings \
         ({} partial generators)",
        partial.len()
    )]
    EnumerationBoundExceeded {
        doublings: u32,
        partial: Vec<Vec<i64>>,
    },

    #[error("OracleBudgetExceeded: more than {budget} frontier states")]
    OracleBudgetExceeded { budget: usize },

    #[error("FrobeniusPowerTooLarge: q = {q} exceeds the configured maximum {max}")]
    FrobeniusPowerTooLarge { q: u64, max: u64 },

    #[error("Overflow: {0}")]
    Overflow(String),

    #[error("Parse: {0}")]
    Parse(String),
}
