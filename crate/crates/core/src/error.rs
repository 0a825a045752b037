use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomials live over different variable tables")]
    MismatchedTables,
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("not invertible as truncated series")]
    NotInvertible,
    #[error("variable {0} must be capped")]
    UncappedVariable(String),
    #[error("argument has a nonzero constant term")]
    NonZeroConstantTerm,
    #[error("negative argument {0}")]
    NegativeArgument(i64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("refusing to enumerate {requested} elements (bound {bound}); raise WREATH_RESOURCE_BOUND to allow")]
    ResourceGuard { requested: u128, bound: u128 },
    #[error("not primitive")]
    NotPrimitive,
    #[error("violates rule {rule}: {detail}")]
    RuleViolation { rule: u8, detail: String },
    #[error("unreachable case: {0}")]
    UnreachableCase(String),
}

pub type Result<T> = std::result::Result<T, Error>;
