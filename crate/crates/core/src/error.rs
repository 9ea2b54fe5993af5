use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exact quotient was requested but the divisor does not divide.
    /// Every quantity in this crate is an integer, so this always means a bug
    /// or a caller passing parameters outside a route's domain.
    #[error("divisibility violation: {dividend} is not divisible by {divisor}")]
    Divisibility { dividend: BigInt, divisor: BigInt },

    #[error("division by zero")]
    DivisionByZero,

    #[error("ring parameter mismatch: {0}")]
    ParamMismatch(String),

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("identity `{identity}` violated at {location}: lhs = {lhs}, rhs = {rhs}")]
    IdentityViolation {
        identity: String,
        location: String,
        lhs: String,
        rhs: String,
    },

    #[error("enumeration budget exceeded: {needed} objects requested, limit is {limit}")]
    BudgetExceeded { needed: BigInt, limit: u64 },

    #[error("singular matrix: zero diagonal entry at row {0}")]
    SingularMatrix(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
