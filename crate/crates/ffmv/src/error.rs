use thiserror::Error;

/// Errors raised across the crate. Variants carry enough context to be
/// actionable from the CLI without a backtrace.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("p = {0} is not prime")]
    NonPrimeP(u64),
    #[error("modulus is not irreducible over F_{0}")]
    ReducibleModulus(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero modulus")]
    ZeroModulus,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("unit group of order {order} exceeds budget {budget}")]
    GroupTooLarge { order: u64, budget: u64 },
    #[error("degree {n} below minimum {min} for this operation")]
    DegreeTooSmall { n: usize, min: usize },
    #[error("enumeration size {size} exceeds budget {budget}")]
    BudgetExceeded { size: u64, budget: u64 },
    #[error("cross-check mismatch in {context}: |{lhs} - {rhs}| = {diff}")]
    CrossCheckMismatch {
        context: String,
        lhs: String,
        rhs: String,
        diff: f64,
    },
    #[error("partition sizes differ: |lambda| = {0}, |mu| = {1}")]
    SizeMismatch(usize, usize),
    #[error("argument outside the allowed domain: {0}")]
    DomainError(String),
    #[error("root finding residual {residual} above tolerance {tol}")]
    NumericalInstability { residual: f64, tol: f64 },
    #[error("orthogonality violation: {0}")]
    OrthogonalityViolation(String),
    #[error("bound violation: {0}")]
    BoundViolation(String),
    #[error("degree constraint violated: {0}")]
    DegreeConstraintViolated(String),
    #[error("polynomial is not coprime to the modulus")]
    NotCoprime,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
