use thiserror::Error;

use crate::funcfield::Place;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotPrime: {0} is not a prime")]
    NotPrime(u64),
    #[error("ReducibleModulus: the defining polynomial is not irreducible over F_{0}")]
    ReducibleModulus(u32),
    #[error("InvalidModulus: {0}")]
    InvalidModulus(String),
    #[error("BadModulusM: m = {m} does not divide q - 1 = {}", .q - 1)]
    BadModulusM { m: u32, q: u32 },
    #[error("FieldTooLarge: {0}")]
    FieldTooLarge(String),
    #[error("ZeroPolynomial")]
    ZeroPolynomial,
    #[error("ConstantPolynomial")]
    ConstantPolynomial,
    #[error("ZeroElement")]
    ZeroElement,
    #[error("Exhausted: every monic irreducible of degree {0} is forbidden")]
    Exhausted(usize),
    #[error("ZeroFunction")]
    ZeroFunction,
    #[error("ZeroDenominator")]
    ZeroDenominator,
    #[error("NotAUnit: valuation {valuation} at {place}")]
    NotAUnit { place: Place, valuation: i64 },
    #[error("NotIrreducible: place polynomial must be monic irreducible")]
    NotIrreducible,
    #[error("PreconditionViolated: v(f) = {valuation} is not coprime to m at ramified place {place}")]
    PreconditionViolated { place: Place, valuation: i64 },
    #[error("ZeroParameter")]
    ZeroParameter,
    #[error("BudgetExhausted after {0} candidates")]
    BudgetExhausted(u64),
    #[error("NonConstantEntries")]
    NonConstantEntries,
    #[error("NonAssociative: basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("NotThroughOrigin")]
    NotThroughOrigin,
    #[error("SharedComponent")]
    SharedComponent,
    #[error("InfiniteIntersection")]
    InfiniteIntersection,
    #[error("NotSquarefree: factor {0}")]
    NotSquarefree(usize),
    #[error("NotCoprime: factors {0} and {1}")]
    NotCoprime(usize, usize),
    #[error("FieldMismatch")]
    FieldMismatch,
}

impl Error {
    /// Variant name, used for error reporting at the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::ReducibleModulus(_) => "ReducibleModulus",
            Error::InvalidModulus(_) => "InvalidModulus",
            Error::BadModulusM { .. } => "BadModulusM",
            Error::FieldTooLarge(_) => "FieldTooLarge",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::ConstantPolynomial => "ConstantPolynomial",
            Error::ZeroElement => "ZeroElement",
            Error::Exhausted(_) => "Exhausted",
            Error::ZeroFunction => "ZeroFunction",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::NotAUnit { .. } => "NotAUnit",
            Error::NotIrreducible => "NotIrreducible",
            Error::PreconditionViolated { .. } => "PreconditionViolated",
            Error::ZeroParameter => "ZeroParameter",
            Error::BudgetExhausted(_) => "BudgetExhausted",
            Error::NonConstantEntries => "NonConstantEntries",
            Error::NonAssociative(..) => "NonAssociative",
            Error::NotThroughOrigin => "NotThroughOrigin",
            Error::SharedComponent => "SharedComponent",
            Error::InfiniteIntersection => "InfiniteIntersection",
            Error::NotSquarefree(_) => "NotSquarefree",
            Error::NotCoprime(..) => "NotCoprime",
            Error::FieldMismatch => "FieldMismatch",
        }
    }

    /// Errors that report a violated mathematical precondition rather than
    /// malformed input.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::PreconditionViolated { .. }
                | Error::Exhausted(_)
                | Error::BudgetExhausted(_)
                | Error::SharedComponent
                | Error::InfiniteIntersection
                | Error::NonAssociative(..)
        )
    }
}
