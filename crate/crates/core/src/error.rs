use thiserror::Error;

use crate::expand::CFraction;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("domain mismatch: {0} vs {1}")]
    DomainMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor}")]
    NonExactDivision { dividend: String, divisor: String },
    #[error("constant term {0} is not invertible here")]
    NonUnitConstantTerm(String),
    #[error("coefficient of t^{index} is nonzero")]
    NonzeroLowCoefficients { index: usize },
    #[error("shift by {shift} exceeds series order {order}")]
    OrderUnderflow { shift: usize, order: usize },
    #[error("constant term violates the precondition: {0}")]
    ConstantTermViolation(String),
    #[error("level {level}: required p = {expected}, found p = {found}")]
    StrictShapeViolation { level: usize, expected: usize, found: usize },
    #[error("g_-1 must have constant term 1")]
    BadGMinus1,
    #[error("extension disagrees with the known series at t^{index}")]
    InconsistentExtension { index: usize },
    #[error("requested order {requested} but the fraction only determines the series through {available}")]
    InsufficientDepth { requested: usize, available: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid shape: {0}")]
    BadShape(String),
    #[error("singular Hankel pivot at index {index}")]
    SingularPivot { index: usize },
    #[error("constant term of {0} is not as required")]
    BadConstantTerm(String),
    #[error("level {level} has p = {p} > 1")]
    PEncountered { level: usize, p: usize },
    #[error("size {size} exceeds the limit {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("weight {0} is not available")]
    MissingWeight(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("expansion stopped at level {level}: {cause}")]
    Interrupted {
        level: usize,
        partial: Box<CFraction>,
        cause: Box<Error>,
    },
}

impl Error {
    /// Stable identifier used in machine-readable error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DomainMismatch(..) => "DomainMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::NonExactDivision { .. } => "NonExactDivision",
            Error::NonUnitConstantTerm(_) => "NonUnitConstantTerm",
            Error::NonzeroLowCoefficients { .. } => "NonzeroLowCoefficients",
            Error::OrderUnderflow { .. } => "OrderUnderflow",
            Error::ConstantTermViolation(_) => "ConstantTermViolation",
            Error::StrictShapeViolation { .. } => "StrictShapeViolation",
            Error::BadGMinus1 => "BadGMinus1",
            Error::InconsistentExtension { .. } => "InconsistentExtension",
            Error::InsufficientDepth { .. } => "InsufficientDepth",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::BadShape(_) => "BadShape",
            Error::SingularPivot { .. } => "SingularPivot",
            Error::BadConstantTerm(_) => "BadConstantTerm",
            Error::PEncountered { .. } => "PEncountered",
            Error::SizeLimit { .. } => "SizeLimit",
            Error::UnknownFamily(_) => "UnknownFamily",
            Error::BadParams(_) => "BadParams",
            Error::IndexOutOfRange(_) => "IndexOutOfRange",
            Error::MissingWeight(_) => "MissingWeight",
            Error::Parse(_) => "Parse",
            Error::Interrupted { cause, .. } => cause.kind(),
        }
    }

    /// Strips an `Interrupted` wrapper.
    pub fn root(&self) -> &Error {
        match self {
            Error::Interrupted { cause, .. } => cause.root(),
            e => e,
        }
    }
}
