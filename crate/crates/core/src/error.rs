use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A divisor class that should be integral came out fractional.
    #[error("integrality error: {0}")]
    Integrality(String),
    /// Two independent routes to the same number disagree.
    #[error("inconsistency: {0}")]
    Inconsistency(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A polynomial system was evaluated at a point off its zero locus.
    #[error("point is not on the variety: {0}")]
    OffVariety(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid scenario: {0}")]
    Validation(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Short machine-readable tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Integrality(_) => "integrality",
            Error::Inconsistency(_) => "inconsistency",
            Error::Precondition(_) => "precondition",
            Error::OffVariety(_) => "off_variety",
            Error::Parse(_) => "parse",
            Error::Validation(_) => "validation",
            Error::Io(_) => "io",
        }
    }
}
