use thiserror::Error;

/// Errors raised by the library. Budget exhaustion inside [`orbit`] is a
/// value, not an error; everywhere else it surfaces as [`Error::BudgetExceeded`].
///
/// [`orbit`]: crate::dynamics::orbit
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variant index {0} is not in 1..=4")]
    InvalidVariant(usize),
    #[error("budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("argument outside the formula's domain: {0}")]
    Domain(String),
    #[error("family instance: {0}")]
    Family(String),
}

pub type Result<T> = std::result::Result<T, Error>;
