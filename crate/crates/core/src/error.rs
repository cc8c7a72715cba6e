use thiserror::Error;

/// Errors produced by the algebra, series and solver routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series could not be inverted because its leading term vanishes.
    #[error("singular series: {0}")]
    Singular(String),

    /// The caller violated a documented precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The function has no sign change over the bracket.
    #[error("no sign change on [{lo}, {hi}] (f(lo) = {f_lo}, f(hi) = {f_hi})")]
    NoBracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    /// The function returned NaN or an infinity.
    #[error("non-finite function value at x = {x}")]
    NonFinite { x: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
