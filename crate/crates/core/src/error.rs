use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A size/budget parameter is outside the supported range.
    #[error("{what} = {value} out of range (limit {limit})")]
    Sizing {
        what: &'static str,
        value: f64,
        limit: f64,
    },

    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain: {0}")]
    Domain(String),

    /// Evaluation at (or numerically indistinguishable from) a pole.
    #[error("pole: {0}")]
    Pole(String),

    /// A denominator vanished (e.g. zeta at one of its zeros).
    #[error("zero denominator: {0}")]
    ZeroDenominator(String),

    /// Bracketing endpoints do not straddle a sign change.
    #[error("no sign change on [{lo}, {hi}]")]
    BadBracket { lo: f64, hi: f64 },

    #[error("{what} did not converge within {budget} steps")]
    NoConvergence { what: &'static str, budget: u64 },

    /// A truncated contour cannot meet the requested tail tolerance.
    #[error("contour tail bound {bound:.3e} exceeds tolerance {tol:.3e}")]
    TailTolerance { bound: f64, tol: f64 },

    /// Cached data failed validation.
    #[error("cache: {0}")]
    Cache(String),

    #[error("io: {0}")]
    Io(String),

    /// Configuration rejected before any computation ran.
    #[error("config: {0}")]
    Config(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
