use thiserror::Error;

/// Errors raised by the analytical models, the simulator and the experiment runner.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the documented domain of a function.
    #[error("domain error in {func}: {reason}")]
    Domain { func: &'static str, reason: String },

    /// The interference integral diverges (pathloss exponent not above the dimension).
    #[error("interference integral diverges: alpha = {alpha} must exceed dimension {dimension}")]
    Divergence { alpha: f64, dimension: u32 },

    /// Adaptive quadrature ran out of subdivisions before reaching the requested tolerance.
    #[error(
        "quadrature did not converge: estimate {estimate} with error {abs_error} after {subdivisions} subdivisions"
    )]
    NonConvergence {
        estimate: f64,
        abs_error: f64,
        subdivisions: usize,
    },

    /// An iterative series or continued fraction exceeded its iteration budget.
    #[error("{func} did not converge within {iterations} iterations")]
    SeriesNonConvergence { func: &'static str, iterations: usize },

    /// A model or simulation parameter is invalid.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// A simulation could not produce a usable realization.
    #[error("degenerate simulation: {0}")]
    Degenerate(String),

    /// Experiment configuration error.
    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(func: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            func,
            reason: reason.into(),
        }
    }

    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
