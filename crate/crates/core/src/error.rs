use thiserror::Error;

/// Errors raised across the codec, ODE, statistics and file layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("message needs {needed} bits but capacity is {capacity} bits")]
    Capacity { needed: usize, capacity: usize },

    #[error("infeasible interval geometry for symbol {symbol}: width {width:e} <= 0")]
    InfeasibleGeometry { symbol: u32, width: f64 },

    #[error("corrupted payload: {0}")]
    Corruption(String),

    #[error("integration diverged at step {step}")]
    Divergence { step: usize },

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Argument(_) | Error::Config(_) | Error::Domain(_) => 2,
            Error::Capacity { .. } => 3,
            Error::InfeasibleGeometry { .. } => 4,
            Error::Corruption(_) => 5,
            Error::Divergence { .. } => 6,
            Error::Io(_) => 7,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
