use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("not finite type: reflection closure exceeded {bound} positive roots")]
    NotFiniteType { bound: usize },

    #[error("index {0} is not a simple root")]
    NotSimpleRoot(usize),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("unsupported type: {0}")]
    Unsupported(String),

    #[error("missing analytic declaration for {label} at {point}")]
    MissingDeclaration { label: String, point: String },

    #[error("identically zero factor: {0}")]
    ZeroFactor(String),

    #[error("check '{check}': {source}")]
    Check { check: String, source: Box<Error> },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// Tags the error with the verification check that raised it.
    pub fn in_check(self, check: &str) -> Self {
        Error::Check { check: check.to_string(), source: Box::new(self) }
    }

    /// The error came from malformed input rather than a failed computation.
    pub fn is_input(&self) -> bool {
        match self {
            Error::Input(_) | Error::Json(_) | Error::NotSimpleRoot(_) | Error::Unsupported(_) => true,
            Error::Check { source, .. } => source.is_input(),
            _ => false,
        }
    }
}
