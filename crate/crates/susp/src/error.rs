use thiserror::Error;

/// Crate-wide error type.
///
/// Variants are grouped by how the CLI maps them to exit codes: input and
/// usage problems (exit 1), resource limits and cancellation (exit 2), and
/// internal inconsistencies that always indicate a bug (exit 3).
#[derive(Debug, Error)]
pub enum Error {
    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("point does not assign variable `{0}`")]
    MissingAssignment(String),

    #[error("invalid affine transformation: {0}")]
    InvalidTransformation(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("degree error: {0}")]
    Degree(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid suspension: {0}")]
    InvalidSuspension(String),

    #[error("protocol error: {0}")]
    Protocol(String),

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("factors {0} and {1} are proportional")]
    Proportional(usize, usize),

    #[error("variable witness invalid: {0}")]
    WitnessInvalid(String),

    #[error("method not applicable: {0}")]
    Method(String),

    #[error("prime {0} rejected: it divides a coefficient denominator")]
    PrimeRejected(u64),

    #[error("parse error at {line}:{col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("spec file error: {0}")]
    SpecFile(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("computation cancelled")]
    Cancelled,

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// Process exit code class for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Resource(_) | Error::Cancelled => 2,
            Error::Inconsistency(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
