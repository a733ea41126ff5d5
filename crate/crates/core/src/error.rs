use thiserror::Error;

/// Errors produced anywhere in the crate.
///
/// The variants are grouped so that a command-line front end can map them
/// onto distinct exit codes (see [`Error::exit_code`]).
#[derive(Debug, Error)]
pub enum Error {
    /// A count (vertices, matrix size, binomial value) exceeded a configured
    /// cap or the native word width.
    #[error("sizing error: {what} = {value} exceeds cap {cap}")]
    Sizing {
        what: &'static str,
        value: String,
        cap: String,
    },

    /// An arithmetic result does not fit in 64 bits.
    #[error("overflow computing {0}")]
    Overflow(String),

    /// A theorem or construction was invoked outside its hypotheses. The
    /// message names the violated inequality.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// An exhaustive search ran out of budget.
    #[error("search cap exceeded: {0}")]
    CapExceeded(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("modulus {0:?} is not irreducible over the prime field")]
    ReducibleModulus(Vec<u8>),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("malformed file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn sizing(what: &'static str, value: impl ToString, cap: impl ToString) -> Self {
        Error::Sizing {
            what,
            value: value.to_string(),
            cap: cap.to_string(),
        }
    }

    /// Process exit code: 2 for hypothesis violations, 3 for exceeded caps,
    /// 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Hypothesis(_) => 2,
            Error::Sizing { .. } | Error::CapExceeded(_) | Error::Overflow(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
