use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{a} and {m} are not coprime, no inverse exists")]
    NoInverse { a: i64, m: i64 },

    #[error("arguments {a} and {b} are not coprime (gcd {gcd})")]
    NotCoprime { a: i64, b: i64, gcd: i64 },

    #[error("gcd of {values:?} is {gcd}, the Frobenius number is undefined")]
    GcdNotOne { values: Vec<i64>, gcd: i64 },

    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: &'static str, reason: String },

    #[error("closed-form partition count for n = {n} is {value}, which is not a nonnegative integer")]
    NonIntegralPartition { n: u64, value: String },

    #[error("radicand of the upper bound is negative for ({a}, {b}, {c})")]
    NegativeRadicand { a: i64, b: i64, c: i64 },

    #[error("could not draw {wanted} distinct pairwise coprime triples from [{min}, {max}] (got {got})")]
    SamplingExhausted {
        wanted: usize,
        got: usize,
        min: i64,
        max: i64,
    },

    #[error("line {line}: {message}")]
    Csv { line: u64, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidArgument {
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

pub type Result<T> = std::result::Result<T, Error>;
