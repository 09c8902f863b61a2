use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the exact engine and the numeric layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot lift a value of modulus {from} to modulus {to}")]
    IncompatibleModuli { from: u64, to: u64 },

    #[error("lambda = {0} is an integer; the Lerch function reduces to the Hurwitz zeta function")]
    NotLerch(String),

    #[error("unsupported character: {0}")]
    UnsupportedCharacter(String),

    #[error(
        "parity obstruction: no closed form; use numeric route \
         (L({n}, chi) with chi {parity} has a pi^n closed form only when n and chi share parity; \
         the opposite case requires derivative values L'(1-n, chi-bar))"
    )]
    ParityObstruction { n: u64, parity: &'static str },

    #[error("character mod {modulus} is not primitive (conductor {conductor})")]
    NotPrimitive { modulus: u64, conductor: u64 },

    #[error("character must be odd")]
    NotOdd,

    #[error("character must be even")]
    NotEven,

    #[error("pole at s = 1")]
    PoleAtOne,

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("|alpha| = {alpha} is outside the disc of radius k = {k}")]
    RadiusViolation { alpha: String, k: u64 },

    #[error("independent routes disagree: {0}")]
    RouteMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors caused by the mathematical domain of the request rather
    /// than by an internal inconsistency.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::RouteMismatch(_))
    }
}
