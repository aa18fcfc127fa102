use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The requested point is a pole of the function.
    #[error("pole at {0}")]
    Pole(String),

    /// The value exists but no closed form for it is implemented
    /// (e.g. `Z(3, a)`).
    #[error("no closed form in source for {function}({s}, a)")]
    NoClosedForm { function: char, s: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("division by zero")]
    DivisionByZero,

    /// A numeric kernel produced NaN or overflowed.
    #[error("non-finite result in {0}")]
    NonFinite(&'static str),

    #[error("bracket [{lo}, {hi}] does not contain a sign change")]
    Bracket { lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
