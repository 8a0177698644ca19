use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The polynomial has no real root greater than one, or some conjugate
    /// has modulus at least one.
    #[error("NotPisot: {0}")]
    NotPisot(String),
    /// The polynomial factors over the integers.
    #[error("Reducible: {0}")]
    Reducible(String),
    /// Irreducibility or conjugate isolation cannot be certified at this degree.
    #[error("UnsupportedDegree: {0}")]
    UnsupportedDegree(String),
    /// Two field elements belong to different base specs.
    #[error("SpecMismatch: operands belong to different specs")]
    SpecMismatch,
    #[error("DivisionByZero: cannot invert the zero element")]
    DivisionByZero,
    /// A left-periodic word was evaluated at beta, where the sum diverges.
    #[error("Divergent: left-periodic word has no beta-value")]
    Divergent,
    #[error("BudgetExhausted: no repetition or termination within {0} steps")]
    BudgetExhausted(usize),
    #[error("NegativeInput: {0}")]
    NegativeInput(String),
    /// An expansion expected to be finite turned out eventually periodic.
    #[error("NotFinite: {0}")]
    NotFinite(String),
    /// The Renyi expansion of 1 is not finite, so `ell` is undefined.
    #[error("InfiniteRenyi: d_beta(1) is not finite")]
    InfiniteRenyi,
    #[error("OutOfRange: {0}")]
    OutOfRange(String),
    /// The operation requires a quadratic Pisot unit spec.
    #[error("UnsupportedSpec: {0}")]
    UnsupportedSpec(String),
    /// The transducer has no edge for the current (state, letter) pair.
    #[error("NoTransition: no edge from state `{state}` on letter {letter}")]
    NoTransition { state: String, letter: i64 },
    #[error("ParseError: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
