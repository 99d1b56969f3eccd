use alloc::string::String;
use core::fmt;

/// Errors produced when constructing or transforming path representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Slope parameters must be positive and coprime.
    InvalidSlope { a: u64, b: u64 },
    /// A step word has the wrong length or letter counts for its slope.
    WordShape(String),
    /// A prefix of the word dips below the line y = ax/b.
    BelowLine { position: usize },
    /// A step or height sequence violates its defining inequalities.
    InvalidSequence(String),
    /// An insertion position lies outside the current word.
    InsertionRange { value: u64, position: u64, limit: u64 },
    /// The entries do not form a Stirling permutation.
    NotStirling(String),
    /// A parenthesis presentation is unbalanced or has malformed star counts.
    MalformedParen(String),
    /// Scaling a sequence by a rational g produced a non-integer entry.
    NonIntegralScaling { numerator: u64, denominator: u64 },
    /// The operation's positional precondition does not hold at this index.
    Precondition(String),
    /// An index lies outside the object it addresses.
    IndexOutOfRange { index: usize, len: usize },
    /// The two words are not comparable in the required order.
    Incomparable,
    /// An exhaustive enumeration exceeded its object budget.
    BudgetExceeded,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidSlope { a, b } => {
                write!(f, "slope ({a},{b}) is not a pair of coprime positive integers")
            }
            Error::WordShape(msg) => write!(f, "malformed step word: {msg}"),
            Error::BelowLine { position } => {
                write!(f, "word dips below the boundary line after {position} steps")
            }
            Error::InvalidSequence(msg) => write!(f, "invalid sequence: {msg}"),
            Error::InsertionRange { value, position, limit } => write!(
                f,
                "cannot insert block of {value}s after {position} symbols (only {limit} present)"
            ),
            Error::NotStirling(msg) => write!(f, "not a Stirling permutation: {msg}"),
            Error::MalformedParen(msg) => write!(f, "malformed parenthesis presentation: {msg}"),
            Error::NonIntegralScaling { numerator, denominator } => {
                write!(f, "scaling by {numerator}/{denominator} is not integral on this sequence")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for length {len}")
            }
            Error::Incomparable => write!(f, "words are not comparable in the required order"),
            Error::BudgetExceeded => write!(f, "enumeration budget exceeded"),
        }
    }
}

impl core::error::Error for Error {}
