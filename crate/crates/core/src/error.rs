use alloc::string::String;
use core::fmt;

/// Errors produced by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A root equal to zero was supplied; every coefficient must be nonvanishing.
    ZeroRoot,
    /// A polynomial has a coefficient that is exactly zero, at the given power of x.
    DegeneratePattern { power: usize },
    /// The constant term vanishes, so the operation (reversion) is undefined.
    ZeroConstantTerm,
    /// Index or count outside its admissible range.
    OutOfRange { what: &'static str, value: usize, max: usize },
    /// A sign pattern with more than two sign changes has no block shape.
    UnsupportedShape { changes: usize },
    /// Malformed textual input.
    Parse(String),
    /// Two inputs that must describe the same object disagree.
    Inconsistent(String),
    /// The requested case is excluded by a theorem; the tag names it.
    Excluded { citation: &'static str },
    /// A multiplicity vector fails Condition A and is refused.
    ConditionA,
    /// Halving the perturbation parameter reached its cap without verifying.
    EpsilonSearchFailed { what: &'static str },
    /// A cell carrying a theorem citation also received an exact witness.
    SoundnessViolation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroRoot => f.write_str("zero root supplied (coefficients must be nonvanishing)"),
            Error::DegeneratePattern { power } => {
                write!(f, "degenerate pattern: coefficient of x^{power} is zero")
            }
            Error::ZeroConstantTerm => f.write_str("constant term is zero"),
            Error::OutOfRange { what, value, max } => {
                write!(f, "{what} = {value} out of range (max {max})")
            }
            Error::UnsupportedShape { changes } => {
                write!(f, "unsupported shape: {changes} sign changes (at most 2 supported)")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Inconsistent(msg) => write!(f, "inconsistent input: {msg}"),
            Error::Excluded { citation } => write!(f, "case excluded by theorem {citation}"),
            Error::ConditionA => f.write_str("multiplicity vector fails Condition A"),
            Error::EpsilonSearchFailed { what } => write!(f, "epsilon search failed ({what})"),
            Error::SoundnessViolation(msg) => write!(f, "soundness violation: {msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
