use thiserror::Error;

use crate::param::ParamViolation;
use crate::symbols::SymbolError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error("invalid L-parameter: {}", join(.0))]
    InvalidParameter(Vec<ParamViolation>),
    #[error("only the generic member (tower sign +) is modelled")]
    NonGenericSign,
    #[error("factor {0} has exponent <= 0")]
    NonPositiveExponent(String),
    #[error("factors are not in standard order (exponents must weakly decrease)")]
    NotStandard,
    #[error("expected a {expected} representation")]
    WrongFlavor { expected: &'static str },
    #[error("Langlands quotient is not generic: {}", .0.join("; "))]
    NotGeneric(Vec<String>),
    #[error("parameter is not discrete (multiplicity > 1)")]
    NotDiscrete,
    #[error("{0} is not self-dual")]
    NotSelfDual(String),
    #[error("segment {0} is not centred at 0")]
    NotUnitary(String),
    #[error("shift {0} must be > 0")]
    NonPositiveShift(String),
    #[error("level {0} is odd; levels l = 2n+1-m are even")]
    OddLevel(i64),
    #[error("target dimension m = {0} must be odd and >= 1")]
    BadTarget(i64),
    #[error("internal invariant violated: {0}")]
    InvariantBreach(String),
}

impl Error {
    /// Breaches signal a bug rather than bad input.
    pub fn is_invariant_breach(&self) -> bool {
        matches!(self, Error::InvariantBreach(_))
    }
}

fn join(v: &[ParamViolation]) -> String {
    v.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
