use thiserror::Error;

use crate::grade::Rational;
use crate::semigroup::Element;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier order must be positive")]
    EmptyCarrier,
    #[error("table has {found} rows, expected {expected}")]
    RowCount { found: usize, expected: usize },
    #[error("table row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("entry {value} at ({x}, {y}) is outside the carrier")]
    OutOfRangeEntry { x: usize, y: usize, value: i64 },
    #[error("associativity fails at (x, y, z) = ({x}, {y}, {z})")]
    AssociativityViolation { x: usize, y: usize, z: usize },
    #[error("element {element} is outside the carrier of order {order}")]
    ElementOutOfRange { element: Element, order: usize },
    #[error("carrier mismatch: expected order {expected}, found {found}")]
    CarrierMismatch { expected: usize, found: usize },
    #[error("subset is empty")]
    EmptySubset,
    #[error("enumeration is capped at order 3, got {0}")]
    OrderTooLarge(usize),
    #[error("grade {value} at element {element} is outside [0, 1]")]
    GradeOutOfRange { element: Element, value: Rational },
    #[error("{what} = {value} is outside [0, 1]")]
    ValueOutOfRange { what: &'static str, value: Rational },
    #[error("mu + nu = {sum} exceeds 1 at element {element}")]
    SumConstraintViolation { element: Element, sum: Rational },
    #[error("grade lists have lengths {mu} and {nu}, expected {expected}")]
    LengthMismatch {
        mu: usize,
        nu: usize,
        expected: usize,
    },
    #[error("alpha = {alpha} is out of range; max alpha = {max}")]
    AlphaOutOfRange { alpha: Rational, max: Rational },
    #[error("beta = {beta} is out of range")]
    BetaOutOfRange { beta: Rational },
    #[error("intuitionistic fuzzy subset is empty (mu vanishes everywhere)")]
    EmptyFuzzySubset,
    #[error("semigroup is not a group")]
    NotAGroup,
    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("rational arithmetic overflow")]
    ArithmeticOverflow,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid sample spec: {0}")]
    InvalidSampleSpec(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
