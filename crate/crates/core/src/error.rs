use thiserror::Error;

/// Errors raised by the combinatorial and algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("parts {0:?} are not weakly decreasing positive integers")]
    NotPartition(Vec<u32>),

    #[error("partition {0} has a repeated part")]
    NotStrict(String),

    #[error("bar size {0} must be an odd positive integer")]
    InvalidBarSize(u32),

    #[error("row {row} does not admit removal of a {size}-bar from {shape}")]
    IllegalRemoval {
        shape: String,
        row: usize,
        size: u32,
    },

    #[error("weights differ: shape {shape} has weight {shape_weight}, class {class} has weight {class_weight}")]
    WeightMismatch {
        shape: String,
        shape_weight: u32,
        class: String,
        class_weight: u32,
    },

    #[error("class {0} has an even part; the recurrence only evaluates odd classes")]
    NonOddClass(String),

    #[error("class {class} does not contain the part {part}")]
    MissingPart { class: String, part: u32 },

    #[error("shape {0} is even; the special value only exists for odd shapes")]
    EvenShape(String),

    #[error("Q_({a},{b}) needs a > b >= 0")]
    PairOutOfDomain { a: i64, b: i64 },

    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBound { degree: u32, bound: u32 },

    #[error("the zero polynomial has no minimal degree")]
    ZeroPolynomial,

    #[error("bad record at line {line}: {reason}")]
    Record { line: usize, reason: String },

    #[error("bad tableau text at line {line}: {reason}")]
    TableauText { line: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
