use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("partition {partition} does not fit in the {rows}x{cols} rectangle")]
    NotInRectangle {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("rank {rank} exceeds the enumeration cap {cap}")]
    RankCap { rank: usize, cap: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("polynomial term cap {0} exceeded")]
    TermCap(usize),

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("polynomial is not invariant under the Weyl group")]
    NotInvariant,

    #[error("negative multiplicity {mult} at {at}")]
    NegativeMultiplicity { mult: i64, at: String },

    #[error("iteration cap {0} reached")]
    IterationCap(usize),

    #[error("size guard: {size} objects exceed the cap {cap}")]
    SizeGuard { size: u128, cap: u128 },

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("weight is not zero: {0}")]
    WeightNotZero(String),
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
