use thiserror::Error;

/// Errors shared by every module. Analysis functions are total on valid
/// inputs; each variant here names a precondition that was not met or a
/// resource guard that fired.
#[derive(Debug, Error)]
pub enum Error {
    /// p^k codewords would exceed the configured enumeration budget.
    #[error("enumeration budget exceeded: code has {needed} words, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    /// Asked for the support design of a weight with no codewords.
    #[error("no codewords of weight {weight}")]
    EmptyWeight { weight: u32 },

    /// A harmonic-space size guard fired.
    #[error("{what}: needs {needed}, cap is {cap}")]
    SizeCapExceeded {
        what: &'static str,
        needed: usize,
        cap: usize,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A statement's hypotheses do not hold for the given code.
    #[error("not applicable: {reason}")]
    NotApplicable { reason: String },

    /// The criterion scanner needs d-perp minus t in {1, 2, 3}.
    #[error("criterion case not available: {detail}")]
    WrongCase { detail: String },

    /// Case-3 criterion with d3 == d2.
    #[error("degenerate denominator: third and second weights coincide")]
    DegenerateDenominator,

    /// The transform of a purported weight enumerator did not come out as
    /// nonnegative integers; the input was not W_C for the stated dimension.
    #[error("dual transform gave a non-integer or negative coefficient at weight {weight}")]
    NonIntegerCoefficient { weight: u32 },

    #[error("line {line}: malformed header: {detail}")]
    MalformedHeader { line: usize, detail: String },

    /// Bad character in a generator-matrix row. Both indices are 1-based.
    #[error("line {line}, column {col}: bad digit")]
    BadDigit { line: usize, col: usize },

    /// Generator rows are linearly dependent.
    #[error("generator rows dependent: rank {rank} < {rows} rows")]
    RankDeficient { rank: usize, rows: usize },

    #[error("invalid parameter: {detail}")]
    InvalidParameter { detail: String },

    /// Checked 64/128-bit arithmetic overflowed; results are never wrapped.
    #[error("arithmetic overflow in {context}")]
    Overflow { context: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
