use thiserror::Error;

/// Errors raised by the matrix, ideal and clustering operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("{what} labels: expected {expected}, found {found}")]
    LabelCount {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("table dimensions must be at least 1 (got {rows}x{cols})")]
    InvalidTableSize { rows: usize, cols: usize },
    #[error("column index {index} out of range for {cols} columns")]
    ColumnOutOfRange { index: usize, cols: usize },
    #[error("row index {index} out of range for {rows} rows")]
    RowOutOfRange { index: usize, rows: usize },
    #[error("cannot merge column {0} with itself")]
    SameColumn(usize),
    #[error("the constant column 0 cannot be merged")]
    ConstantColumn,
    #[error("matrices have different row counts ({0} vs {1})")]
    RowCountMismatch(usize, usize),
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not binary")]
    NotBinary,
    #[error("index {index} is not a valid {axis} position (1..={max})")]
    AxisIndex {
        axis: &'static str,
        index: usize,
        max: usize,
    },
    #[error("no two clusters on the same axis are left to merge")]
    NoMergeablePair,
    #[error("cluster has zero total count; chi-squared distance undefined")]
    ZeroMargin,
    #[error("contingency table has zero total count")]
    EmptyTable,
    #[error("clusters are on different axes")]
    MixedAxes,
    #[error("{k} variables exceeds the enumeration guard of {max}")]
    GuardExceeded { k: usize, max: usize },
    #[error("lattice admits no positive grading; supply one explicitly")]
    Ungraded,
    #[error("grading is not orthogonal to the lattice")]
    BadGrading,
    #[error("integer value does not fit in a machine exponent")]
    Overflow,
    #[error("internal invariant violated: {0}")]
    Invariant(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
