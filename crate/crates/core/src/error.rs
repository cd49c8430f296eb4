use thiserror::Error;

/// Errors raised while constructing or operating on crystal elements.
///
/// All coordinates carried by the variants are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length error: {len} parts do not fit into length {n}")]
    Length { len: usize, n: usize },

    #[error("not a partition: {parts:?} (parts must be non-negative and weakly decreasing)")]
    NotPartition { parts: Vec<i64> },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("index error: {what} = {index} outside {min}..={max}")]
    Index {
        what: &'static str,
        index: i64,
        min: i64,
        max: i64,
    },

    #[error("non-negativity error: entry ({row}, {col}) is {value}")]
    Negative { row: usize, col: usize, value: i64 },

    #[error("interleave error at ({row}, {col}): {detail}")]
    Interleave {
        row: usize,
        col: usize,
        detail: String,
    },

    #[error("row error: cell ({row}, {col}) is smaller than its left neighbour")]
    RowNotWeak { row: usize, col: usize },

    #[error("column error: cell ({row}, {col}) is not larger than the cell above")]
    ColumnNotStrict { row: usize, col: usize },

    #[error("alphabet error: cell ({row}, {col}) holds {value}, outside 1..={n}")]
    Alphabet {
        row: usize,
        col: usize,
        value: i64,
        n: usize,
    },

    #[error("element {key} maps outside the element set")]
    Escape { key: String },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(what: &'static str, index: usize, min: usize, max: usize) -> Result<()> {
    if index < min || index > max {
        return Err(Error::Index {
            what,
            index: index as i64,
            min: min as i64,
            max: max as i64,
        });
    }
    Ok(())
}
