use thiserror::Error;

/// Validation and shape errors for rectangles, permutations and isotopisms.
///
/// Indices in messages are one-based to match the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlrError {
    #[error("grid shape does not match {rows}x{cols}")]
    BadShape { rows: usize, cols: usize },
    #[error("symbol {symbol} repeated in row {row}")]
    RowClash { row: usize, symbol: usize },
    #[error("symbol {symbol} repeated in column {col}")]
    ColClash { col: usize, symbol: usize },
    #[error("symbol {symbol} out of range 1..={n}")]
    SymbolOutOfRange { symbol: usize, n: usize },
    #[error(
        "isotopism degrees ({alpha}, {beta}, {gamma}) do not match ({rows}, {cols}, {symbols})"
    )]
    DegreeMismatch {
        alpha: usize,
        beta: usize,
        gamma: usize,
        rows: usize,
        cols: usize,
        symbols: usize,
    },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("malformed cycle notation: {0}")]
    BadCycle(String),
}

/// Failures of the group computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtopError {
    #[error("more than {cap} autotopisms found")]
    CapExceeded { cap: usize },
    #[error("time budget exhausted")]
    Timeout,
    #[error("brute force would enumerate {pairs} row/column pairs, bound is {bound}")]
    TooLargeForOracle { pairs: u128, bound: u128 },
    #[error(transparent)]
    Plr(#[from] PlrError),
}
