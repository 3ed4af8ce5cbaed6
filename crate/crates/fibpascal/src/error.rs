use thiserror::Error;

/// Errors surfaced by the exact computation layers.
///
/// Everything here is either a caller mistake (`Domain`, `RowCapExceeded`)
/// or an arithmetic self-check that failed (`Inconsistency`). The latter is
/// never expected on valid input; it exists so identity violations surface
/// as hard errors instead of silently truncated values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the input was violated (e.g. index below 1).
    #[error("domain error: {0}")]
    Domain(String),

    /// A row request exceeded the configured resource cap. This is a
    /// deliberate refusal, not an overflow.
    #[error("row {row} exceeds the configured cap of {cap}")]
    RowCapExceeded { row: u64, cap: u64 },

    /// An internal exactness assertion failed (non-integral result,
    /// non-cancelling irrational component, malformed column index).
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
