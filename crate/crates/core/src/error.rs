use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input data violates the standing hypotheses (ordering of the block
    /// widths, `n >= 2`, prime characteristic, matching variable universes).
    #[error("configuration error: {0}")]
    Config(String),

    /// An operation was called outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The Buchberger pair budget ran out.
    #[error("capacity exceeded: {reductions} pair reductions (cap {cap})")]
    Capacity { reductions: usize, cap: usize },

    /// A structural check that must hold for every valid input failed.
    #[error("invariant violated: {0}")]
    Invariant(String),

    /// A Betti table does not reach far enough to certify its own completeness.
    #[error("incomplete table: {0}")]
    Incomplete(String),
}
