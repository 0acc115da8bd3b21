use thiserror::Error;

use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(Ring, Ring),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("map is not well defined: {0}")]
    IllDefined(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_same_ring(a: Ring, b: Ring) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch(a, b))
    }
}
