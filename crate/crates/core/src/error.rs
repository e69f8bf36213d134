use thiserror::Error;

/// Errors raised by the exact-arithmetic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("partition has {actual} parts, expected exactly {expected}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{map}: input {input} is outside the map's domain")]
    DomainViolation { map: String, input: String },

    #[error("series with constant term {0} is not a unit")]
    NonUnit(String),

    #[error("division by q^{shift} leaves a nonzero coefficient at q^{index}")]
    InexactDivision { shift: usize, index: usize },

    #[error("requested order {requested} exceeds available order {available}")]
    OrderOutOfRange { requested: usize, available: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_ri(r: usize, i: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::ParameterRange(format!("r = {r}, need r >= 2")));
    }
    if i < 1 || i > r {
        return Err(Error::ParameterRange(format!("i = {i}, need 1 <= i <= r = {r}")));
    }
    Ok(())
}
