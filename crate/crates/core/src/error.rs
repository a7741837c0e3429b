use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("invalid system: {0}")]
    InvalidSystem(String),
    #[error("system mismatch: {0}")]
    Mismatch(String),
    #[error("enumeration cap exceeded: group order {order} > cap {cap}")]
    CapExceeded { order: u128, cap: u128 },
    #[error("rank cap exceeded: {0}")]
    RankCap(String),
    #[error("coefficient overflow")]
    Overflow,
    #[error("key outside parabolic subgroup: {0}")]
    OutsideParabolic(String),
    #[error("not in span: {0}")]
    NotInSpan(String),
    #[error("window overflow: {0}")]
    Window(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
