use thiserror::Error;

/// Domain errors raised when an operation is applied outside its domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NatError {
    #[error("predecessor of zero")]
    PredOfZero,
    #[error("subtraction underflow: subtrahend exceeds minuend")]
    Underflow,
    #[error("half of an odd or zero number")]
    HalfOfOdd,
    #[error("division by zero")]
    DivByZero,
    #[error("decons of zero")]
    DeconsOfZero,
    #[error("pair projection of zero")]
    ProjectionOfZero,
    #[error("destructor `{op}` applied to a value not built by `{expected}`")]
    Destructor {
        op: &'static str,
        expected: &'static str,
    },
    #[error("perfect number constructor needs p >= 2")]
    PerfectTooSmall,
    #[error("input is not {0}")]
    Unordered(&'static str),
    #[error("bit complement: element {element} not below bit length {bitlen}")]
    NotBelowBitlen { element: String, bitlen: u64 },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T, E = NatError> = std::result::Result<T, E>;
