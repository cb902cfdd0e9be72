use alloc::string::String;

/// Errors raised by constructors and operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("modulus mismatch: p = {left} against p = {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("malformed lattice expression at position {position}: {message}")]
    LatticeSyntax { position: usize, message: String },

    #[error("invalid characteristic element: {0}")]
    InvalidCharacteristic(String),

    #[error("graded classes belong to different ring presentations")]
    PresentationMismatch,

    #[error("inadmissible ring presentation: {0}")]
    InadmissiblePresentation(String),

    #[error("bundle rank {bundle} does not match b+ = {b_plus}")]
    RankMismatch { bundle: u64, b_plus: u64 },

    #[error("{0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
