use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("constant polynomial has no irreducibility verdict")]
    ConstantPolynomial,
    #[error("{what} {value} outside supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },
    #[error("polynomial {0} is not irreducible")]
    Reducible(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("exhaustive verification needs n <= 12, got n = {0}")]
    ExhaustiveTooLarge(usize),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("invalid hex string {0:?}")]
    InvalidHex(String),
    #[error("residues are not the image of a polynomial of degree <= {0}")]
    InconsistentResidues(usize),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("place counting for {step} gave non-integral or negative {what} = {num}/{den}")]
    MobiusInversion {
        step: &'static str,
        what: &'static str,
        num: i64,
        den: i64,
    },
    #[error("polynomial does not split into distinct linear factors")]
    NoSplitting,
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
