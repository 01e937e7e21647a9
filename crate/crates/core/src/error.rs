use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight is not dominant for the compact positive roots: {0}")]
    NotCompactDominant(String),
    #[error("weight is singular: {0}")]
    SingularWeight(String),
    #[error("weight lies outside the fixed positive chamber and is not singular: {0}")]
    OutsideChamber(String),
    #[error("singular torus element; use elliptic_orbital_term")]
    SingularTorusElement,
    #[error("element is not central: {0}")]
    NotCentral(String),
    #[error("invalid torus element: {0}")]
    InvalidTorusElement(String),
    #[error("s = 1 is a pole of the Hurwitz zeta function")]
    HurwitzPole,
    #[error("invalid zeta data: {0}")]
    InvalidZetaSpec(String),
    #[error("singular μ requires residue data")]
    MissingResidue,
    #[error("invalid geometric data: {0}")]
    InvalidGeometry(String),
    #[error("class count did not stabilize at bound {0}; increase bound")]
    NotStabilized(i64),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid weight k = {0}: {1}")]
    InvalidWeight(i64, String),
}

pub type Result<T> = std::result::Result<T, Error>;
