use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("mass must be finite and non-negative, got {0}")]
    InvalidMass(f64),
    #[error("operation requires m > 0, got m = {0}")]
    NonPositiveMass(f64),
    #[error("momentum components must be finite, got {0:?}")]
    InvalidMomentum([f64; 3]),
    #[error("operation requires |p| > 0")]
    ZeroMomentum,
    #[error("normalization factor must be positive and finite, got {0}")]
    InvalidNormalization(f64),
    #[error("parameter matrix is not antisymmetric (defect {0:e})")]
    NotAntisymmetric(f64),
    #[error("potential is not transverse: |p·B| = {0:e}")]
    NotTransverse(f64),
    #[error("function returned a non-finite value at m = {0}")]
    NonFinite(f64),
    #[error("invalid limit schedule: {0}")]
    InvalidSchedule(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;
