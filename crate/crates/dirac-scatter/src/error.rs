use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("{what} out of range: got {got}, expected {range}")]
    Index { what: &'static str, got: usize, range: &'static str },
    #[error("spinor g_{n} undefined at |k| = {k:e}; use the directional limit")]
    DirectionalLimit { n: usize, k: f64 },
    #[error("kernel evaluated at the singular point r = 0")]
    SingularPoint,
    #[error("lambda = {lambda} is near an exceptional value (condition estimate {condition:.3e})")]
    NearExceptional { lambda: f64, condition: f64 },
    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
