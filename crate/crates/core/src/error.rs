use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("inadmissible state at t = {time}: cell {cell}, component {component} = {value} ({reason})")]
    Inadmissible { time: f64, cell: usize, component: usize, value: f64, reason: &'static str },

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("degenerate wave speeds: lambda_l = {lambda_l}, lambda_r = {lambda_r}")]
    DegenerateSpeeds { lambda_l: f64, lambda_r: f64 },
}

impl SolverError {
    pub fn config(msg: impl Into<String>) -> Self {
        SolverError::Config(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        SolverError::Domain(msg.into())
    }
}

pub type Result<T, E = SolverError> = std::result::Result<T, E>;
