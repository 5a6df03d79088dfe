use crate::state::Parity;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("non-positive pivot {pivot:e} at row {row} (dtau = {dtau:e}); reduce the step")]
    StepSize { row: usize, pivot: f64, dtau: f64 },

    #[error("state {state} not converged after {steps} steps (last energy {last_energy})")]
    Convergence {
        state: usize,
        steps: usize,
        last_energy: f64,
    },

    #[error("no bracket for state {state} below energy {ceiling}")]
    RootSearch { state: usize, ceiling: f64 },

    #[error("basis construction failed for {parity} function {index}")]
    Basis { parity: Parity, index: usize },

    #[error("hamiltonian asymmetry {asymmetry:e} exceeds {limit:e}; the grid is too coarse")]
    Discretization { asymmetry: f64, limit: f64 },

    #[error("eigenvalue iteration did not converge at index {index}")]
    EigenNonConvergence { index: usize },

    #[error("closed form only available for n <= 2, got n = {0}")]
    UnsupportedState(usize),

    #[error("state {index}: {source}")]
    Ladder {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
