//! Error taxonomy shared by every module.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Parameter set violates a documented invariant.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// An operation was called outside its domain (reversed times, negative
    /// maturities, out-of-range ages, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature did not converge within the refinement budget.
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    /// A root finder could not bracket or converge.
    #[error("root finding failed: {0}")]
    RootFinding(String),

    /// A numerical procedure failed for another reason (table fit, Cholesky,
    /// multiple roots where one was expected, ...).
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// The scenario admits no solution: the initial auxiliary wealth lies
    /// below the replication cost of the floor.
    #[error(
        "infeasible scenario: initial auxiliary wealth {y0} is below the \
         feasibility threshold -B*exp(M+V^2/2) = {threshold}"
    )]
    Infeasible { y0: f64, threshold: f64 },

    /// Malformed input file (membership table, config, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParams(msg.into())
    }
}
