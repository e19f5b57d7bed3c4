//! Numerical building blocks: stable OU kernels, Gauss-Legendre quadrature,
//! bracketed root finding, Chebyshev fits, normal distribution helpers and
//! deterministic reductions.

pub mod cheb;
pub(crate) mod exec;
pub mod normal;
pub mod quad;
pub mod root;
pub mod stable;
pub mod stats;
