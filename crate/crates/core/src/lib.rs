//! Closed-form optimal management of an aggregated defined-benefit pension
//! fund under a Vasicek/OU short rate, with every analytic formula
//! cross-validated by exact-law Monte Carlo.
//!
//! The model: the fund pays stochastic benefits, receives contributions via
//! the spread method of fund amortization, and invests in cash, a rolling
//! bond and a stock. The manager maximizes CRRA utility of the terminal
//! surplus in the overfunded region minus an `alpha`-weighted squared
//! shortfall in the underfunded region, subject to a floor `X(T) >= -B`.
//! The solution is obtained by the martingale method through the concave
//! envelope of the piecewise objective.
//!
//! Module map:
//! - [`market`]: OU transition law, zero-coupon/rolling bond, pricing-kernel
//!   lognormal moments.
//! - [`liability`]: actuarial liability, normal cost, contribution rule and
//!   the age-integral kernels.
//! - [`replication`]: deferred cash-flow values that turn the surplus into a
//!   self-financing auxiliary process.
//! - [`dual`]: concave envelope constants, pointwise dual maximizer and the
//!   Lagrange multiplier solve.
//! - [`policy`]: optimal auxiliary wealth, risk exposures and asset
//!   allocation along a state.
//! - [`analytics`]: solvency risk, expected utility, efficient frontier and
//!   region probabilities.
//! - [`sim`]: exact joint path sampling, Monte Carlo statistics and the
//!   pathwise strategy-replication study.

pub mod analytics;
pub mod dual;
pub mod error;
pub mod liability;
pub mod market;
pub mod num;
pub mod policy;
pub mod replication;
pub mod sim;
pub mod tables;

pub use error::{Error, Result};
