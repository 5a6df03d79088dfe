//! Sweeps, table layouts, reference oracles and acceptance checks on top of
//! the confined oscillator solvers.

// Index loops read best in the matrix kernels, and `!(x > 0.0)` is the
// NaN-rejecting form of the argument checks.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod report;
pub mod sweep;
pub mod tables;
pub mod oracle;
pub mod acceptance;
