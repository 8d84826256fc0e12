//! Deciders for two interval problems measured in comparison queries:
//!
//! * coverage: do N closed subintervals cover a base interval?
//! * piercing: given N pairs of intervals on two lines, is there a pair of
//!   points (one per line) meeting every pair? Equivalently, do the N
//!   "crosses" `{(x, y) : x in [a_i, b_i] or y in [c_i, d_i]}` share a point?
//!
//! Every decider routes its order tests through a [`QueryCounter`], so the
//! number of comparisons a run needs can be read off and set against the
//! information-theoretic bounds in [`bounds`]. Brute-force oracles and
//! adversarial instance families (overlapping chains, staircase families
//! without the Helly property) are provided for cross-checking.

pub mod bench;
pub mod bounds;
pub mod cli;
pub mod coverage;
mod error;
pub mod generate;
pub mod instance;
pub mod io;
pub mod piercing;
pub mod query;
pub mod rank;
pub mod sorting;
mod verdict;

pub use error::{Error, Result};
pub use instance::{CoverageInstance, Cross, Instance, Interval, Permutation, PiercingInstance, Rank};
pub use query::QueryCounter;
pub use verdict::{oracle, solve, Verdict};
