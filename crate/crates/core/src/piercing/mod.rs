//! Piercing pairs of intervals on two lines, i.e. a common point of N crosses.

mod corner;
mod envelope;
mod minimality;
mod solver;
mod staircase;

pub use corner::{corner_boxes, Corner, CornerBox};
pub use envelope::{build_envelopes, build_envelopes_counted, Envelopes, StepFunction, Trend};
pub use minimality::{check_minimality, MinimalityReport};
pub use solver::{oracle_piercing, piercing_grid_points, solve_piercing, PiercingVerdict};
pub use staircase::{gen_staircase_literal, gen_staircase_minimal};
