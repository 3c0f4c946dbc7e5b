//! Exact symmetric-function formulas for card shuffling.
//!
//! The crate computes cycle indices, RSK-shape and recording-tableau
//! probabilities, and mixing bounds for riffle-type shuffles, and checks
//! each closed form against brute-force enumeration of the underlying
//! random words. All arithmetic is exact over arbitrary-precision rationals.

pub mod combinatorics;
pub mod cycle_index;
pub mod error;
pub mod harness;
pub mod poly;
pub mod rational;
pub mod rsk;
pub mod shuffles;
pub mod symfun;

pub use error::{Error, Result};
pub use rational::Rational;
