//! Exact solvers, hardness-reduction gadgets and an FPT algorithm for
//! H-free edge contraction.

pub mod error;
pub mod fpt;
pub mod graph;
pub mod harness;
pub mod reductions;
pub mod solvers;

pub use error::{Error, Result};
