//! Graph interchange, reduction bundles and the equivalence fuzzer.

pub mod bundle;
pub mod fuzz;
pub mod graph6;

pub use bundle::ReductionBundle;
pub use fuzz::{run_fuzz, FuzzConfig, FuzzReport};
pub use graph6::{emit_graph6, parse_graph6};
