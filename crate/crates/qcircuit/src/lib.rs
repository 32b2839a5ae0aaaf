//! Std companion of `qcircuit-core`: the `.qc` circuit file format, a
//! multi-threaded shot runner and the `qcircuit` command-line tool.

pub use qcircuit_core as core;

pub mod cli;
pub mod dsl;
pub mod parallel;
