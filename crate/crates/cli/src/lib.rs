//! Library behind the `alphamu` binary: triple classification, corpus
//! sweeps, counterexample search, and report emission. The binary is a thin
//! argument-parsing shell over these modules so integration tests can drive
//! the same code paths directly.

pub mod report;
pub mod runner;
pub mod verdict;
