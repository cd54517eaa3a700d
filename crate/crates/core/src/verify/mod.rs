//! Law checking: instance generators, the suites themselves, and reports.
//!
//! Finite engines are checked exhaustively up to a bound, in an order that
//! makes the first failure a minimal witness. Infinite engines are sampled
//! from a seeded generator, and the seed is recorded in the report.

pub mod instances;
pub mod lattice;
pub mod report;
mod runner;
pub mod special;
pub mod suites;

pub use instances::{Plan, DEFAULT_SEED};
pub use lattice::{suite_lattice, FiniteLattice};
pub use report::{Expect, Failure, RunReport, SuiteReport, COVERAGE_NOTE};
pub use runner::{default_jobs, expectation, lattice_by_name, run_jobs, run_named, Job, SUITES};
