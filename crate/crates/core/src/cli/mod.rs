//! Algebra description files, the example catalog and the report runner.

pub mod catalog;
pub mod format;
pub mod runner;

pub use catalog::{catalog, CatalogEntry, Expectation, Source};
pub use format::{parse, parse_unvalidated, serialize};
pub use runner::{exit_code, run, run_entry, Check, Command, Report, RunOptions, Verdict};
