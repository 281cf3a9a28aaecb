//! IO, parallelism, and verification-suite plumbing for the `domset`
//! command-line tool: graph6 corpus streaming, a bounded worker pool,
//! per-graph bound suites with deterministic merged reports, and the
//! closed-form generalized Petersen check.
//!
//! All graph theory lives in `domset-core`; this crate adds only the parts
//! that need the standard library (files, threads, clocks, JSON).

#![warn(missing_debug_implementations)]

pub mod corpus;
pub mod pool;
pub mod report;
pub mod suites;

pub use corpus::{line_text, numbered_lines, open_input, NumberedLines};
pub use pool::parallel_map;
pub use report::{
    report_tsv, ExceptionEntry, ExtremalEntry, Observed, Outcome, Report, ReportBuilder,
    Violation,
};
pub use suites::{
    check_graph, gp_closed_form, run_corpus_suite, run_gp, CorpusLine, Deadline, Suite, SuiteRun,
    GP_COINCIDENCE, GP_MAX, GP_MIN, LARGEDOM_CATALOG,
};
