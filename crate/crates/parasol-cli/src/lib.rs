//! Library side of the command-line front end: the manifold spec file
//! format, suite orchestration, and report rendering.

pub mod builtin;
pub mod report;
pub mod spec_file;
pub mod suite;

pub use report::RunReport;
pub use spec_file::{load_spec, parse_spec, LoadError, ManifoldSpec};
pub use suite::{exit_code, run_suite, SuiteError, SuiteOptions, ALL_CHECKS};
